#pragma once

// JSON encodings shared by the CLI and the Python bindings. Non-finite reals
// are written as the strings "inf", "-inf" and "nan".

#include <json.hpp>

#include "mpchoice/bounds.hpp"
#include "mpchoice/certify.hpp"
#include "mpchoice/charroots.hpp"
#include "mpchoice/core.hpp"
#include "mpchoice/exact.hpp"

namespace mpchoice {

nlohmann::json real_json(double x);
double real_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const GraphSpec& spec);
/// {"sizes_log2": [...], "sizes_exact": [...] | null}
GraphSpec spec_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const Exponents& e);
void to_json(nlohmann::json& j, const AsymptoticDiagnostics& d);
void to_json(nlohmann::json& j, const RootResult& r);
void to_json(nlohmann::json& j, const UpperCertificate& c);
void to_json(nlohmann::json& j, const LowerPrescription& p);
void to_json(nlohmann::json& j, const LowerCertificate& c);
void to_json(nlohmann::json& j, const BoundReport& b);
void to_json(nlohmann::json& j, const StarTerms& s);
void to_json(nlohmann::json& j, const McReport& m);
void to_json(nlohmann::json& j, const CoverResult& c);
void to_json(nlohmann::json& j, const ColoringResult& c);

/// {"t": universe, "parts": [[[colors...], ...], ...]}
void to_json(nlohmann::json& j, const ListAssignment& a);
ListAssignment assignment_from_json(const nlohmann::json& j);

}  // namespace mpchoice
