#include "mpchoice/json_io.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "mpchoice/error.hpp"

namespace mpchoice {

using nlohmann::json;

namespace {

json reals(const std::vector<double>& xs) {
  json arr = json::array();
  for (double x : xs) arr.push_back(real_json(x));
  return arr;
}

}  // namespace

json real_json(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double real_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw Error(ErrorCode::BadArgs, "expected a real number, got " + j.dump());
}

void to_json(json& j, const GraphSpec& spec) {
  j = json{{"sizes_log2", reals(spec.sizes_log2())}, {"sizes_exact", nullptr}};
  if (spec.has_exact()) j["sizes_exact"] = spec.exact();
}

GraphSpec spec_from_json(const json& j) {
  try {
    if (j.contains("sizes_exact") && !j.at("sizes_exact").is_null())
      return make_spec(j.at("sizes_exact").get<std::vector<std::uint64_t>>());
    std::vector<double> l2;
    for (const auto& v : j.at("sizes_log2")) l2.push_back(real_from_json(v));
    return make_spec_log2(l2);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::BadArgs, std::string("malformed spec JSON: ") + e.what());
  }
}

void to_json(json& j, const Exponents& e) { j = json{{"k", reals(e.k)}}; }

void to_json(json& j, const AsymptoticDiagnostics& d) {
  j = json{{"alpha", real_json(d.alpha)},
           {"alpha_threshold", real_json(d.alpha_threshold)},
           {"regime_ok", d.regime_ok},
           {"loglog_defined", d.loglog_defined}};
}

void to_json(json& j, const RootResult& r) {
  j = json{{"x0", r.x0},
           {"residual", r.residual},
           {"bracket_low", r.bracket_low},
           {"bracket_high", r.bracket_high},
           {"iterations", r.iterations}};
}

void to_json(json& j, const UpperCertificate& c) {
  j = json{{"r", c.r},
           {"formula_r", c.formula_r},
           {"x0", c.x0},
           {"epsilon", c.epsilon},
           {"p", reals(c.p)},
           {"union_bound_value", real_json(c.union_bound_value)},
           {"union_bound_log2", real_json(c.union_bound_log2)},
           {"valid", c.valid}};
}

void to_json(json& j, const LowerPrescription& p) {
  j = json{{"r0", real_json(p.r0)},   {"u", real_json(p.u)},
           {"r_real", real_json(p.r_real)}, {"r", p.r},
           {"t_real", real_json(p.t_real)}, {"t", p.t},
           {"l_real", reals(p.l_real)}, {"l", p.l}};
}

void to_json(json& j, const LowerCertificate& c) {
  j = json{{"r", c.prescription.r},
           {"t", c.prescription.t},
           {"l", c.prescription.l},
           {"lhs_log", real_json(c.lhs_log)},
           {"valid", c.valid},
           {"prescription", c.prescription}};
}

void to_json(json& j, const BoundReport& b) {
  j = json{{"estimate", real_json(b.estimate)},
           {"upper", b.upper},
           {"lower", b.lower},
           {"ratio", b.ratio ? real_json(*b.ratio) : json(nullptr)},
           {"diagnostics", b.diagnostics}};
}

void to_json(json& j, const StarTerms& s) {
  j = json{{"log_ratio", reals(s.log_ratio)},
           {"term_log", reals(s.term_log)},
           {"lhs_log", real_json(s.lhs_log)},
           {"valid", s.certifies()}};
}

void to_json(json& j, const McReport& m) {
  j = json{{"trials", m.trials},
           {"mean_bad_events", real_json(m.mean_bad_events)},
           {"std_error", real_json(m.std_error)},
           {"theoretical_expectation", real_json(m.theoretical_expectation)},
           {"seed", m.seed}};
}

void to_json(json& j, const CoverResult& c) {
  j = json{{"size", c.size}, {"witness", c.witness.to_vector()}};
}

void to_json(json& j, const ColoringResult& c) {
  j = json{{"colorable", c.colorable}};
  if (c.colorable) {
    j["color_part"] = c.color_part;
    j["vertex_colors"] = c.vertex_colors;
  } else {
    j["color_part"] = nullptr;
    j["vertex_colors"] = nullptr;
  }
}

void to_json(json& j, const ListAssignment& a) {
  json parts = json::array();
  for (const auto& part : a.parts) {
    json lists = json::array();
    for (auto list : part) lists.push_back(list.to_vector());
    parts.push_back(std::move(lists));
  }
  j = json{{"t", a.universe}, {"parts", std::move(parts)}};
}

ListAssignment assignment_from_json(const json& j) {
  ListAssignment a;
  try {
    a.universe = j.at("t").get<int>();
    if (a.universe < 0 || a.universe > kMaxUniverse)
      throw Error(ErrorCode::BadArgs, "t must lie in [0, 64]");
    for (const auto& part : j.at("parts")) {
      auto& out = a.parts.emplace_back();
      for (const auto& list : part) {
        ColorSet cs;
        for (const auto& c : list) {
          const int color = c.get<int>();
          if (color < 0 || color >= a.universe)
            throw Error(ErrorCode::BadArgs, "color " + std::to_string(color) + " outside universe");
          cs.insert(color);
        }
        out.push_back(cs);
      }
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::BadArgs, std::string("malformed list assignment JSON: ") + e.what());
  }
  validate(a);
  return a;
}

}  // namespace mpchoice
