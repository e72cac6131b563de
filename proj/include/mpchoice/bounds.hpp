#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mpchoice/core.hpp"

namespace mpchoice {

inline constexpr double kDefaultEpsilon = 0.01;
/// Largest t the certificate layer will handle (exact integers in a double).
inline constexpr std::int64_t kMaxPaletteSize = std::int64_t{1} << 52;

/// log n_s / log x0 with x0 the root of the epsilon = 0 characteristic equation.
double estimate_choice(const GraphSpec& spec);

/// Random-split certificate for ch <= r: colors go to class i with probability
/// p_i and sum_i n_i (1 - p_i)^r <= 1.
struct UpperCertificate {
  int r = 0;
  /// r from the ceiling formula before any increment.
  int formula_r = 0;
  double x0 = 0.0;
  double epsilon = 0.0;
  std::vector<double> p;
  /// log2(1 - p_i); kept because 1 - p_i underflows for huge parts.
  std::vector<double> miss_log2;
  double union_bound_log2 = 0.0;
  double union_bound_value = 0.0;
  bool valid = false;
};

/// Probabilities p_i = 1 - s n_i^{-1/(r-1)} / sum_j n_j^{-1/(r-1)} at a fixed
/// r >= 2, with the union bound evaluated in log2 arithmetic. valid requires
/// every p_i in [0, 1] and a union bound of at most 1.
UpperCertificate upper_certificate_for_r(const GraphSpec& spec, int r);

/// r = ceil(log n_s / log x0(epsilon)) + 1, incremented until the certificate
/// holds. Bipartite specs ignore epsilon. The result is always valid.
UpperCertificate upper_bound(const GraphSpec& spec, double epsilon = kDefaultEpsilon);

struct LowerPrescription {
  double r0 = 0.0;
  double u = 0.0;
  double r_real = 0.0;
  int r = 0;
  double t_real = 0.0;
  std::int64_t t = 0;
  std::vector<double> l_real;
  std::vector<std::int64_t> l;
};

struct LowerCertificate {
  LowerPrescription prescription;
  double lhs_log = 0.0;
  bool valid = false;
};

/// Real-valued palette size and split for a fixed r.
struct RealSplit {
  double t = 0.0;
  std::vector<double> l;
};

/// t = ((1/s) sum_j (n_s/n_j)^{1/r} - 1) r^2,
/// t - l_i = t s (n_s/n_i)^{1/r} / sum_j (n_s/n_j)^{1/r}.
RealSplit multipartite_split(const GraphSpec& spec, int r);

/// Two-part form: t = (n_1/n_0)^{1/r} r^2 and l_0 = t / ((n_1/n_0)^{1/r} + 1).
/// BadArgs unless s = 1.
RealSplit bipartite_split(const GraphSpec& spec, int r);

/// Rounds t up (at least r) and apportions l by largest remainder.
/// InstanceTooLarge when t would exceed kMaxPaletteSize.
LowerPrescription prescription_for_r(const GraphSpec& spec, int r);

/// r0 = log n_s / log x0, u = (4 log log n_s / log n_0) r0, r = max(1, floor(r0 - u)).
/// RegimeDegenerate when u >= r0.
LowerPrescription lower_prescription(const GraphSpec& spec);

/// Largest r <= hint (default ceil(estimate)) certified by a (t, l) drawn from
/// the prescription and a 5 x 5 grid around it. valid = false carries the
/// smallest lhs_log seen.
LowerCertificate lower_bound_search(const GraphSpec& spec,
                                    std::optional<int> r_max_hint = std::nullopt);

struct BoundReport {
  double estimate = 0.0;
  UpperCertificate upper;
  LowerCertificate lower;
  std::optional<double> ratio;
  AsymptoticDiagnostics diagnostics;
};

BoundReport bound_report(const GraphSpec& spec, double epsilon = kDefaultEpsilon);

}  // namespace mpchoice
