#pragma once

#include <vector>

#include "mpchoice/core.hpp"

namespace mpchoice {

inline constexpr double kDefaultRootTol = 1e-12;

/// Parameters of g(x) = (s + epsilon) x - 1 - sum_j x^{(k_j - 1)/k_j}.
/// epsilon = 0 gives the equation whose root fixes the asymptotic choice number.
struct RootProblem {
  std::vector<double> k;
  double epsilon = 0.0;

  int s() const noexcept { return static_cast<int>(k.size()); }

  static RootProblem from_spec(const GraphSpec& spec, double epsilon = 0.0);
};

struct RootResult {
  double x0 = 0.0;
  double residual = 0.0;
  double bracket_low = 0.0;
  double bracket_high = 0.0;
  int iterations = 0;
};

/// Throws BadArgs unless every k_j >= 1, s >= 1 and 0 <= epsilon < 1.
void validate(const RootProblem& problem);

/// Value of the characteristic function at x >= 1 (DomainError otherwise).
double char_value(double x, const RootProblem& problem);

/// Root of the characteristic function in [1, inf) by bisection on the
/// bracket [(s+1)/s, max(k_0, e+2)] (epsilon = 0) or [1, max(k_0, e+2)].
RootResult solve_x0(const RootProblem& problem, double tol = kDefaultRootTol);

}  // namespace mpchoice
