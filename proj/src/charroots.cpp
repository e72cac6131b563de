#include "mpchoice/charroots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "mpchoice/error.hpp"

namespace mpchoice {

namespace {

constexpr int kMaxBisections = 4000;

// x - x^{(k-1)/k} = -x * expm1(-ln(x)/k); exact at k = 1 where the term is x - 1.
double gap_term(double x, double lnx, double k) {
  if (k == 1.0) return x - 1.0;
  return -x * std::expm1(-lnx / k);
}

}  // namespace

RootProblem RootProblem::from_spec(const GraphSpec& spec, double epsilon) {
  return RootProblem{exponents(spec).k, epsilon};
}

void validate(const RootProblem& problem) {
  if (problem.k.empty()) throw Error(ErrorCode::BadArgs, "root problem needs s >= 1");
  for (double k : problem.k) {
    if (!(k >= 1.0) || !std::isfinite(k))
      throw Error(ErrorCode::BadArgs, "exponent k must be finite and >= 1");
  }
  if (!(problem.epsilon >= 0.0 && problem.epsilon < 1.0))
    throw Error(ErrorCode::BadArgs, "epsilon must lie in [0, 1)");
}

double char_value(double x, const RootProblem& problem) {
  validate(problem);
  if (!(x >= 1.0)) throw Error(ErrorCode::DomainError, "char_value needs x >= 1");
  // (s+eps)x - 1 - sum x^{a_j}  ==  eps*x - 1 + sum (x - x^{a_j}), which avoids
  // cancelling two large numbers when x is large.
  const double lnx = std::log(x);
  double sum = 0.0;
  for (double k : problem.k) sum += gap_term(x, lnx, k);
  return problem.epsilon * x - 1.0 + sum;
}

RootResult solve_x0(const RootProblem& problem, double tol) {
  validate(problem);
  if (!(tol > 0.0)) throw Error(ErrorCode::BadArgs, "tol must be positive");

  const double s = problem.s();
  const double k0 = *std::max_element(problem.k.begin(), problem.k.end());
  double lo = problem.epsilon == 0.0 ? (s + 1.0) / s : 1.0;
  double hi = std::max(k0, std::numbers::e + 2.0);

  RootResult res;
  res.bracket_low = lo;
  res.bracket_high = hi;

  double flo = char_value(lo, problem);
  double fhi = char_value(hi, problem);
  if (flo == 0.0) {
    res.x0 = lo;
    return res;
  }
  if (!(flo < 0.0 && fhi > 0.0))
    throw Error(ErrorCode::NoSignChange, "bracket [" + std::to_string(lo) + ", " +
                                             std::to_string(hi) + "] does not straddle zero");

  for (int it = 1; it <= kMaxBisections; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) {
      // Adjacent doubles: keep the endpoint with the smaller residual.
      const bool take_lo = std::abs(flo) <= std::abs(fhi);
      res.x0 = take_lo ? lo : hi;
      res.residual = take_lo ? flo : fhi;
      res.iterations = it;
      if (std::abs(res.residual) > tol)
        throw Error(ErrorCode::NotConverged,
                    "residual " + std::to_string(res.residual) + " above tolerance");
      return res;
    }
    const double fm = char_value(mid, problem);
    if (std::abs(fm) <= tol) {
      res.x0 = mid;
      res.residual = fm;
      res.iterations = it;
      return res;
    }
    if (fm < 0.0) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  throw Error(ErrorCode::NotConverged, "bisection iteration limit reached");
}

}  // namespace mpchoice
