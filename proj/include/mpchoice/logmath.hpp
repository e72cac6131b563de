#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>

namespace mpchoice {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
inline constexpr double kLn2 = std::numbers::ln2;

// ln(sum exp(args)); -inf for an empty range or all -inf arguments.
inline double log_sum_exp(std::span<const double> args) {
  if (args.empty()) return kNegInf;
  const double hi = *std::max_element(args.begin(), args.end());
  if (hi == kNegInf) return kNegInf;
  if (std::isinf(hi)) return hi;
  double sum = 0.0;
  for (double a : args) sum += std::exp(a - hi);
  return hi + std::log(sum);
}

// Base-2 twin: log2(sum 2^args). Exact for equal arguments in powers of two.
inline double log2_sum_exp2(std::span<const double> args) {
  if (args.empty()) return kNegInf;
  const double hi = *std::max_element(args.begin(), args.end());
  if (hi == kNegInf) return kNegInf;
  if (std::isinf(hi)) return hi;
  double sum = 0.0;
  for (double a : args) sum += std::exp2(a - hi);
  return hi + std::log2(sum);
}

}  // namespace mpchoice
