#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mpchoice/core.hpp"

namespace mpchoice {

/// ln((a)_r / (t)_r) for 0 <= a <= t, 1 <= r <= t; -inf when a < r.
double falling_factorial_log_ratio(std::int64_t a, std::int64_t t, std::int64_t r);

/// Log-domain pieces of sum_i 2^t exp(-((t - l_i)_r / (t)_r) n_i).
struct StarTerms {
  std::vector<double> log_ratio;  // ln((t - l_i)_r / (t)_r)
  std::vector<double> term_log;   // t ln 2 - exp(log_ratio_i + ln n_i)
  double lhs_log = 0.0;           // log-sum-exp of term_log

  bool certifies() const noexcept { return lhs_log <= 0.0; }
};

StarTerms star_lhs_log(const GraphSpec& spec, std::int64_t r, std::int64_t t,
                       std::span<const std::int64_t> l);

struct McReport {
  std::int64_t trials = 0;
  double mean_bad_events = 0.0;
  double std_error = 0.0;
  double theoretical_expectation = 0.0;
  std::uint64_t seed = 0;
};

/// Random color split experiment: every vertex draws a uniform r-subset of
/// {0..universe-1}, colors go to class i with probability p_i, and a vertex is
/// bad when its list misses its own class. Expectation sum n_i (1 - p_i)^r.
McReport mc_split_bad_events(const GraphSpec& spec, int r, std::span<const double> p,
                             int universe, std::int64_t trials, std::uint64_t seed,
                             int threads = 1);

/// Samples adversarial lists and counts trials where verify_lower_witness
/// fails. The reported expectation is the union bound exp(lhs_log).
McReport mc_cover_failure(const GraphSpec& spec, int r, int t, std::span<const std::int64_t> l,
                          std::int64_t trials, std::uint64_t seed, int threads = 1);

}  // namespace mpchoice
