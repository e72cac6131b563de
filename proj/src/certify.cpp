#include "mpchoice/certify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "mpchoice/error.hpp"
#include "mpchoice/exact.hpp"
#include "mpchoice/logmath.hpp"
#include "mpchoice/rng.hpp"

namespace mpchoice {

namespace {

// Largest x with exp(x) finite.
constexpr double kExpOverflow = 709.0;
constexpr std::uint64_t kMaxSplitVertices = 1'000'000;
constexpr int kMaxCoverUniverse = 20;
constexpr std::uint64_t kMaxCoverPart = 200;

// Runs fn(trial) for every trial, possibly on several threads, and aggregates
// the per-trial values in trial-index order so the result is schedule-free.
template <typename Fn>
McReport run_trials(std::int64_t trials, std::uint64_t seed, int threads, Fn fn) {
  if (trials < 1) throw Error(ErrorCode::BadArgs, "trials must be >= 1");
  std::vector<double> values(static_cast<std::size_t>(trials));
  const int workers =
      static_cast<int>(std::clamp<std::int64_t>(threads < 1 ? 1 : threads, 1, trials));

  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto block = [&](int w) {
    try {
      const std::int64_t begin = trials * w / workers;
      const std::int64_t end = trials * (w + 1) / workers;
      for (std::int64_t i = begin; i < end; ++i) values[i] = fn(i);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  if (workers == 1) {
    block(0);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(block, w);
  }
  if (failure) std::rethrow_exception(failure);

  McReport rep;
  rep.trials = trials;
  rep.seed = seed;
  double sum = 0.0;
  for (double v : values) sum += v;
  rep.mean_bad_events = sum / static_cast<double>(trials);
  if (trials > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - rep.mean_bad_events) * (v - rep.mean_bad_events);
    const double var = ss / static_cast<double>(trials - 1);
    rep.std_error = std::sqrt(var / static_cast<double>(trials));
  }
  return rep;
}

}  // namespace

double falling_factorial_log_ratio(std::int64_t a, std::int64_t t, std::int64_t r) {
  if (!(0 <= a && a <= t && 1 <= r && r <= t))
    throw Error(ErrorCode::BadArgs, "falling factorial ratio needs 0 <= a <= t and 1 <= r <= t");
  if (a < r) return kNegInf;
  if (a == t) return 0.0;
  // ln((a-i)/(t-i)) = log1p(-(t-a)/(t-i)); accurate when a is close to t.
  const double gap = static_cast<double>(t - a);
  double sum = 0.0;
  for (std::int64_t i = 0; i < r; ++i) sum += std::log1p(-gap / static_cast<double>(t - i));
  return sum;
}

StarTerms star_lhs_log(const GraphSpec& spec, std::int64_t r, std::int64_t t,
                       std::span<const std::int64_t> l) {
  if (l.size() != spec.parts()) throw Error(ErrorCode::BadArgs, "need one l_i per part");
  if (r < 1 || r > t) throw Error(ErrorCode::BadArgs, "need 1 <= r <= t");
  std::int64_t total = 0;
  for (auto li : l) {
    if (li < 0 || li > t) throw Error(ErrorCode::BadArgs, "need 0 <= l_i <= t");
    total += li;
  }
  if (total != t) throw Error(ErrorCode::BadArgs, "l_i must sum to t");

  StarTerms st;
  const double t_ln2 = static_cast<double>(t) * kLn2;
  for (std::size_t i = 0; i < l.size(); ++i) {
    const double ratio = falling_factorial_log_ratio(t - l[i], t, r);
    const double inner = ratio + kLn2 * spec.log2_size(i);
    st.log_ratio.push_back(ratio);
    st.term_log.push_back(inner > kExpOverflow ? kNegInf : t_ln2 - std::exp(inner));
  }
  st.lhs_log = log_sum_exp(st.term_log);
  return st;
}

McReport mc_split_bad_events(const GraphSpec& spec, int r, std::span<const double> p,
                             int universe, std::int64_t trials, std::uint64_t seed, int threads) {
  const auto& sizes = spec.exact();
  if (p.size() != sizes.size()) throw Error(ErrorCode::BadProbabilities, "need one p_i per part");
  double psum = 0.0;
  for (double pi : p) {
    if (!(pi >= 0.0 && pi <= 1.0)) throw Error(ErrorCode::BadProbabilities, "p_i outside [0, 1]");
    psum += pi;
  }
  if (std::abs(psum - 1.0) > 1e-9) throw Error(ErrorCode::BadProbabilities, "p must sum to 1");
  if (r < 1 || universe < r) throw Error(ErrorCode::BadArgs, "need 1 <= r <= universe");
  if (spec.total_vertices() > kMaxSplitVertices)
    throw Error(ErrorCode::InstanceTooLarge, "too many vertices for the split experiment");

  std::vector<double> cumulative(p.size());
  std::partial_sum(p.begin(), p.end(), cumulative.begin());
  const int classes = static_cast<int>(p.size());

  auto trial = [&](std::int64_t i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    std::vector<int> color_class(universe);
    for (auto& c : color_class) {
      const double u = rng.uniform();
      int k = 0;
      while (k + 1 < classes && !(u < cumulative[k])) ++k;
      c = k;
    }
    std::vector<int> pool(universe);
    std::iota(pool.begin(), pool.end(), 0);
    double bad = 0.0;
    for (int part = 0; part < classes; ++part) {
      for (std::uint64_t v = 0; v < sizes[part]; ++v) {
        rng.partial_shuffle(std::span<int>(pool), static_cast<std::size_t>(r));
        bool hit = false;
        for (int j = 0; j < r && !hit; ++j) hit = color_class[pool[j]] == part;
        if (!hit) bad += 1.0;
      }
    }
    return bad;
  };

  McReport rep = run_trials(trials, seed, threads, trial);
  double expectation = 0.0;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    expectation += static_cast<double>(sizes[i]) * std::pow(1.0 - p[i], r);
  rep.theoretical_expectation = expectation;
  return rep;
}

McReport mc_cover_failure(const GraphSpec& spec, int r, int t, std::span<const std::int64_t> l,
                          std::int64_t trials, std::uint64_t seed, int threads) {
  const auto& sizes = spec.exact();
  if (t > kMaxCoverUniverse) throw Error(ErrorCode::InstanceTooLarge, "t above 20");
  for (auto n : sizes) {
    if (n > kMaxCoverPart) throw Error(ErrorCode::InstanceTooLarge, "part size above 200");
  }
  const StarTerms bound = star_lhs_log(spec, r, t, l);
  std::vector<std::int64_t> thresholds(l.begin(), l.end());

  auto trial = [&](std::int64_t i) {
    const ListAssignment lists =
        sample_adversarial(spec, r, t, derive_seed(seed, static_cast<std::uint64_t>(i)));
    return verify_lower_witness(lists, thresholds) ? 0.0 : 1.0;
  };

  McReport rep = run_trials(trials, seed, threads, trial);
  rep.theoretical_expectation = std::exp(bound.lhs_log);
  return rep;
}

}  // namespace mpchoice
