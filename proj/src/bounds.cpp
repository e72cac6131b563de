#include "mpchoice/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "mpchoice/certify.hpp"
#include "mpchoice/charroots.hpp"
#include "mpchoice/error.hpp"
#include "mpchoice/logmath.hpp"

namespace mpchoice {

namespace {

constexpr int kMaxUpperIncrements = 10'000'000;

double x0_of(const GraphSpec& spec, double epsilon) {
  return solve_x0(RootProblem::from_spec(spec, epsilon)).x0;
}

// Largest-remainder rounding of t * weight_i (weights sum to 1) to integers
// summing to t. Ties go to the lower index.
std::vector<std::int64_t> apportion(std::span<const double> share, std::int64_t t) {
  const std::size_t n = share.size();
  std::vector<std::int64_t> out(n);
  std::vector<double> rem(n);
  // Negative shares (a part too small for the formula) are clamped to zero.
  std::vector<double> w(n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) total += w[i] = std::max(share[i], 0.0);
  std::int64_t assigned = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double exact = std::min(w[i] / total, 1.0) * static_cast<double>(t);
    out[i] = static_cast<std::int64_t>(std::floor(exact));
    rem[i] = exact - static_cast<double>(out[i]);
    assigned += out[i];
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return rem[a] > rem[b]; });
  for (std::size_t k = 0; assigned < t; k = (k + 1) % n, ++assigned) ++out[order[k]];
  if (assigned != t) throw Error(ErrorCode::InternalInconsistency, "apportionment overshoot");
  return out;
}

// Shares l_i / t and the palette size of the multipartite split. t is +inf
// when only its logarithm is representable.
struct SplitShape {
  double log2_t = 0.0;
  double t = 0.0;
  std::vector<double> share;
};

SplitShape split_shape(const GraphSpec& spec, int r) {
  if (r < 1) throw Error(ErrorCode::BadArgs, "r must be >= 1");
  const double s = spec.s();
  const double top = spec.log2_largest();
  std::vector<double> g;  // log2 (n_s / n_j)^{1/r}
  for (double lj : spec.sizes_log2()) g.push_back((top - lj) / r);
  const double log2_sum = log2_sum_exp2(g);

  SplitShape shape;
  // sum/s - 1 = (1 + sum_{j<s} ((n_s/n_j)^{1/r} - 1)) / s since the j = s term is 1.
  const double g_max = *std::max_element(g.begin(), g.end());
  double log2_excess;
  if (g_max < 900.0) {
    double excess = 1.0;
    for (std::size_t j = 0; j + 1 < g.size(); ++j) excess += std::expm1(kLn2 * g[j]);
    shape.t = excess / s * r * r;
    log2_excess = std::log2(excess) - std::log2(s);
  } else {
    log2_excess = log2_sum - std::log2(s);
  }
  shape.log2_t = log2_excess + 2.0 * std::log2(static_cast<double>(r));
  if (g_max >= 900.0) shape.t = std::exp2(shape.log2_t);
  // 1 - s e_i / sum e = (sum_{j != i} e_j - (s - 1) e_i) / sum e, which avoids
  // cancelling 1 against a ratio near 1 when one part is far smaller.
  std::vector<double> e;
  double e_sum = 0.0;
  for (double gj : g) e_sum += e.emplace_back(std::exp2(gj - g_max));
  for (std::size_t i = 0; i < e.size(); ++i) {
    double others = 0.0;
    for (std::size_t j = 0; j < e.size(); ++j)
      if (j != i) others += e[j];
    shape.share.push_back((others - (s - 1.0) * e[i]) / e_sum);
  }
  return shape;
}

LowerPrescription round_split(int r, const SplitShape& shape, std::int64_t t) {
  LowerPrescription pr;
  pr.r = r;
  pr.t_real = shape.t;
  pr.t = t;
  for (double sh : shape.share) pr.l_real.push_back(sh * pr.t_real);
  pr.l = apportion(shape.share, t);
  return pr;
}

std::int64_t palette_for(int r, const SplitShape& shape) {
  if (!(shape.t <= static_cast<double>(kMaxPaletteSize)))
    throw Error(ErrorCode::InstanceTooLarge, "palette size t exceeds 2^52");
  return std::max<std::int64_t>(r, static_cast<std::int64_t>(std::ceil(shape.t)));
}

}  // namespace

double estimate_choice(const GraphSpec& spec) {
  return spec.log2_largest() / std::log2(x0_of(spec, 0.0));
}

UpperCertificate upper_certificate_for_r(const GraphSpec& spec, int r) {
  if (r < 2) throw Error(ErrorCode::BadArgs, "upper certificate needs r >= 2");
  const double s = spec.s();
  const auto& sizes = spec.sizes_log2();

  std::vector<double> w;  // log2 n_i^{-1/(r-1)}
  for (double li : sizes) w.push_back(-li / (r - 1));
  const double log2_w_sum = log2_sum_exp2(w);

  UpperCertificate c;
  c.r = r;
  bool in_range = true;
  std::vector<double> terms;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const double miss = std::log2(s) + w[i] - log2_w_sum;
    c.miss_log2.push_back(miss);
    const double pi = -std::expm1(kLn2 * miss);
    c.p.push_back(pi);
    if (miss > 0.0) in_range = false;
    terms.push_back(sizes[i] + r * miss);
  }
  c.union_bound_log2 = log2_sum_exp2(terms);
  c.union_bound_value = std::exp2(c.union_bound_log2);
  c.valid = in_range && c.union_bound_log2 <= 0.0;
  return c;
}

UpperCertificate upper_bound(const GraphSpec& spec, double epsilon) {
  const double eps = spec.s() == 1 ? 0.0 : epsilon;
  if (spec.s() > 1 && !(epsilon > 0.0 && epsilon < 1.0))
    throw Error(ErrorCode::BadArgs, "epsilon must lie in (0, 1)");
  const double x0 = x0_of(spec, eps);
  const double ratio = spec.log2_largest() / std::log2(x0);
  if (!(ratio < static_cast<double>(std::numeric_limits<int>::max() / 2)))
    throw Error(ErrorCode::InstanceTooLarge, "upper bound r overflows");
  const int formula_r = static_cast<int>(std::ceil(ratio)) + 1;

  int r = formula_r;
  for (int step = 0; step < kMaxUpperIncrements; ++step, ++r) {
    UpperCertificate c = upper_certificate_for_r(spec, r);
    if (c.valid) {
      c.formula_r = formula_r;
      c.x0 = x0;
      c.epsilon = eps;
      return c;
    }
  }
  throw Error(ErrorCode::InternalInconsistency, "no valid upper certificate found");
}

RealSplit multipartite_split(const GraphSpec& spec, int r) {
  const SplitShape shape = split_shape(spec, r);
  RealSplit out;
  out.t = shape.t;
  for (double sh : shape.share) out.l.push_back(sh * out.t);
  return out;
}

RealSplit bipartite_split(const GraphSpec& spec, int r) {
  if (spec.s() != 1) throw Error(ErrorCode::BadArgs, "bipartite split needs exactly two parts");
  if (r < 1) throw Error(ErrorCode::BadArgs, "r must be >= 1");
  const double q = std::exp2((spec.log2_size(1) - spec.log2_size(0)) / r);
  RealSplit out;
  out.t = q * r * r;
  const double l = out.t / (q + 1.0);
  out.l = {l, out.t - l};
  return out;
}

LowerPrescription prescription_for_r(const GraphSpec& spec, int r) {
  const SplitShape shape = split_shape(spec, r);
  return round_split(r, shape, palette_for(r, shape));
}

LowerPrescription lower_prescription(const GraphSpec& spec) {
  const double r0 = estimate_choice(spec);
  const double u = 4.0 * std::log2(spec.log2_largest()) / spec.log2_size(0) * r0;
  if (u >= r0)
    throw Error(ErrorCode::RegimeDegenerate,
                "u = " + std::to_string(u) + " >= r0 = " + std::to_string(r0));
  const double r_real = r0 - u;
  const int r = std::max(1, static_cast<int>(std::floor(r_real)));
  LowerPrescription pr = prescription_for_r(spec, r);
  pr.r0 = r0;
  pr.u = u;
  pr.r_real = r_real;
  return pr;
}

LowerCertificate lower_bound_search(const GraphSpec& spec, std::optional<int> r_max_hint) {
  const double r0 = estimate_choice(spec);
  const double u = 4.0 * std::log2(spec.log2_largest()) / spec.log2_size(0) * r0;
  const int hint = r_max_hint.value_or(std::max(1, static_cast<int>(std::ceil(r0))));
  if (hint < 1) throw Error(ErrorCode::BadArgs, "r_max_hint must be >= 1");
  const std::size_t last = spec.parts() - 1;

  LowerCertificate best;
  best.lhs_log = std::numeric_limits<double>::infinity();

  for (int r = hint; r >= 1; --r) {
    const SplitShape shape = split_shape(spec, r);
    if (!(shape.t <= static_cast<double>(kMaxPaletteSize))) continue;
    const std::int64_t base_t = palette_for(r, shape);

    LowerCertificate best_here;
    best_here.lhs_log = std::numeric_limits<double>::infinity();
    for (int j = -2; j <= 2; ++j) {
      const double scaled = std::ceil(std::ldexp(static_cast<double>(base_t), j));
      if (scaled > static_cast<double>(kMaxPaletteSize)) continue;
      const std::int64_t t = std::max<std::int64_t>(r, static_cast<std::int64_t>(scaled));
      const LowerPrescription centre = round_split(r, shape, t);
      const std::int64_t delta =
          std::max<std::int64_t>(1, std::llround(static_cast<double>(t) / (8.0 * r)));
      for (int d = -2; d <= 2; ++d) {
        LowerPrescription cand = centre;
        cand.l[0] += d * delta;
        cand.l[last] -= d * delta;
        if (cand.l[0] < 0 || cand.l[0] > t || cand.l[last] < 0 || cand.l[last] > t) continue;
        const double lhs = star_lhs_log(spec, r, t, cand.l).lhs_log;
        if (lhs < best_here.lhs_log) {
          best_here.prescription = std::move(cand);
          best_here.lhs_log = lhs;
        }
      }
    }
    best_here.prescription.r0 = r0;
    best_here.prescription.u = u;
    best_here.prescription.r_real = r;
    if (best_here.lhs_log <= 0.0) {
      best_here.valid = true;
      return best_here;
    }
    if (best_here.lhs_log < best.lhs_log) best = std::move(best_here);
  }
  best.valid = false;
  return best;
}

BoundReport bound_report(const GraphSpec& spec, double epsilon) {
  BoundReport rep;
  rep.estimate = estimate_choice(spec);
  rep.upper = upper_bound(spec, epsilon);
  rep.lower = lower_bound_search(spec);
  rep.diagnostics = diagnostics(spec);
  if (rep.upper.valid && rep.lower.valid)
    rep.ratio = static_cast<double>(rep.upper.r) / rep.lower.prescription.r;
  return rep;
}

}  // namespace mpchoice
