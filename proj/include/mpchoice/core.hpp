#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace mpchoice {

/// Part sizes of a complete multipartite graph K_{n_0,...,n_s}.
///
/// The log2 magnitudes are canonical so that parts as large as 2^10000 can be
/// represented. Exact sizes are attached only when every part was given as a
/// machine integer; the exact-search layer requires them.
class GraphSpec {
 public:
  const std::vector<double>& sizes_log2() const noexcept { return log2_; }
  const std::optional<std::vector<std::uint64_t>>& sizes_exact() const noexcept { return exact_; }

  /// Number of parts minus one.
  int s() const noexcept { return static_cast<int>(log2_.size()) - 1; }
  std::size_t parts() const noexcept { return log2_.size(); }

  double log2_size(std::size_t i) const { return log2_.at(i); }
  double log2_largest() const noexcept { return log2_.back(); }

  bool has_exact() const noexcept { return exact_.has_value(); }
  /// Throws ExactSizesRequired when the spec was built from log2 magnitudes.
  const std::vector<std::uint64_t>& exact() const;
  std::uint64_t total_vertices() const;

  friend bool operator==(const GraphSpec&, const GraphSpec&) = default;

 private:
  friend GraphSpec make_spec(std::span<const std::uint64_t>);
  friend GraphSpec make_spec_log2(std::span<const double>);

  std::vector<double> log2_;
  std::optional<std::vector<std::uint64_t>> exact_;
};

/// Sorts ascending; keeps the exact sizes.
GraphSpec make_spec(std::span<const std::uint64_t> sizes);
GraphSpec make_spec_log2(std::span<const double> sizes_log2);

inline GraphSpec make_spec(std::initializer_list<std::uint64_t> sizes) {
  return make_spec(std::span<const std::uint64_t>(sizes.begin(), sizes.size()));
}
inline GraphSpec make_spec_log2(std::initializer_list<double> sizes_log2) {
  return make_spec_log2(std::span<const double>(sizes_log2.begin(), sizes_log2.size()));
}

/// k_i = log n_s / log n_i for i < s.
struct Exponents {
  std::vector<double> k;
};

Exponents exponents(const GraphSpec& spec);

/// Advisory check of the multipartite regime condition
/// alpha >= 2 sqrt(log n_s / log log n_s) with n_0 = (log n_s)^alpha.
/// Never enforced anywhere.
struct AsymptoticDiagnostics {
  double alpha = 0.0;
  double alpha_threshold = 0.0;
  bool regime_ok = false;
  /// False when log2 n_s <= 1, in which case alpha and the threshold are NaN.
  bool loglog_defined = false;
};

AsymptoticDiagnostics diagnostics(const GraphSpec& spec);

}  // namespace mpchoice
