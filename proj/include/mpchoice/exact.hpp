#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mpchoice/core.hpp"

namespace mpchoice {

inline constexpr std::uint64_t kDefaultWorkBudget = 100'000'000;
inline constexpr int kMaxUniverse = 64;

/// Set of colors drawn from {0, ..., 63}.
class ColorSet {
 public:
  constexpr ColorSet() = default;
  constexpr explicit ColorSet(std::uint64_t bits) : bits_(bits) {}
  static ColorSet of(std::initializer_list<int> colors) {
    ColorSet c;
    for (int x : colors) c.insert(x);
    return c;
  }
  static constexpr ColorSet range(int n) {
    return ColorSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool contains(int c) const noexcept { return (bits_ >> c) & 1U; }
  constexpr void insert(int c) noexcept { bits_ |= std::uint64_t{1} << c; }
  constexpr void erase(int c) noexcept { bits_ &= ~(std::uint64_t{1} << c); }
  /// Lowest color; undefined on an empty set.
  constexpr int first() const noexcept { return std::countr_zero(bits_); }
  constexpr bool intersects(ColorSet o) const noexcept { return (bits_ & o.bits_) != 0; }
  constexpr bool subset_of(ColorSet o) const noexcept { return (bits_ & ~o.bits_) == 0; }

  std::vector<int> to_vector() const;

  constexpr ColorSet operator&(ColorSet o) const noexcept { return ColorSet(bits_ & o.bits_); }
  constexpr ColorSet operator|(ColorSet o) const noexcept { return ColorSet(bits_ | o.bits_); }
  constexpr ColorSet operator~() const noexcept { return ColorSet(~bits_); }
  constexpr auto operator<=>(const ColorSet&) const = default;

  template <typename F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Per-part vertex lists over a universe {0, ..., t-1}.
struct ListAssignment {
  int universe = 0;
  std::vector<std::vector<ColorSet>> parts;

  std::size_t vertex_count() const;
};

/// Throws BadArgs on colors outside the universe, empty lists, or universe > 64.
void validate(const ListAssignment& a);

struct Hypergraph {
  int vertex_count = 0;
  std::vector<ColorSet> edges;
};

struct CoverResult {
  int size = 0;
  ColorSet witness;
};

struct ColoringResult {
  bool colorable = false;
  /// color -> owning part, -1 when unused. Empty when not colorable.
  std::vector<int> color_part;
  /// Chosen color per vertex, indexed like ListAssignment::parts.
  std::vector<std::vector<int>> vertex_colors;
};

/// Decides proper list-colorability of the complete multipartite graph whose
/// parts carry the given lists. Searches color -> part commitments, which is
/// equivalent because vertices in different parts are always adjacent.
ColoringResult decide_list_colorable(const ListAssignment& a,
                                     std::uint64_t budget = kDefaultWorkBudget);

/// Exact minimum hitting set by branch and bound.
CoverResult min_cover(const Hypergraph& h, std::uint64_t budget = kDefaultWorkBudget);

/// The hypergraph of one part's lists.
Hypergraph part_hypergraph(const ListAssignment& a, std::size_t part);

/// True iff min cover of part i's hypergraph is >= l_i for i < s and >= l_s + 1
/// for the last part. Needs sum l_i = universe. A true result is cross-checked
/// against decide_list_colorable (InternalInconsistency if colorable).
bool verify_lower_witness(const ListAssignment& a, std::span<const std::int64_t> l,
                          std::uint64_t budget = kDefaultWorkBudget);

/// Independent uniform r-subsets of {0..t-1} for every vertex.
ListAssignment sample_adversarial(const GraphSpec& spec, int r, int t, std::uint64_t seed);

/// Exhaustive check over canonical r-list assignments from a universe of
/// universe_cap colors (default r * vertices). Limited to <= 8 vertices, r <= 3.
bool is_r_choosable(const GraphSpec& spec, int r, std::optional<int> universe_cap = std::nullopt,
                    std::uint64_t budget = kDefaultWorkBudget);

/// Raw part sizes; unlike GraphSpec, parts of size 1 are allowed here.
bool is_r_choosable(std::span<const std::uint64_t> sizes, int r,
                    std::optional<int> universe_cap = std::nullopt,
                    std::uint64_t budget = kDefaultWorkBudget);

/// Smallest r with is_r_choosable; InstanceTooLarge if it exceeds 3.
int choice_number_exact(const GraphSpec& spec, std::uint64_t budget = kDefaultWorkBudget);
int choice_number_exact(std::span<const std::uint64_t> sizes,
                        std::uint64_t budget = kDefaultWorkBudget);

}  // namespace mpchoice
