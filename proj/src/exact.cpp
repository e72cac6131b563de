#include "mpchoice/exact.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mpchoice/error.hpp"
#include "mpchoice/rng.hpp"

namespace mpchoice {

namespace {

constexpr std::uint64_t kMaxSampledVertices = 10'000'000;

class StepCounter {
 public:
  StepCounter(std::uint64_t budget, const char* what) : budget_(budget), what_(what) {}
  void tick() {
    if (++steps_ > budget_)
      throw Error(ErrorCode::InstanceTooLarge,
                  std::string(what_) + " exceeded work budget of " + std::to_string(budget_));
  }

 private:
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
  const char* what_;
};

// Sorted-tuple lexicographic order on equal-size sets: a < b iff the lowest
// element of the symmetric difference belongs to a.
bool lex_less(ColorSet a, ColorSet b) {
  const ColorSet diff(a.bits() ^ b.bits());
  return !diff.empty() && a.contains(diff.first());
}

// ---------------------------------------------------------------------------
// List colorability via color -> part commitments.

struct Unit {
  int part;
  ColorSet list;
};

class ColorabilitySearch {
 public:
  ColorabilitySearch(std::vector<Unit> units, int parts, int universe, std::uint64_t budget)
      : units_(std::move(units)),
        owned_(parts),
        free_(ColorSet::range(universe)),
        counter_(budget, "decide_list_colorable") {}

  bool run() { return dfs(); }
  const std::vector<ColorSet>& owned() const { return owned_; }

 private:
  bool satisfied(const Unit& u) const { return u.list.intersects(owned_[u.part]); }

  // Sum over parts of a greedy packing of pairwise disjoint unsatisfied lists
  // (restricted to free colors); each needs its own fresh color.
  bool packing_exceeds_free() const {
    int need = 0;
    std::vector<ColorSet> used(owned_.size());
    for (const auto& u : units_) {
      if (satisfied(u)) continue;
      const ColorSet avail = u.list & free_;
      if (!avail.intersects(used[u.part])) {
        used[u.part] = used[u.part] | avail;
        ++need;
      }
    }
    return need > free_.size();
  }

  bool dfs() {
    counter_.tick();
    const Unit* pick = nullptr;
    int best = 65;
    for (const auto& u : units_) {
      if (satisfied(u)) continue;
      const int options = (u.list & free_).size();
      if (options == 0) return false;
      if (options < best) {
        best = options;
        pick = &u;
      }
    }
    if (pick == nullptr) return true;
    if (packing_exceeds_free()) return false;

    const int part = pick->part;
    const ColorSet options = pick->list & free_;
    bool found = false;
    options.for_each([&](int c) {
      if (found) return;
      owned_[part].insert(c);
      free_.erase(c);
      if (dfs()) {
        found = true;
        return;
      }
      owned_[part].erase(c);
      free_.insert(c);
    });
    return found;
  }

  std::vector<Unit> units_;
  std::vector<ColorSet> owned_;
  ColorSet free_;
  StepCounter counter_;
};

// ---------------------------------------------------------------------------
// Minimum hitting set.

class CoverSearch {
 public:
  CoverSearch(std::vector<ColorSet> edges, int vertex_count, std::uint64_t budget)
      : edges_(std::move(edges)), n_(vertex_count), counter_(budget, "min_cover") {}

  CoverResult run() {
    best_ = greedy();
    dfs(ColorSet{}, ColorSet{}, edges_);
    return CoverResult{best_.size(), best_};
  }

 private:
  ColorSet greedy() const {
    ColorSet chosen;
    std::vector<ColorSet> open = edges_;
    while (!open.empty()) {
      int pick = -1, pick_deg = 0;
      for (int v = 0; v < n_; ++v) {
        int deg = 0;
        for (auto e : open) deg += e.contains(v);
        if (deg > pick_deg) {
          pick_deg = deg;
          pick = v;
        }
      }
      chosen.insert(pick);
      std::erase_if(open, [&](ColorSet e) { return e.contains(pick); });
    }
    return chosen;
  }

  void dfs(ColorSet chosen, ColorSet excluded, const std::vector<ColorSet>& open) {
    counter_.tick();
    if (open.empty()) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    const ColorSet avail = ~excluded & ColorSet::range(n_);

    // Lower bound: ceil(open edges / max degree among available vertices).
    int max_deg = 0;
    for (int v = 0; v < n_; ++v) {
      if (!avail.contains(v)) continue;
      int deg = 0;
      for (auto e : open) deg += e.contains(v);
      max_deg = std::max(max_deg, deg);
    }
    if (max_deg == 0) return;
    const int open_count = static_cast<int>(open.size());
    const int lower = (open_count + max_deg - 1) / max_deg;
    if (chosen.size() + lower >= best_.size()) return;

    // Branch on the first smallest open edge (by available vertices).
    const ColorSet* edge = nullptr;
    int edge_size = 65;
    for (const auto& e : open) {
      const int sz = (e & avail).size();
      if (sz == 0) return;
      if (sz < edge_size) {
        edge_size = sz;
        edge = &e;
      }
    }

    ColorSet branch_excluded = excluded;
    std::vector<ColorSet> next;
    (*edge & avail).for_each([&](int v) {
      next.clear();
      for (auto e : open)
        if (!e.contains(v)) next.push_back(e);
      ColorSet with = chosen;
      with.insert(v);
      dfs(with, branch_excluded, next);
      branch_excluded.insert(v);
    });
  }

  std::vector<ColorSet> edges_;
  int n_;
  StepCounter counter_;
  ColorSet best_;
};

// Removes duplicates and any edge that contains another edge.
std::vector<ColorSet> minimal_edges(std::vector<ColorSet> edges) {
  std::sort(edges.begin(), edges.end(),
            [](ColorSet a, ColorSet b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<ColorSet> kept;
  for (auto e : edges) {
    const bool dominated =
        std::any_of(kept.begin(), kept.end(), [&](ColorSet k) { return k.subset_of(e); });
    if (!dominated) kept.push_back(e);
  }
  return kept;
}

// ---------------------------------------------------------------------------
// Canonical enumeration of r-list assignments.

class ChoosabilitySearch {
 public:
  ChoosabilitySearch(std::vector<int> part_of_vertex, int parts, int r, int cap,
                     std::uint64_t budget)
      : part_of_(std::move(part_of_vertex)),
        parts_(parts),
        r_(r),
        cap_(cap),
        budget_(budget),
        lists_(part_of_.size()),
        counter_(budget, "is_r_choosable") {}

  // True when every canonical assignment is colorable.
  bool run() { return dfs(0, 0); }

 private:
  bool leaf_colorable() {
    ListAssignment a;
    a.universe = cap_;
    a.parts.assign(parts_, {});
    for (std::size_t v = 0; v < lists_.size(); ++v) a.parts[part_of_[v]].push_back(lists_[v]);
    return decide_list_colorable(a, budget_).colorable;
  }

  bool dfs(std::size_t v, int used) {
    counter_.tick();
    if (v == lists_.size()) return leaf_colorable();

    const bool has_prev = v > 0 && part_of_[v - 1] == part_of_[v];
    const ColorSet prev = has_prev ? lists_[v - 1] : ColorSet{};

    // New colors must be exactly used, used+1, ..., used+fresh-1.
    for (int fresh = 0; fresh <= r_; ++fresh) {
      const int old = r_ - fresh;
      if (used + fresh > cap_ || old > used) continue;
      ColorSet fresh_set;
      for (int c = used; c < used + fresh; ++c) fresh_set.insert(c);
      bool ok = true;
      for_each_subset(used, old, [&](ColorSet olds) {
        if (!ok) return;
        const ColorSet list = olds | fresh_set;
        if (has_prev && lex_less(list, prev)) return;
        lists_[v] = list;
        if (!dfs(v + 1, used + fresh)) ok = false;
      });
      if (!ok) return false;
    }
    return true;
  }

  template <typename F>
  static void for_each_subset(int n, int k, F&& f) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > n) return;
    while (true) {
      ColorSet s;
      for (int i : idx) s.insert(i);
      f(s);
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) return;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }

  std::vector<int> part_of_;
  int parts_;
  int r_;
  int cap_;
  std::uint64_t budget_;
  std::vector<ColorSet> lists_;
  StepCounter counter_;
};

}  // namespace

std::vector<int> ColorSet::to_vector() const {
  std::vector<int> out;
  out.reserve(size());
  for_each([&](int c) { out.push_back(c); });
  return out;
}

std::size_t ListAssignment::vertex_count() const {
  std::size_t n = 0;
  for (const auto& p : parts) n += p.size();
  return n;
}

void validate(const ListAssignment& a) {
  if (a.universe < 0 || a.universe > kMaxUniverse)
    throw Error(ErrorCode::BadArgs, "universe must lie in [0, 64]");
  const ColorSet allowed = ColorSet::range(a.universe);
  for (const auto& part : a.parts) {
    for (auto list : part) {
      if (list.empty()) throw Error(ErrorCode::BadArgs, "empty color list");
      if (!list.subset_of(allowed)) throw Error(ErrorCode::BadArgs, "color outside universe");
    }
  }
}

ColoringResult decide_list_colorable(const ListAssignment& a, std::uint64_t budget) {
  validate(a);
  const int parts = static_cast<int>(a.parts.size());

  std::vector<Unit> units;
  for (int p = 0; p < parts; ++p) {
    std::vector<ColorSet> lists = a.parts[p];
    std::sort(lists.begin(), lists.end());
    lists.erase(std::unique(lists.begin(), lists.end()), lists.end());
    for (auto l : lists) units.push_back({p, l});
  }
  std::stable_sort(units.begin(), units.end(),
                   [](const Unit& x, const Unit& y) { return x.list.size() < y.list.size(); });

  ColorabilitySearch search(std::move(units), parts, a.universe, budget);
  ColoringResult res;
  res.colorable = search.run();
  if (!res.colorable) return res;

  const auto& owned = search.owned();
  res.color_part.assign(a.universe, -1);
  for (int p = 0; p < parts; ++p) owned[p].for_each([&](int c) { res.color_part[c] = p; });
  res.vertex_colors.resize(parts);
  for (int p = 0; p < parts; ++p) {
    for (auto list : a.parts[p]) res.vertex_colors[p].push_back((list & owned[p]).first());
  }
  return res;
}

CoverResult min_cover(const Hypergraph& h, std::uint64_t budget) {
  if (h.vertex_count < 0 || h.vertex_count > kMaxUniverse)
    throw Error(ErrorCode::BadArgs, "hypergraph vertex count must lie in [0, 64]");
  const ColorSet allowed = ColorSet::range(h.vertex_count);
  for (auto e : h.edges) {
    if (e.empty()) throw Error(ErrorCode::BadArgs, "empty hyperedge");
    if (!e.subset_of(allowed)) throw Error(ErrorCode::BadArgs, "hyperedge outside vertex range");
  }
  if (h.edges.empty()) return {};
  CoverSearch search(minimal_edges(h.edges), h.vertex_count, budget);
  return search.run();
}

Hypergraph part_hypergraph(const ListAssignment& a, std::size_t part) {
  return Hypergraph{a.universe, a.parts.at(part)};
}

bool verify_lower_witness(const ListAssignment& a, std::span<const std::int64_t> l,
                          std::uint64_t budget) {
  validate(a);
  if (l.size() != a.parts.size())
    throw Error(ErrorCode::BadArgs, "need one threshold per part");
  std::int64_t total = 0;
  for (auto li : l) {
    if (li < 0) throw Error(ErrorCode::BadArgs, "negative threshold");
    total += li;
  }
  if (total != a.universe) throw Error(ErrorCode::BadArgs, "thresholds must sum to the universe size");

  for (std::size_t i = 0; i < a.parts.size(); ++i) {
    const std::int64_t need = l[i] + (i + 1 == a.parts.size() ? 1 : 0);
    if (min_cover(part_hypergraph(a, i), budget).size < need) return false;
  }
  if (decide_list_colorable(a, budget).colorable)
    throw Error(ErrorCode::InternalInconsistency,
                "cover witness holds but the assignment is colorable");
  return true;
}

ListAssignment sample_adversarial(const GraphSpec& spec, int r, int t, std::uint64_t seed) {
  const auto& sizes = spec.exact();
  if (t < 1 || t > kMaxUniverse) throw Error(ErrorCode::BadArgs, "t must lie in [1, 64]");
  if (r < 1 || r > t) throw Error(ErrorCode::BadArgs, "need 1 <= r <= t");
  if (spec.total_vertices() > kMaxSampledVertices)
    throw Error(ErrorCode::InstanceTooLarge, "too many vertices to sample lists for");

  Rng rng(seed);
  std::vector<int> pool(t);
  std::iota(pool.begin(), pool.end(), 0);
  ListAssignment a;
  a.universe = t;
  a.parts.resize(sizes.size());
  for (std::size_t p = 0; p < sizes.size(); ++p) {
    a.parts[p].reserve(sizes[p]);
    for (std::uint64_t v = 0; v < sizes[p]; ++v) {
      rng.partial_shuffle(std::span<int>(pool), static_cast<std::size_t>(r));
      ColorSet list;
      for (int i = 0; i < r; ++i) list.insert(pool[i]);
      a.parts[p].push_back(list);
    }
  }
  return a;
}

bool is_r_choosable(std::span<const std::uint64_t> sizes, int r,
                    std::optional<int> universe_cap, std::uint64_t budget) {
  if (sizes.size() < 2) throw Error(ErrorCode::EmptyInstance, "need at least two parts");
  std::uint64_t vertices = 0;
  for (auto n : sizes) {
    if (n < 1) throw Error(ErrorCode::SizeTooSmall, "exact oracle needs parts of size >= 1");
    vertices += std::min<std::uint64_t>(n, 9);
  }
  if (r < 1) throw Error(ErrorCode::BadArgs, "r must be >= 1");
  if (vertices > 8 || r > 3)
    throw Error(ErrorCode::InstanceTooLarge, "exhaustive oracle limited to 8 vertices and r <= 3");
  const int full_cap = r * static_cast<int>(vertices);
  const int cap = universe_cap.value_or(full_cap);
  if (cap < r) throw Error(ErrorCode::BadArgs, "universe cap below r");
  if (cap > full_cap) throw Error(ErrorCode::InstanceTooLarge, "universe cap above r * vertices");

  // Two vertices in different parts with the same singleton list.
  if (r == 1) return false;

  std::vector<int> part_of;
  for (std::size_t p = 0; p < sizes.size(); ++p)
    part_of.insert(part_of.end(), sizes[p], static_cast<int>(p));
  ChoosabilitySearch search(std::move(part_of), static_cast<int>(sizes.size()), r, cap, budget);
  return search.run();
}

bool is_r_choosable(const GraphSpec& spec, int r, std::optional<int> universe_cap,
                    std::uint64_t budget) {
  return is_r_choosable(std::span<const std::uint64_t>(spec.exact()), r, universe_cap, budget);
}

int choice_number_exact(std::span<const std::uint64_t> sizes, std::uint64_t budget) {
  for (int r = 1; r <= 3; ++r) {
    if (is_r_choosable(sizes, r, std::nullopt, budget)) return r;
  }
  throw Error(ErrorCode::InstanceTooLarge, "choice number exceeds the oracle's r <= 3 limit");
}

int choice_number_exact(const GraphSpec& spec, std::uint64_t budget) {
  return choice_number_exact(std::span<const std::uint64_t>(spec.exact()), budget);
}

}  // namespace mpchoice
