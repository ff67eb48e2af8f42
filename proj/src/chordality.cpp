#include <bit>
#include <numeric>

#include "murai/analysis.hpp"
#include "murai/error.hpp"

namespace murai {
namespace {

using Mask = std::uint64_t;

Mask bit(int i) { return Mask{1} << i; }

// Depth-first growth of induced paths p0 < p1, p2, ... (all larger than p0). `on_cycle`
// receives each closing vertex; returning true stops the search.
class InducedPathSearch {
 public:
  InducedPathSearch(const Graph& g, int max_length) : g_(g), max_length_(max_length) {}

  template <class OnCycle>
  bool run(OnCycle&& on_cycle) {
    for (int s = 0; s < g_.size(); ++s) {
      path_.assign(1, s);
      const Mask above = ~(bit(s + 1) - 1) & all();
      if (grow(above, 0, on_cycle)) return true;
    }
    return false;
  }

  const std::vector<int>& path() const { return path_; }

 private:
  Mask all() const { return g_.size() == 64 ? ~Mask{0} : bit(g_.size()) - 1; }
  Mask adj(int v) const { return g_.adjacency[static_cast<std::size_t>(v)]; }

  // `interior` is the union of neighbourhoods of p1 .. p_{k-1}.
  template <class OnCycle>
  bool grow(Mask above, Mask interior, OnCycle& on_cycle) {
    const int s = path_.front();
    const int last = path_.back();
    const int len = static_cast<int>(path_.size());
    Mask used = 0;
    for (int v : path_) used |= bit(v);
    Mask cand = adj(last) & above & ~used & ~interior;
    while (cand) {
      const int w = std::countr_zero(cand);
      cand &= cand - 1;
      const bool closes = len >= 3 && (adj(w) & bit(s));
      if (closes) {
        path_.push_back(w);
        const bool stop = on_cycle(path_);
        path_.pop_back();
        if (stop) return true;
        continue;
      }
      if (len >= 2 && (adj(w) & bit(s))) continue;
      if (len + 1 >= max_length_) continue;
      path_.push_back(w);
      const Mask next_interior = len >= 2 ? interior | adj(last) : interior;
      if (grow(above, next_interior, on_cycle)) return true;
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  int max_length_;
  std::vector<int> path_;
};

}  // namespace

bool is_chordal(const Graph& g) {
  const int n = g.size();
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<int> order;
  Mask visited = 0;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (visited & bit(v)) continue;
      if (best < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]) best = v;
    }
    order.push_back(best);
    visited |= bit(best);
    for (Mask nb = g.adjacency[static_cast<std::size_t>(best)] & ~visited; nb; nb &= nb - 1) {
      ++weight[static_cast<std::size_t>(std::countr_zero(nb))];
    }
  }
  // Reverse visiting order is a perfect elimination ordering iff g is chordal.
  Mask earlier = 0;
  for (int v : order) {
    const Mask back = g.adjacency[static_cast<std::size_t>(v)] & earlier;
    if (back) {
      int parent = -1;
      for (int u : order) {
        if (u == v) break;
        if (back & bit(u)) parent = u;
      }
      if ((back & ~bit(parent) & ~g.adjacency[static_cast<std::size_t>(parent)]) != 0) return false;
    }
    earlier |= bit(v);
  }
  return true;
}

bool is_chordless_cycle(const Graph& g, const std::vector<int>& cycle) {
  const int len = static_cast<int>(cycle.size());
  if (len < 4) return false;
  Mask seen = 0;
  for (int v : cycle) {
    if (v < 0 || v >= g.size() || (seen & bit(v))) return false;
    seen |= bit(v);
  }
  for (int i = 0; i < len; ++i) {
    for (int j = i + 1; j < len; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
      if (g.adjacent(cycle[static_cast<std::size_t>(i)], cycle[static_cast<std::size_t>(j)]) != consecutive) return false;
    }
  }
  return true;
}

std::optional<std::vector<int>> shortest_chordless_cycle(const Graph& g) {
  if (g.size() > 64) fail(Errc::size_cap, "graph exceeds 64 vertices");
  for (int length = 4; length <= g.size(); ++length) {
    std::vector<int> found;
    InducedPathSearch search(g, length);
    search.run([&](const std::vector<int>& cycle) {
      if (static_cast<int>(cycle.size()) != length) return false;
      found = cycle;
      return true;
    });
    if (!found.empty()) return found;
  }
  return std::nullopt;
}

ChordalityReport chordality(const SimplicialComplex& K) {
  const Graph g = one_skeleton(K);
  ChordalityReport report;
  if (is_chordal(g)) return report;
  report.chordal = false;
  const auto cycle = shortest_chordless_cycle(g);
  ensure(cycle.has_value() && is_chordless_cycle(g, *cycle), "non-chordal graph without a chordless cycle");
  for (int v : *cycle) report.witness.push_back(g.vertices[static_cast<std::size_t>(v)]);
  return report;
}

int chordless_cycle_bound(const SimplicialComplex& K) {
  const Graph g = one_skeleton(K);
  int longest = 0;
  InducedPathSearch search(g, g.size());
  search.run([&](const std::vector<int>& cycle) {
    longest = std::max(longest, static_cast<int>(cycle.size()));
    return false;
  });
  return longest;
}

StackednessReport stackedness(const SimplicialComplex& K, const CompositionVector& c) {
  const int dim = K.dimension();
  if (dim < 1) fail(Errc::invalid_argument, "stackedness needs a sphere of dimension at least 1");
  StackednessReport report;
  if (dim == 1) {
    report.stacked = true;
    report.truncation_cuts = K.f0() - 3;
    report.base_dim = 2;
    return report;
  }
  const int total = c.total();
  bool degrees_ok = true;
  int missing_facets = 0;
  K.face_lattice().complement().minimal_of_up_closed().for_each([&](std::uint64_t x) {
    const int size = std::popcount(x);
    if (size != 2 && size <= total - 2) degrees_ok = false;
    if (size == total - 1) ++missing_facets;
  });
  if (!degrees_ok || !is_chordal(one_skeleton(K))) return report;
  report.stacked = true;
  report.truncation_cuts = K.f0() - total;
  report.base_dim = dim + 1;
  ensure(missing_facets == *report.truncation_cuts, "stacked sphere: missing-facet count differs from f0 - |c|");
  return report;
}

}  // namespace murai
