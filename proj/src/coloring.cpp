#include <algorithm>
#include <bit>

#include "murai/analysis.hpp"
#include "murai/error.hpp"

namespace murai {
namespace {

using Mask = std::uint64_t;

class Dsatur {
 public:
  explicit Dsatur(const Graph& g) : g_(g), n_(g.size()) {
    colour_.assign(static_cast<std::size_t>(n_), -1);
    best_colour_ = greedy();
    best_ = n_ == 0 ? 0 : 1 + *std::max_element(best_colour_.begin(), best_colour_.end());
    lower_ = greedy_clique();
  }

  void solve() {
    if (best_ > lower_) branch(0, 0);
  }
  int best() const { return best_; }
  const std::vector<int>& best_colouring() const { return best_colour_; }

 private:
  Mask adj(int v) const { return g_.adjacency[static_cast<std::size_t>(v)]; }

  Mask neighbour_colours(int v) const {
    Mask used = 0;
    for (Mask nb = adj(v); nb; nb &= nb - 1) {
      const int c = colour_[static_cast<std::size_t>(std::countr_zero(nb))];
      if (c >= 0) used |= Mask{1} << c;
    }
    return used;
  }

  int pick() const {
    int best = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < n_; ++v) {
      if (colour_[static_cast<std::size_t>(v)] >= 0) continue;
      const int sat = std::popcount(neighbour_colours(v));
      int deg = 0;
      for (Mask nb = adj(v); nb; nb &= nb - 1) deg += colour_[static_cast<std::size_t>(std::countr_zero(nb))] < 0;
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  std::vector<int> greedy() {
    for (int step = 0; step < n_; ++step) {
      const int v = pick();
      const Mask used = neighbour_colours(v);
      colour_[static_cast<std::size_t>(v)] = std::countr_zero(~used);
    }
    auto out = colour_;
    std::fill(colour_.begin(), colour_.end(), -1);
    return out;
  }

  int greedy_clique() const {
    int best = n_ == 0 ? 0 : 1;
    for (int s = 0; s < n_; ++s) {
      Mask cand = adj(s);
      int size = 1;
      while (cand) {
        int pickv = -1, pick_deg = -1;
        for (Mask c = cand; c; c &= c - 1) {
          const int v = std::countr_zero(c);
          const int d = std::popcount(adj(v) & cand);
          if (d > pick_deg) {
            pickv = v;
            pick_deg = d;
          }
        }
        ++size;
        cand &= adj(pickv);
      }
      best = std::max(best, size);
    }
    return best;
  }

  void branch(int coloured, int used) {
    if (best_ == lower_) return;
    if (coloured == n_) {
      best_ = used;
      best_colour_ = colour_;
      return;
    }
    const int v = pick();
    const Mask forbidden = neighbour_colours(v);
    for (int c = 0; c <= used && c + 1 < best_; ++c) {
      if (forbidden & (Mask{1} << c)) continue;
      colour_[static_cast<std::size_t>(v)] = c;
      branch(coloured + 1, std::max(used, c + 1));
      colour_[static_cast<std::size_t>(v)] = -1;
      if (best_ == lower_) return;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> colour_;
  std::vector<int> best_colour_;
  int best_ = 0;
  int lower_ = 0;
};

}  // namespace

int chromatic_number(const Graph& g) {
  const auto colours = optimal_colouring(g);
  return colours.empty() ? 0 : 1 + *std::max_element(colours.begin(), colours.end());
}

std::vector<int> optimal_colouring(const Graph& g) {
  if (g.size() > SimplicialComplex::kMaxRealVertices) fail(Errc::size_cap, "colouring: more than 24 vertices");
  Dsatur solver(g);
  solver.solve();
  return solver.best_colouring();
}

}  // namespace murai
