#include <algorithm>
#include <bit>
#include <unordered_set>

#include "murai/error.hpp"
#include "murai/simplicial.hpp"

namespace murai {
namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  h ^= h >> 31;
  h *= 0xBF58476D1CE4E5B9ULL;
  h ^= h >> 29;
  return h;
}

std::uint64_t mix_sorted(std::uint64_t h, std::vector<std::uint64_t>& xs) {
  std::sort(xs.begin(), xs.end());
  h = mix(h, xs.size());
  for (auto x : xs) h = mix(h, x);
  return h;
}

// A complex on real vertices 0..n-1.
struct Compact {
  int n = 0;
  std::vector<std::uint64_t> facets;
  std::vector<std::uint64_t> adj;
  std::vector<std::vector<std::size_t>> incident;  // vertex -> facet positions
  std::vector<std::uint64_t> colors;
};

Compact compact(const SimplicialComplex& K) {
  Compact c;
  c.n = K.f0();
  for (auto f : K.facets()) c.facets.push_back(K.compress(f));
  std::sort(c.facets.begin(), c.facets.end());
  const Graph g = one_skeleton(K);
  c.adj = g.adjacency;
  c.incident.resize(static_cast<std::size_t>(c.n));
  for (std::size_t k = 0; k < c.facets.size(); ++k) {
    auto f = c.facets[k];
    while (f) {
      c.incident[static_cast<std::size_t>(std::countr_zero(f))].push_back(k);
      f &= f - 1;
    }
  }
  // Initial color: how many faces of each size contain the vertex.
  c.colors.assign(static_cast<std::size_t>(c.n), 0);
  std::vector<std::vector<std::uint64_t>> counts(static_cast<std::size_t>(c.n),
                                                 std::vector<std::uint64_t>(static_cast<std::size_t>(c.n + 1), 0));
  K.face_lattice().for_each([&](std::uint64_t face) {
    const int size = std::popcount(face);
    while (face) {
      ++counts[static_cast<std::size_t>(std::countr_zero(face))][static_cast<std::size_t>(size)];
      face &= face - 1;
    }
  });
  for (int v = 0; v < c.n; ++v) {
    std::uint64_t h = 1;
    for (auto x : counts[static_cast<std::size_t>(v)]) h = mix(h, x);
    c.colors[static_cast<std::size_t>(v)] = h;
  }
  // Refinement through neighbours and incident facets.
  for (int round = 0; round < c.n; ++round) {
    std::vector<std::uint64_t> facet_hash(c.facets.size());
    for (std::size_t k = 0; k < c.facets.size(); ++k) {
      std::vector<std::uint64_t> xs;
      for (auto f = c.facets[k]; f; f &= f - 1) xs.push_back(c.colors[static_cast<std::size_t>(std::countr_zero(f))]);
      facet_hash[k] = mix_sorted(7, xs);
    }
    std::vector<std::uint64_t> next(c.colors.size());
    for (int v = 0; v < c.n; ++v) {
      std::vector<std::uint64_t> nbrs;
      for (auto a = c.adj[static_cast<std::size_t>(v)]; a; a &= a - 1) {
        nbrs.push_back(c.colors[static_cast<std::size_t>(std::countr_zero(a))]);
      }
      std::vector<std::uint64_t> fs;
      for (auto k : c.incident[static_cast<std::size_t>(v)]) fs.push_back(facet_hash[k]);
      next[static_cast<std::size_t>(v)] = mix_sorted(mix_sorted(c.colors[static_cast<std::size_t>(v)], nbrs), fs);
    }
    auto distinct = [](std::vector<std::uint64_t> xs) {
      std::sort(xs.begin(), xs.end());
      return std::unique(xs.begin(), xs.end()) - xs.begin();
    };
    const bool stable = distinct(next) == distinct(c.colors);
    c.colors = std::move(next);
    if (stable) break;
  }
  return c;
}

class Matcher {
 public:
  Matcher(const Compact& a, const Compact& b) : a_(a), b_(b) {
    fa_.insert(a.facets.begin(), a.facets.end());
    fb_.insert(b.facets.begin(), b.facets.end());
    fwd_.assign(static_cast<std::size_t>(a.n), -1);
    bwd_.assign(static_cast<std::size_t>(b.n), -1);
    order_vertices();
  }

  bool run() { return extend(0); }
  const std::vector<int>& forward() const { return fwd_; }

 private:
  void order_vertices() {
    std::vector<int> class_size(static_cast<std::size_t>(a_.n), 0);
    for (int u = 0; u < a_.n; ++u) {
      class_size[static_cast<std::size_t>(u)] = static_cast<int>(
          std::count(a_.colors.begin(), a_.colors.end(), a_.colors[static_cast<std::size_t>(u)]));
    }
    std::uint64_t placed = 0;
    for (int step = 0; step < a_.n; ++step) {
      int best = -1;
      int best_links = -1;
      for (int u = 0; u < a_.n; ++u) {
        if (placed >> u & 1U) continue;
        const int links = std::popcount(a_.adj[static_cast<std::size_t>(u)] & placed);
        const bool better = best < 0 || links > best_links ||
                            (links == best_links && class_size[static_cast<std::size_t>(u)] <
                                                        class_size[static_cast<std::size_t>(best)]);
        if (better) {
          best = u;
          best_links = links;
        }
      }
      order_.push_back(best);
      placed |= std::uint64_t{1} << best;
    }
  }

  static std::uint64_t image(std::uint64_t face, const std::vector<int>& map) {
    std::uint64_t out = 0;
    for (; face; face &= face - 1) out |= std::uint64_t{1} << map[static_cast<std::size_t>(std::countr_zero(face))];
    return out;
  }

  bool consistent(int u, int w, std::uint64_t mapped_a, std::uint64_t mapped_b) const {
    for (auto k : a_.incident[static_cast<std::size_t>(u)]) {
      const auto f = a_.facets[k];
      if ((f & ~mapped_a) == 0 && !fb_.contains(image(f, fwd_))) return false;
    }
    for (auto k : b_.incident[static_cast<std::size_t>(w)]) {
      const auto f = b_.facets[k];
      if ((f & ~mapped_b) == 0 && !fa_.contains(image(f, bwd_))) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const int u = order_[depth];
    std::uint64_t mapped_a = 0;
    std::uint64_t mapped_b = 0;
    for (std::size_t d = 0; d < depth; ++d) {
      mapped_a |= std::uint64_t{1} << order_[d];
      mapped_b |= std::uint64_t{1} << fwd_[static_cast<std::size_t>(order_[d])];
    }
    for (int w = 0; w < b_.n; ++w) {
      if (bwd_[static_cast<std::size_t>(w)] >= 0) continue;
      if (b_.colors[static_cast<std::size_t>(w)] != a_.colors[static_cast<std::size_t>(u)]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const int x = order_[d];
        const int y = fwd_[static_cast<std::size_t>(x)];
        ok = ((a_.adj[static_cast<std::size_t>(u)] >> x) & 1U) == ((b_.adj[static_cast<std::size_t>(w)] >> y) & 1U);
      }
      if (!ok) continue;
      fwd_[static_cast<std::size_t>(u)] = w;
      bwd_[static_cast<std::size_t>(w)] = u;
      if (consistent(u, w, mapped_a | (std::uint64_t{1} << u), mapped_b | (std::uint64_t{1} << w)) &&
          extend(depth + 1)) {
        return true;
      }
      fwd_[static_cast<std::size_t>(u)] = -1;
      bwd_[static_cast<std::size_t>(w)] = -1;
    }
    return false;
  }

  const Compact& a_;
  const Compact& b_;
  std::unordered_set<std::uint64_t> fa_;
  std::unordered_set<std::uint64_t> fb_;
  std::vector<int> order_;
  std::vector<int> fwd_;
  std::vector<int> bwd_;
};

}  // namespace

std::optional<VertexMap> find_isomorphism(const SimplicialComplex& K, const SimplicialComplex& L, int max_vertices) {
  if (K.f0() > max_vertices || L.f0() > max_vertices) {
    fail(Errc::size_cap, "isomorphism test: more than " + std::to_string(max_vertices) + " real vertices");
  }
  if (K.f_vector() != L.f_vector() || K.facets().size() != L.facets().size()) return std::nullopt;
  const Compact a = compact(K);
  const Compact b = compact(L);
  auto ca = a.colors;
  auto cb = b.colors;
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  if (ca != cb) return std::nullopt;
  Matcher matcher(a, b);
  if (!matcher.run()) return std::nullopt;
  const auto& fwd = matcher.forward();
  std::vector<std::uint64_t> images;
  for (auto f : a.facets) {
    std::uint64_t g = 0;
    for (; f; f &= f - 1) g |= std::uint64_t{1} << fwd[static_cast<std::size_t>(std::countr_zero(f))];
    images.push_back(g);
  }
  std::sort(images.begin(), images.end());
  ensure(images == b.facets, "isomorphism search returned a non-isomorphism");
  VertexMap out;
  for (int u = 0; u < a.n; ++u) {
    out.emplace_back(K.universe()[static_cast<std::size_t>(K.real_list()[static_cast<std::size_t>(u)])],
                     L.universe()[static_cast<std::size_t>(L.real_list()[static_cast<std::size_t>(fwd[static_cast<std::size_t>(u)])])]);
  }
  return out;
}

std::uint64_t iso_invariant_hash(const SimplicialComplex& K) {
  const Compact c = compact(K);
  std::uint64_t h = mix(0, K.facets().size());
  for (auto f : K.f_vector()) h = mix(h, static_cast<std::uint64_t>(f));
  auto colors = c.colors;
  return mix_sorted(h, colors);
}

}  // namespace murai
