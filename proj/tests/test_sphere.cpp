#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "murai/error.hpp"
#include "murai/sphere.hpp"

using namespace murai;

namespace {

using VertexSet = std::set<Vertex>;

Multicomplex gen(const std::vector<int>& c, const char* text) {
  const CompositionVector cv(c);
  return Multicomplex::from_generators(cv, parse_monomials(text, cv.m()));
}

std::vector<std::vector<int>> tuples(const std::vector<int>& c) {
  std::vector<std::vector<int>> out{{}};
  for (int ci : c) {
    std::vector<std::vector<int>> next;
    for (const auto& t : out) {
      for (int e = 0; e <= ci; ++e) {
        auto u = t;
        u.push_back(e);
        next.push_back(u);
      }
    }
    out = std::move(next);
  }
  return out;
}

// Facets written out from the definition, with vertices as (axis, level) pairs.
std::set<VertexSet> facets_by_definition(const Multicomplex& M) {
  const auto& c = M.c().entries();
  const int m = static_cast<int>(c.size());
  VertexSet all;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= c[static_cast<std::size_t>(i)]; ++j) all.insert(Vertex{i + 1, j});
  }
  std::set<VertexSet> out;
  for (const auto& a : tuples(c)) {
    if (!M.contains(Monomial(a))) continue;
    for (int i = 0; i < m; ++i) {
      for (int j = a[static_cast<std::size_t>(i)] + 1; j <= c[static_cast<std::size_t>(i)]; ++j) {
        auto b = a;
        b[static_cast<std::size_t>(i)] = j;
        if (M.contains(Monomial(b))) continue;
        VertexSet f = all;
        for (int k = 0; k < m; ++k) f.erase(Vertex{k + 1, a[static_cast<std::size_t>(k)]});
        f.erase(Vertex{i + 1, j});
        out.insert(f);
      }
    }
  }
  return out;
}

std::set<VertexSet> facet_sets(const SimplicialComplex& K) {
  std::set<VertexSet> out;
  for (auto f : K.facets()) {
    const auto vs = K.vertices_of(f);
    out.insert(VertexSet(vs.begin(), vs.end()));
  }
  return out;
}

// Minimal non-faces of the complex with the given facets, over the universe.
std::set<FaceMask> brute_minimal_non_faces(const SimplicialComplex& K) {
  const int n = K.universe_size();
  std::vector<bool> face(std::size_t{1} << n, false);
  for (auto f : K.facets()) {
    for (FaceMask s = f;; s = (s - 1) & f) {
      face[s] = true;
      if (s == 0) break;
    }
  }
  std::set<FaceMask> out;
  for (FaceMask s = 0; s < face.size(); ++s) {
    if (face[s]) continue;
    bool minimal = true;
    for (int v = 0; v < n && minimal; ++v) {
      if ((s >> v & 1U) && !face[s & ~(FaceMask{1} << v)]) minimal = false;
    }
    if (minimal) out.insert(s);
  }
  return out;
}

const std::vector<std::vector<int>> kCensus = {{3},    {2, 1},    {1, 1, 1},    {4},       {3, 1},    {2, 2},
                                               {2, 1, 1}, {1, 1, 1, 1}, {5},    {3, 2}, {2, 2, 1}, {1, 1, 1, 1, 1},
                                               {4, 1}, {2, 3}, {1, 2, 1}};

std::vector<Vertex> column(int axis, int from, int to) {
  std::vector<Vertex> out;
  for (int j = from; j <= to; ++j) out.push_back(Vertex{axis, j});
  return out;
}

}  // namespace

TEST_CASE("listed facet-set examples") {
  const auto z4 = facet_set(gen({3}, "1"));
  const auto expected = join(boundary_simplex(column(1, 0, 1)), boundary_simplex(column(1, 2, 3)));
  CHECK(facet_sets(z4) == facet_sets(expected));
  CHECK(is_isomorphic(z4, cycle_complex(4)));

  const auto tri = facet_set(gen({3}, "0"));
  CHECK(facet_sets(tri) == facet_sets(boundary_simplex(column(1, 1, 3))));
  CHECK(tri.f0() == 3);
  CHECK(tri.universe_size() == 4);

  const auto kq = facet_set(gen({2, 1, 1}, "2 0 0; 0 1 0; 0 0 1"));
  CHECK(kq.f0() == 7);
  CHECK(kq.dimension() == 2);

  CHECK_THROWS_AS(facet_set(gen({2, 1}, "2 1")), Error);
}

TEST_CASE("polarizations") {
  const CompositionVector c31({3, 1});
  CHECK(polarize(Monomial({2, 0}), c31) == 0b000011);
  CHECK(polarize(Monomial({4, 0}), c31) == 0b001111);
  const CompositionVector c21({2, 1});
  // Universe: 1:0 1:1 1:2 2:0 2:1.
  CHECK(polarize_star(Monomial({1, 1}), c21) == 0b10100);
  CHECK(polarize(Monomial({0, 0}), c21) == 0);
  CHECK_THROWS_AS(polarize(Monomial({4, 0}), c21), Error);
  const auto both = polarize(MonomialIdealGens{c21, {Monomial({1, 0}), Monomial({2, 0})}});
  CHECK(both.gens == std::vector<FaceMask>{0b00001});
}

TEST_CASE("listed Stanley-Reisner ideals") {
  for (int c1 = 2; c1 <= 5; ++c1) {
    const CompositionVector c({c1, 1});
    const auto ideal = sr_ideal(Multicomplex::from_generators(c, parse_monomials("1 0", 2)));
    const int off = c1 + 1;
    FaceMask big = FaceMask{1} << (off + 1);
    for (int t = 2; t <= c1; ++t) big |= FaceMask{1} << t;
    const std::set<FaceMask> expected{0b11, FaceMask{1} << off, big};
    CHECK(std::set<FaceMask>(ideal.gens.begin(), ideal.gens.end()) == expected);
  }
  const auto i22 = sr_ideal(gen({2, 2}, "1 1"));
  CHECK(std::set<FaceMask>(i22.gens.begin(), i22.gens.end()) == std::set<FaceMask>{0b000011, 0b011000, 0b100100});
  const auto i3 = sr_ideal(gen({3}, "0"));
  CHECK(std::set<FaceMask>(i3.gens.begin(), i3.gens.end()) == std::set<FaceMask>{0b0001, 0b1110});
}

TEST_CASE("facet formula and Stanley-Reisner route agree with brute force") {
  for (const auto& c : kCensus) {
    const CompositionVector cv(c);
    CAPTURE(format_composition(cv));
    for_each_proper(cv, [&](const Multicomplex& M) {
      const auto K = facet_set(M);
      CHECK(facet_sets(K) == facets_by_definition(M));
      const auto ideal = sr_ideal(M);
      CHECK(std::set<FaceMask>(ideal.gens.begin(), ideal.gens.end()) == brute_minimal_non_faces(K));
      CHECK(sphere_from_sr_ideal(M) == K);
      for (auto f : K.facets()) CHECK(std::popcount(f) == cv.total() - 1);
      CHECK(K.f0() >= cv.total());
      CHECK(K.f0() <= cv.total() + cv.m());
      CHECK(is_pseudomanifold(K));
      CHECK(euler_characteristic(K) == 1 + ((cv.total() % 2 == 0) ? 1 : -1));
      CHECK(is_isomorphic(K, facet_set(alexander_dual(M))));
    });
  }
}

TEST_CASE("m = 1 spheres are boundaries of simplices or joins of two") {
  CHECK(facet_set(gen({1}, "0")).facets() == std::vector<FaceMask>{0});
  for (int c = 2; c <= 8; ++c) {
    for (int a = 0; a < c; ++a) {
      const std::vector<Monomial> g = {Monomial({a})};
      const auto K = facet_set(Multicomplex::from_generators(CompositionVector({c}), g));
      SimplicialComplex expected = a == 0       ? boundary_simplex(column(1, 1, c))
                                   : a == c - 1 ? boundary_simplex(column(1, 0, c - 1))
                                                : join(boundary_simplex(column(1, 0, a)),
                                                       boundary_simplex(column(1, a + 1, c)));
      CHECK(facet_sets(K) == facet_sets(expected));
    }
  }
}

TEST_CASE("classical Bier spheres are deleted joins") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + trial % 5;
    std::vector<Vertex> ground;
    for (int i = 0; i < n; ++i) ground.push_back(Vertex{1, i});
    std::uniform_int_distribution<FaceMask> pick(0, (FaceMask{1} << n) - 2);
    std::vector<FaceMask> gens;
    for (int k = 0; k < 1 + trial % 3; ++k) gens.push_back(pick(rng));
    const auto K = SimplicialComplex::from_masks(ground, gens);
    if (K.is_face((FaceMask{1} << n) - 1)) continue;

    // K *_Delta K^v with sigma in K, tau in K^v (complement of tau not in K), sigma and tau disjoint.
    const FaceMask full = (FaceMask{1} << n) - 1;
    std::set<VertexSet> faces;
    for (FaceMask s = 0; s <= full; ++s) {
      if (!K.is_face(s)) continue;
      for (FaceMask t = 0; t <= full; ++t) {
        if ((s & t) || K.is_face(full & ~t)) continue;
        VertexSet f;
        for (int i = 0; i < n; ++i) {
          if (s >> i & 1U) f.insert(Vertex{i + 1, 0});
          if (t >> i & 1U) f.insert(Vertex{i + 1, 1});
        }
        faces.insert(f);
      }
    }
    std::set<VertexSet> maximal;
    for (const auto& f : faces) {
      const bool dominated = std::any_of(faces.begin(), faces.end(), [&](const VertexSet& g) {
        return g.size() > f.size() && std::includes(g.begin(), g.end(), f.begin(), f.end());
      });
      if (!dominated) maximal.insert(f);
    }
    CHECK(facet_sets(classical_bier(K)) == maximal);
  }
  std::vector<Vertex> g3 = {{1, 0}, {1, 1}, {1, 2}};
  CHECK(is_isomorphic(classical_bier(SimplicialComplex::from_masks(g3, {})), cycle_complex(3)));
  CHECK(is_isomorphic(classical_bier(SimplicialComplex::from_masks(g3, {1, 2, 4})), cycle_complex(6)));
  CHECK_THROWS_AS(classical_bier(SimplicialComplex::from_masks(g3, {7})), Error);
}
