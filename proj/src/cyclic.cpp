#include <algorithm>
#include <bit>
#include <map>

#include "murai/analysis.hpp"
#include "murai/error.hpp"
#include "murai/sphere.hpp"

namespace murai {

bool is_neighborly(const SimplicialComplex& K) {
  const int k = (K.dimension() + 1) / 2;
  long long faces = 0;
  K.face_lattice().for_each([&](std::uint64_t x) { faces += std::popcount(x) == k; });
  long long expected = 1;
  for (int i = 0; i < k; ++i) expected = expected * (K.f0() - i) / (i + 1);
  return faces == expected;
}

bool gale_evenness(std::uint64_t subset, int p) {
  // Every maximal run of chosen positions away from both ends has even length.
  int pos = 0;
  while (pos < p) {
    if (!(subset >> pos & 1U)) {
      ++pos;
      continue;
    }
    const int start = pos;
    while (pos < p && (subset >> pos & 1U)) ++pos;
    const bool interior = start > 0 && pos < p;
    if (interior && (pos - start) % 2 != 0) return false;
  }
  return true;
}

SimplicialComplex gale_facets(CyclicSpec spec) {
  const int p = spec.p, q = spec.q;
  if (q < 2 || q >= p) fail(Errc::invalid_argument, "cyclic polytope needs 2 <= q < p");
  if (p > SimplicialComplex::kMaxRealVertices) fail(Errc::size_cap, "cyclic polytope: more than 24 vertices");
  std::vector<Vertex> universe;
  for (int k = 1; k <= p; ++k) universe.push_back(Vertex{1, k});
  std::vector<FaceMask> facets;
  // Gosper's hack over the q-subsets of p positions.
  const FaceMask limit = FaceMask{1} << p;
  for (FaceMask s = (FaceMask{1} << q) - 1; s < limit;) {
    if (gale_evenness(s, p)) facets.push_back(s);
    const FaceMask low = s & (~s + 1);
    const FaceMask ripple = s + low;
    s = ripple | (((ripple ^ s) >> 2) / low);
  }
  return SimplicialComplex::from_masks(std::move(universe), std::move(facets));
}

std::optional<VertexMap> cyclic_compare(const SimplicialComplex& K, CyclicSpec spec) {
  return find_isomorphism(K, gale_facets(spec));
}

Multicomplex cyclic_multicomplex(int k) {
  if (k < 1) fail(Errc::invalid_argument, "cyclic multicomplex needs k >= 1");
  const CompositionVector c({k + 2, k});
  std::vector<Monomial> gens;
  for (int a = 0; a <= k; ++a) gens.push_back(Monomial({a, k - a}));
  return Multicomplex::from_generators(c, gens);
}

VertexMap murai_cyclic_map(int k) {
  if (k < 3) fail(Errc::invalid_argument, "the cyclic-polytope map needs k >= 3");
  VertexMap f;
  for (int i = 0; i <= k + 1; ++i) f.emplace_back(Vertex{1, i}, Vertex{1, 2 * i + 2});
  f.emplace_back(Vertex{1, k + 2}, Vertex{1, 1});
  for (int i = 0; i <= k; ++i) f.emplace_back(Vertex{2, i}, Vertex{1, 2 * (k - i) + 3});
  std::sort(f.begin(), f.end());
  return f;
}

bool map_carries_facets(const SimplicialComplex& K, const SimplicialComplex& L, const VertexMap& map) {
  std::map<Vertex, int> image;
  FaceMask hit = 0;
  for (const auto& [from, to] : map) {
    const auto a = K.index_of(from);
    const auto b = L.index_of(to);
    if (!a || !b || image.count(from) || (hit >> *b & 1U)) return false;
    image[from] = *b;
    hit |= FaceMask{1} << *b;
  }
  if (hit != L.real_vertices()) return false;
  for (int idx : K.real_list()) {
    if (!image.count(K.universe()[static_cast<std::size_t>(idx)])) return false;
  }
  std::vector<FaceMask> images;
  for (auto f : K.facets()) {
    FaceMask g = 0;
    for (const auto& v : K.vertices_of(f)) g |= FaceMask{1} << image.at(v);
    images.push_back(g);
  }
  std::sort(images.begin(), images.end());
  return images == L.facets();
}

}  // namespace murai
