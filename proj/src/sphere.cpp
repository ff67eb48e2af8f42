#include "murai/sphere.hpp"

#include <algorithm>
#include <bit>

#include "murai/error.hpp"

namespace murai {
namespace {

FaceMask bit(int i) { return FaceMask{1} << i; }

std::vector<int> axis_offsets(const CompositionVector& c) {
  std::vector<int> off(static_cast<std::size_t>(c.m()), 0);
  for (int i = 1; i < c.m(); ++i) off[static_cast<std::size_t>(i)] = off[static_cast<std::size_t>(i - 1)] + c[i - 1] + 1;
  return off;
}

void check_universe(const CompositionVector& c) {
  if (c.universe_size() > SimplicialComplex::kMaxUniverse) {
    fail(Errc::size_cap, "sphere universe |c| + m = " + std::to_string(c.universe_size()) + " exceeds 64");
  }
}

std::vector<FaceMask> reduce_to_antichain(std::vector<FaceMask> sets) {
  std::sort(sets.begin(), sets.end(), [](FaceMask a, FaceMask b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<FaceMask> kept;
  for (auto s : sets) {
    if (std::none_of(kept.begin(), kept.end(), [s](FaceMask k) { return (k & ~s) == 0; })) kept.push_back(s);
  }
  return kept;
}

}  // namespace

std::vector<Vertex> sphere_universe(const CompositionVector& c) {
  check_universe(c);
  std::vector<Vertex> out;
  for (int i = 0; i < c.m(); ++i) {
    for (int j = 0; j <= c[i]; ++j) out.push_back(Vertex{i + 1, j});
  }
  return out;
}

int sphere_vertex_index(const CompositionVector& c, int axis, int level) {
  if (axis < 0 || axis >= c.m() || level < 0 || level > c[axis]) {
    fail(Errc::invalid_argument, "vertex out of range for c = " + format_composition(c));
  }
  int idx = level;
  for (int i = 0; i < axis; ++i) idx += c[i] + 1;
  return idx;
}

SimplicialComplex facet_set(const Multicomplex& M) {
  if (!M.is_proper()) fail(Errc::not_proper, "multicomplex is not proper (it contains every c-monomial)");
  const auto& c = M.c();
  const auto& grid = M.grid();
  auto universe = sphere_universe(c);
  const auto off = axis_offsets(c);
  const int m = c.m();
  const FaceMask all = bit(static_cast<int>(universe.size())) - 1;
  std::vector<int> a(static_cast<std::size_t>(m), 0);
  std::vector<FaceMask> facets;
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    if (idx > 0) {
      for (int i = 0; i < m; ++i) {
        auto& ai = a[static_cast<std::size_t>(i)];
        if (++ai <= c[i]) break;
        ai = 0;
      }
    }
    if (!M.contains_index(idx)) continue;
    FaceMask base = all;
    for (int i = 0; i < m; ++i) base ^= bit(off[static_cast<std::size_t>(i)] + a[static_cast<std::size_t>(i)]);
    for (int i = 0; i < m; ++i) {
      const int ai = a[static_cast<std::size_t>(i)];
      for (int j = ai + 1; j <= c[i]; ++j) {
        if (!M.contains_index(idx + static_cast<std::size_t>(j - ai) * grid.stride(i))) {
          facets.push_back(base ^ bit(off[static_cast<std::size_t>(i)] + j));
        }
      }
    }
  }
  return SimplicialComplex::from_masks(std::move(universe), std::move(facets));
}

FaceMask polarize(const Monomial& a, const CompositionVector& c) {
  if (a.size() != c.m()) fail(Errc::invalid_argument, "monomial has the wrong number of variables");
  check_universe(c);
  const auto off = axis_offsets(c);
  FaceMask out = 0;
  for (int i = 0; i < c.m(); ++i) {
    if (a[i] < 0 || a[i] > c[i] + 1) fail(Errc::invalid_argument, "exponent exceeds c_i + 1");
    for (int t = 0; t < a[i]; ++t) out |= bit(off[static_cast<std::size_t>(i)] + t);
  }
  return out;
}

FaceMask polarize_star(const Monomial& a, const CompositionVector& c) {
  if (a.size() != c.m()) fail(Errc::invalid_argument, "monomial has the wrong number of variables");
  check_universe(c);
  const auto off = axis_offsets(c);
  FaceMask out = 0;
  for (int i = 0; i < c.m(); ++i) {
    if (a[i] < 0 || a[i] > c[i] + 1) fail(Errc::invalid_argument, "exponent exceeds c_i + 1");
    for (int t = c[i] - a[i] + 1; t <= c[i]; ++t) out |= bit(off[static_cast<std::size_t>(i)] + t);
  }
  return out;
}

PolarizedIdealGens polarize(const MonomialIdealGens& ideal) {
  PolarizedIdealGens out{sphere_universe(ideal.c), {}};
  for (const auto& g : ideal.gens) out.gens.push_back(polarize(g, ideal.c));
  out.gens = reduce_to_antichain(std::move(out.gens));
  return out;
}

PolarizedIdealGens polarize_star(const MonomialIdealGens& ideal) {
  PolarizedIdealGens out{sphere_universe(ideal.c), {}};
  for (const auto& g : ideal.gens) out.gens.push_back(polarize_star(g, ideal.c));
  out.gens = reduce_to_antichain(std::move(out.gens));
  return out;
}

PolarizedIdealGens sr_ideal(const Multicomplex& M) {
  if (!M.is_proper()) fail(Errc::not_proper, "multicomplex is not proper (it contains every c-monomial)");
  const auto& c = M.c();
  PolarizedIdealGens out{sphere_universe(c), {}};
  for (const auto& g : M.min_non_elements()) out.gens.push_back(polarize(g, c));
  for (const auto& g : alexander_dual(M).min_non_elements()) out.gens.push_back(polarize_star(g, c));
  for (int i = 0; i < c.m(); ++i) {
    auto e = Monomial::unit(c.m()).exponents();
    e[static_cast<std::size_t>(i)] = c[i] + 1;
    out.gens.push_back(polarize(Monomial(std::move(e)), c));
  }
  out.gens = reduce_to_antichain(std::move(out.gens));
  return out;
}

SimplicialComplex sphere_from_sr_ideal(const Multicomplex& M) {
  auto ideal = sr_ideal(M);
  return SimplicialComplex::from_minimal_non_faces(std::move(ideal.universe), ideal.gens);
}

Multicomplex bier_multicomplex(const SimplicialComplex& K) {
  const int n = K.universe_size();
  if (n < 1) fail(Errc::invalid_argument, "ground set must be nonempty");
  if (n > SimplicialComplex::kMaxRealVertices) fail(Errc::size_cap, "ground set too large");
  const CompositionVector c(std::vector<int>(static_cast<std::size_t>(n), 1));
  std::vector<bool> members(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < members.size(); ++mask) members[mask] = K.is_face(mask);
  return Multicomplex::from_membership(c, members);
}

SimplicialComplex classical_bier(const SimplicialComplex& K) {
  const auto M = bier_multicomplex(K);
  if (!M.is_proper()) fail(Errc::not_proper, "Bier sphere of the full simplex is undefined");
  return facet_set(M);
}

}  // namespace murai
