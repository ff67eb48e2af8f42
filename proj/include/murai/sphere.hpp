#pragma once

// Murai spheres Bier_c(M), built from the facet formula or from the Stanley-Reisner ideal.
//
// The vertex universe of a sphere over c lists x~_i^(j) for i = 1..m, j = 0..c_i, axis by axis.

#include <vector>

#include "murai/multicomplex.hpp"
#include "murai/simplicial.hpp"

namespace murai {

/// Squarefree generators over the polarized variables, as masks over the sphere universe.
struct PolarizedIdealGens {
  std::vector<Vertex> universe;
  std::vector<FaceMask> gens;
};

std::vector<Vertex> sphere_universe(const CompositionVector& c);
/// Universe index of x~_(axis+1)^(level), with `axis` 0-based.
int sphere_vertex_index(const CompositionVector& c, int axis, int level);

/// Facets G(x^a; x_i^j) over x^a in M, a_i < j <= c_i, x^a <> x_i^j not in M.
SimplicialComplex facet_set(const Multicomplex& M);

/// pol(x^a) = {(i, t) : t < a_i}; exponents may reach c_i + 1.
FaceMask polarize(const Monomial& a, const CompositionVector& c);
/// pol*(x^a) = {(i, t) : c_i - a_i < t <= c_i}.
FaceMask polarize_star(const Monomial& a, const CompositionVector& c);
PolarizedIdealGens polarize(const MonomialIdealGens& ideal);
PolarizedIdealGens polarize_star(const MonomialIdealGens& ideal);

/// Minimal generators of pol(I_c(M)) + pol*(I_c(M^v)) + pol(x_1^(c_1+1), ..., x_m^(c_m+1)).
PolarizedIdealGens sr_ideal(const Multicomplex& M);
/// The complex whose minimal non-faces are sr_ideal(M).
SimplicialComplex sphere_from_sr_ideal(const Multicomplex& M);

/// (1,...,1)-multicomplex of faces of K; the universe of K is taken as the ground set [m].
Multicomplex bier_multicomplex(const SimplicialComplex& K);
/// Bier(K) = facet_set of bier_multicomplex(K). Level 0 of axis i is i in K, level 1 is i'.
SimplicialComplex classical_bier(const SimplicialComplex& K);

}  // namespace murai
