#pragma once

// Invariants of simplicial spheres: chordality, stackedness, neighborliness, colourings,
// cyclic polytopes and low-dimensional sphere checks.

#include <optional>
#include <string>
#include <vector>

#include "murai/multicomplex.hpp"
#include "murai/simplicial.hpp"

namespace murai {

// ---------------------------------------------------------------------------
// Chordality

struct ChordalityReport {
  bool chordal = true;
  /// A shortest chordless cycle (length >= 4) when not chordal.
  std::vector<Vertex> witness;
};

/// Maximum cardinality search followed by a perfect elimination check.
bool is_chordal(const Graph& g);
/// Positions in g of a shortest induced cycle of length >= 4.
std::optional<std::vector<int>> shortest_chordless_cycle(const Graph& g);
/// Consecutive vertices adjacent, all other pairs non-adjacent, length >= 4.
bool is_chordless_cycle(const Graph& g, const std::vector<int>& cycle);
ChordalityReport chordality(const SimplicialComplex& K);
/// Longest induced cycle of length >= 4 in the 1-skeleton; 0 when chordal.
int chordless_cycle_bound(const SimplicialComplex& K);

// ---------------------------------------------------------------------------
// Stackedness

struct StackednessReport {
  bool stacked = false;
  /// k in vc^k(Delta^n).
  std::optional<int> truncation_cuts;
  /// n = dim + 1.
  std::optional<int> base_dim;
};

/// Kalai's criterion for a Murai sphere over c: chordal, and every minimal non-face among
/// real vertices has size 2 or size > |c| - 2. One-dimensional spheres count as stacked.
StackednessReport stackedness(const SimplicialComplex& K, const CompositionVector& c);

// ---------------------------------------------------------------------------
// Neighborliness and colouring

/// Every ceil(dim / 2)-subset of real vertices is a face.
bool is_neighborly(const SimplicialComplex& K);
int chromatic_number(const Graph& g);
/// A proper colouring with chromatic_number(g) colours; colour[i] for g.vertices[i].
std::vector<int> optimal_colouring(const Graph& g);

// ---------------------------------------------------------------------------
// Cyclic polytopes

struct CyclicSpec {
  int p = 0;
  int q = 0;
};

/// Delta(p, q): the boundary of C(p, q) from Gale's evenness condition, on vertices
/// t_k = (1, k), k = 1..p.
SimplicialComplex gale_facets(CyclicSpec spec);
bool gale_evenness(std::uint64_t subset, int p);
std::optional<VertexMap> cyclic_compare(const SimplicialComplex& K, CyclicSpec spec);
/// <x^a : |a| = k> over c = (k+2, k).
Multicomplex cyclic_multicomplex(int k);
/// The explicit vertex map of Bier_(k+2,k)(<x^a : |a| = k>) onto Delta(2k+4, 2k+1), k >= 3.
VertexMap murai_cyclic_map(int k);
/// The map sends the facets of K bijectively onto the facets of L.
bool map_carries_facets(const SimplicialComplex& K, const SimplicialComplex& L, const VertexMap& map);

// ---------------------------------------------------------------------------
// Sphere checks

/// A shelling order of the facets, if the backtracking search (at most `max_facets`
/// facets) finds one.
std::optional<std::vector<FaceMask>> shellability_witness(const SimplicialComplex& K, int max_facets = 30);

struct SphereCheck {
  bool passed = false;
  /// True when the test decides sphericity (dimension <= 2).
  bool complete = false;
  /// Set when a shelling search ran.
  std::optional<bool> shellable;
  std::string detail;
};

/// dim 0: two points; dim 1: one cycle; dim 2: pseudomanifold, chi = 2 and cyclic links;
/// higher: pseudomanifold with the sphere's chi, plus an optional shelling search.
SphereCheck sphere_check(const SimplicialComplex& K, bool try_shelling = true);

// ---------------------------------------------------------------------------
// Named types

/// Names of the reference spheres isomorphic to K, most specific first: Z_p, boundaries of
/// simplices and their joins, the dimension-2 polytopes of the classification (P_3×I, I^3,
/// P_5×I, vc^1(I^3), K_P, K_Q), cyclic spheres Δ(p,q) and stacked types vc^k(Δ^n).
std::vector<std::string> named_types(const SimplicialComplex& K);

/// Bier(K) for every simplicial complex K on the ground set [n] other than the full simplex,
/// one representative per isomorphism class of spheres.
const std::vector<SimplicialComplex>& bier_catalogue(int n);
/// K is isomorphic to some Bier(L) with L on [n].
bool is_bier_sphere(const SimplicialComplex& K, int n);

struct ClassifiedSphere {
  Multicomplex multicomplex;
  SimplicialComplex sphere;
  int class_id = 0;
};

struct IsoClass {
  int id = 0;
  std::size_t representative = 0;  // index into ClassifiedSphere list
  std::size_t count = 0;
  std::vector<std::string> names;
};

struct Classification {
  std::vector<ClassifiedSphere> spheres;
  std::vector<IsoClass> classes;
};

/// Sorts spheres into isomorphism classes, numbering classes by first appearance.
Classification classify_spheres(std::vector<std::pair<Multicomplex, SimplicialComplex>> items);
/// All proper c-multicomplexes with |c| = 3 (one-dimensional spheres).
Classification classify_dim1(const CompositionVector& c);
/// All proper c-multicomplexes with |c| = 4 (two-dimensional spheres).
Classification classify_dim2(const CompositionVector& c);

}  // namespace murai
