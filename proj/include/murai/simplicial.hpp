#pragma once

// Finite simplicial complexes over an explicit, ordered vertex universe.
//
// Faces are bitmasks over universe indices (universe size <= 64). Universe entries that lie
// in no facet are ghost vertices: they stay in the universe but are excluded from f_0, from
// the 1-skeleton and from isomorphism testing.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "murai/subset_bitset.hpp"

namespace murai {

using FaceMask = std::uint64_t;

/// The vertex x~_i^(j): `axis` is 1-based, `level` is 0-based.
struct Vertex {
  int axis = 1;
  int level = 0;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

std::string format_vertex(Vertex v);  // "i:j"
Vertex parse_vertex(std::string_view token);

class SimplicialComplex {
 public:
  static constexpr int kMaxUniverse = 64;
  static constexpr int kMaxRealVertices = 24;

  /// Keeps the inclusion-maximal members of `facets`. An empty facet list stands for the
  /// complex {emptyset}.
  static SimplicialComplex from_facets(std::vector<Vertex> universe, std::span<const std::vector<Vertex>> facets);
  static SimplicialComplex from_masks(std::vector<Vertex> universe, std::vector<FaceMask> facets);
  /// The complex of all subsets of the universe containing none of `non_faces`.
  static SimplicialComplex from_minimal_non_faces(std::vector<Vertex> universe, std::span<const FaceMask> non_faces);

  const std::vector<Vertex>& universe() const noexcept { return universe_; }
  int universe_size() const noexcept { return static_cast<int>(universe_.size()); }
  /// Facets sorted by mask value.
  const std::vector<FaceMask>& facets() const noexcept { return facets_; }
  FaceMask real_vertices() const noexcept { return real_; }
  int f0() const noexcept { return static_cast<int>(real_list_.size()); }
  /// (f_0, ..., f_dim).
  const std::vector<long long>& f_vector() const noexcept { return fvec_; }
  int dimension() const noexcept { return dim_; }

  bool is_face(FaceMask face) const;
  std::optional<int> index_of(Vertex v) const;
  FaceMask mask_of(std::span<const Vertex> vertices) const;
  std::vector<Vertex> vertices_of(FaceMask face) const;

  /// Universe indices of the real vertices, ascending.
  const std::vector<int>& real_list() const noexcept { return real_list_; }
  /// Maps a face onto the bit positions of real_list().
  std::uint64_t compress(FaceMask face) const;
  FaceMask expand(std::uint64_t compressed) const;
  /// Faces as compressed masks.
  const SubsetBitset& face_lattice() const noexcept { return *lattice_; }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.universe_ == b.universe_ && a.facets_ == b.facets_;
  }

 private:
  SimplicialComplex() = default;
  void finish();

  std::vector<Vertex> universe_;
  std::vector<FaceMask> facets_;
  FaceMask real_ = 0;
  std::vector<int> real_list_;
  std::vector<long long> fvec_;
  int dim_ = -1;
  std::shared_ptr<const SubsetBitset> lattice_;
};

/// Simple graph on an explicit vertex list; adjacency[i] has bit j set when i~j.
struct Graph {
  std::vector<Vertex> vertices;
  std::vector<std::uint64_t> adjacency;

  int size() const noexcept { return static_cast<int>(vertices.size()); }
  bool adjacent(int i, int j) const { return (adjacency[static_cast<std::size_t>(i)] >> j) & 1U; }
  int edge_count() const;
  static Graph from_edges(std::vector<Vertex> vertices, std::span<const std::pair<int, int>> edges);
};

Graph one_skeleton(const SimplicialComplex& K);

// Constructions.
SimplicialComplex join(const SimplicialComplex& K, const SimplicialComplex& L);
/// Cone with a fresh apex; defaults to (max axis + 1, 0).
SimplicialComplex cone(const SimplicialComplex& K, std::optional<Vertex> apex = std::nullopt);
/// Boundary of the simplex on `vertices` (at least 2).
SimplicialComplex boundary_simplex(std::vector<Vertex> vertices);
/// The p-cycle Z_p on vertices (axis, 0..p-1).
SimplicialComplex cycle_complex(int p, int axis = 1);
/// Same facets under the universe permutation index i -> perm[i] (universe order kept).
SimplicialComplex permute_vertices(const SimplicialComplex& K, std::span<const int> perm);
/// Link of a vertex given by universe index.
SimplicialComplex link(const SimplicialComplex& K, int vertex_index);

// Invariants.
long long euler_characteristic(const SimplicialComplex& K);
bool is_pure(const SimplicialComplex& K);
/// Pure, every ridge in exactly two facets, facet adjacency graph connected.
bool is_pseudomanifold(const SimplicialComplex& K);
/// Inclusion-minimal non-faces over the whole universe; ghost vertices appear as singletons.
std::vector<FaceMask> minimal_non_faces(const SimplicialComplex& K);
/// Every minimal non-face among real vertices has size 2.
bool is_flag(const SimplicialComplex& K);

/// Real-vertex bijection, as (vertex of K, vertex of L) pairs ordered by K's universe.
using VertexMap = std::vector<std::pair<Vertex, Vertex>>;

/// A bijection of real vertices carrying the facets of K onto those of L, if one exists.
std::optional<VertexMap> find_isomorphism(const SimplicialComplex& K, const SimplicialComplex& L,
                                          int max_vertices = SimplicialComplex::kMaxRealVertices);
inline bool is_isomorphic(const SimplicialComplex& K, const SimplicialComplex& L) {
  return find_isomorphism(K, L).has_value();
}
/// Isomorphism-invariant fingerprint (f-vector and refined vertex-degree profile).
std::uint64_t iso_invariant_hash(const SimplicialComplex& K);

// Facet text format: "1:0,2:1|1:1,2:0". The empty string is the complex {emptyset}.
std::string format_facets(const SimplicialComplex& K);
std::vector<std::vector<Vertex>> parse_facets(std::string_view text);
/// Complex on the vertices occurring in `text` (so without ghosts).
SimplicialComplex complex_from_text(std::string_view text);

}  // namespace murai
