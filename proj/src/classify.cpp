#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <unordered_map>

#include "murai/analysis.hpp"
#include "murai/error.hpp"
#include "murai/sphere.hpp"

namespace murai {
namespace {

std::string sup(int k) { return "^" + std::to_string(k); }

SimplicialComplex boundary_on_axis(int axis, int a) {
  std::vector<Vertex> vs;
  for (int j = 0; j <= a; ++j) vs.push_back(Vertex{axis, j});
  return boundary_simplex(std::move(vs));
}

SimplicialComplex join_all(const std::vector<SimplicialComplex>& parts) {
  SimplicialComplex out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = join(out, parts[i]);
  return out;
}

SimplicialComplex stellar_subdivision(const SimplicialComplex& K, FaceMask facet) {
  auto universe = K.universe();
  int axis = 0;
  for (const auto& v : universe) axis = std::max(axis, v.axis);
  universe.push_back(Vertex{axis + 1, 0});
  const FaceMask apex = FaceMask{1} << K.universe_size();
  std::vector<FaceMask> facets;
  for (auto f : K.facets()) {
    if (f != facet) facets.push_back(f);
  }
  for (FaceMask rest = facet; rest; rest &= rest - 1) facets.push_back((facet & ~(rest & (~rest + 1))) | apex);
  return SimplicialComplex::from_masks(std::move(universe), std::move(facets));
}

// Partitions of `total` into exactly `parts` positive parts, non-increasing.
void partitions(int total, int parts, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (int a = std::min(total - parts + 1, max_part); a >= 1; --a) {
    cur.push_back(a);
    partitions(total - a, parts - 1, a, cur, out);
    cur.pop_back();
  }
}

std::string join_name(const std::vector<int>& parts) {
  std::string name;
  for (int a : parts) {
    if (!name.empty()) name += '*';
    name += "∂Δ" + sup(a);
  }
  return name;
}

struct Reference {
  std::string name;
  SimplicialComplex complex;
};

std::vector<Reference> build_references(int f0, int dim) {
  std::vector<Reference> refs;
  if (dim == 1 && f0 >= 3) refs.push_back({"Z_" + std::to_string(f0), cycle_complex(f0)});
  // Joins of j boundaries of simplices: f0 = dim + 1 + j.
  const int j = f0 - dim - 1;
  if (j >= 1 && dim >= 1) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions(dim + 1, j, dim + 1, cur, parts);
    for (const auto& ps : parts) {
      std::vector<SimplicialComplex> factors;
      for (std::size_t i = 0; i < ps.size(); ++i) factors.push_back(boundary_on_axis(static_cast<int>(i) + 1, ps[i]));
      refs.push_back({join_name(ps), join_all(factors)});
    }
  }
  // Z_p joined with boundaries of simplices, p >= 5.
  for (int p = 5; p <= f0 && dim >= 2; ++p) {
    const int rest_vertices = f0 - p;
    const int rest_dim = dim - 2;
    const int jr = rest_vertices - rest_dim - 1;
    if (jr < 1) continue;
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions(rest_dim + 1, jr, rest_dim + 1, cur, parts);
    for (const auto& ps : parts) {
      std::vector<SimplicialComplex> factors{cycle_complex(p, 1)};
      for (std::size_t i = 0; i < ps.size(); ++i) factors.push_back(boundary_on_axis(static_cast<int>(i) + 2, ps[i]));
      refs.push_back({"Z_" + std::to_string(p) + "*" + join_name(ps), join_all(factors)});
    }
  }
  if (dim == 2) {
    const auto prism = join(cycle_complex(3, 1), boundary_on_axis(2, 1));
    const auto octahedron = join_all({boundary_on_axis(1, 1), boundary_on_axis(2, 1), boundary_on_axis(3, 1)});
    const auto pentagonal = join(cycle_complex(5, 1), boundary_on_axis(2, 1));
    const auto cut_cube = stellar_subdivision(octahedron, octahedron.facets().front());
    const CompositionVector c211({2, 1, 1});
    const auto kp = facet_set(Multicomplex::from_generators(c211, parse_monomials("2 0 0; 0 1 0; 0 0 1", 3)));
    const auto kq = facet_set(Multicomplex::from_generators(c211, parse_monomials("2 0 0; 1 1 0; 0 0 1", 3)));
    for (auto* r : {&prism, &octahedron, &pentagonal, &cut_cube, &kp, &kq}) {
      if (r->f0() != f0) continue;
      const char* name = r == &prism        ? "P_3×I"
                         : r == &octahedron ? "I^3"
                         : r == &pentagonal ? "P_5×I"
                         : r == &cut_cube   ? "vc^1(I^3)"
                         : r == &kp         ? "K_P"
                                            : "K_Q";
      refs.push_back({name, *r});
    }
  }
  if (dim >= 2 && f0 >= dim + 4 && f0 <= 16) {
    refs.push_back({"Δ(" + std::to_string(f0) + "," + std::to_string(dim + 1) + ")", gale_facets({f0, dim + 1})});
  }
  return refs;
}

const std::vector<Reference>& references(int f0, int dim) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<Reference>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({f0, dim});
  if (it == cache.end()) it = cache.emplace(std::make_pair(f0, dim), build_references(f0, dim)).first;
  return it->second;
}

bool stacked_shape(const SimplicialComplex& K) {
  const int dim = K.dimension();
  bool ok = true;
  K.face_lattice().complement().minimal_of_up_closed().for_each([&](std::uint64_t x) {
    const int size = std::popcount(x);
    if (size != 2 && size <= dim) ok = false;
  });
  return ok && is_chordal(one_skeleton(K));
}

}  // namespace

std::vector<std::string> named_types(const SimplicialComplex& K) {
  std::vector<std::string> names;
  const int dim = K.dimension();
  if (dim < 1 || !is_pseudomanifold(K)) return names;
  for (const auto& ref : references(K.f0(), dim)) {
    if (ref.complex.f_vector() == K.f_vector() && is_isomorphic(ref.complex, K)) names.push_back(ref.name);
  }
  if (dim >= 2 && stacked_shape(K)) {
    names.push_back("vc" + sup(K.f0() - dim - 2) + "(Δ" + sup(dim + 1) + ")");
  }
  return names;
}

const std::vector<SimplicialComplex>& bier_catalogue(int n) {
  if (n < 1 || n > 5) fail(Errc::size_cap, "Bier catalogue supports ground sets of size 1..5");
  static std::mutex mu;
  static std::map<int, std::vector<SimplicialComplex>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<SimplicialComplex> reps;
  std::unordered_multimap<std::uint64_t, std::size_t> by_hash;
  for_each_proper(CompositionVector(std::vector<int>(static_cast<std::size_t>(n), 1)), [&](const Multicomplex& M) {
    auto S = facet_set(M);
    const auto h = iso_invariant_hash(S);
    auto [lo, hi] = by_hash.equal_range(h);
    for (auto i = lo; i != hi; ++i) {
      if (is_isomorphic(reps[i->second], S)) return;
    }
    by_hash.emplace(h, reps.size());
    reps.push_back(std::move(S));
  });
  return cache.emplace(n, std::move(reps)).first->second;
}

bool is_bier_sphere(const SimplicialComplex& K, int n) {
  const auto& catalogue = bier_catalogue(n);
  return std::any_of(catalogue.begin(), catalogue.end(), [&](const SimplicialComplex& B) {
    return B.f_vector() == K.f_vector() && is_isomorphic(B, K);
  });
}

Classification classify_spheres(std::vector<std::pair<Multicomplex, SimplicialComplex>> items) {
  Classification out;
  std::unordered_multimap<std::uint64_t, std::size_t> by_hash;
  for (auto& [M, S] : items) {
    const auto h = iso_invariant_hash(S);
    int id = -1;
    auto [lo, hi] = by_hash.equal_range(h);
    for (auto i = lo; i != hi; ++i) {
      const auto& rep = out.spheres[out.classes[i->second].representative].sphere;
      if (is_isomorphic(rep, S)) {
        id = static_cast<int>(i->second);
        break;
      }
    }
    if (id < 0) {
      id = static_cast<int>(out.classes.size());
      out.classes.push_back(IsoClass{id, out.spheres.size(), 0, {}});
      by_hash.emplace(h, out.classes.size() - 1);
    }
    ++out.classes[static_cast<std::size_t>(id)].count;
    out.spheres.push_back(ClassifiedSphere{std::move(M), std::move(S), id});
  }
  for (auto& cls : out.classes) cls.names = named_types(out.spheres[cls.representative].sphere);
  return out;
}

namespace {

Classification classify_census(const CompositionVector& c) {
  std::vector<std::pair<Multicomplex, SimplicialComplex>> items;
  for_each_proper(c, [&](const Multicomplex& M) { items.emplace_back(M, facet_set(M)); });
  return classify_spheres(std::move(items));
}

}  // namespace

Classification classify_dim1(const CompositionVector& c) {
  if (c.total() != 3) fail(Errc::invalid_argument, "one-dimensional Murai spheres need |c| = 3");
  return classify_census(c);
}

Classification classify_dim2(const CompositionVector& c) {
  if (c.total() != 4) fail(Errc::invalid_argument, "two-dimensional Murai spheres need |c| = 4");
  return classify_census(c);
}

}  // namespace murai
