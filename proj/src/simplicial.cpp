#include "murai/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>

#include "murai/error.hpp"

namespace murai {
namespace {

FaceMask bit(int i) { return FaceMask{1} << i; }

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

int to_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    fail(Errc::invalid_argument, "vertex token: not an integer: '" + std::string(s) + "'");
  }
  return v;
}

// Removes duplicates and dominated sets; result sorted by value.
std::vector<FaceMask> antichain(std::vector<FaceMask> sets) {
  if (!sets.empty() && std::all_of(sets.begin(), sets.end(),
                                   [&](FaceMask s) { return std::popcount(s) == std::popcount(sets[0]); })) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    return sets;
  }
  std::sort(sets.begin(), sets.end(), [](FaceMask a, FaceMask b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa > pb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<FaceMask> kept;
  for (auto s : sets) {
    const bool dominated = std::any_of(kept.begin(), kept.end(), [s](FaceMask k) { return (s & ~k) == 0; });
    if (!dominated) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

std::string format_vertex(Vertex v) { return std::to_string(v.axis) + ":" + std::to_string(v.level); }

Vertex parse_vertex(std::string_view token) {
  token = trim(token);
  const auto colon = token.find(':');
  if (colon == std::string_view::npos) fail(Errc::invalid_argument, "vertex token must be 'i:j': '" + std::string(token) + "'");
  Vertex v{to_int(trim(token.substr(0, colon))), to_int(trim(token.substr(colon + 1)))};
  if (v.axis < 1 || v.level < 0) fail(Errc::invalid_argument, "vertex token out of range: '" + std::string(token) + "'");
  return v;
}

// ---------------------------------------------------------------------------
// SimplicialComplex

SimplicialComplex SimplicialComplex::from_facets(std::vector<Vertex> universe,
                                                 std::span<const std::vector<Vertex>> facets) {
  SimplicialComplex K;
  K.universe_ = std::move(universe);
  if (K.universe_.size() > kMaxUniverse) fail(Errc::size_cap, "vertex universe exceeds 64 vertices");
  for (const auto& f : facets) {
    FaceMask mask = 0;
    for (const auto& v : f) {
      const auto idx = K.index_of(v);
      if (!idx) fail(Errc::invalid_argument, "invalid facet: vertex " + format_vertex(v) + " is not in the universe");
      mask |= bit(*idx);
    }
    K.facets_.push_back(mask);
  }
  K.finish();
  return K;
}

SimplicialComplex SimplicialComplex::from_masks(std::vector<Vertex> universe, std::vector<FaceMask> facets) {
  SimplicialComplex K;
  K.universe_ = std::move(universe);
  if (K.universe_.size() > kMaxUniverse) fail(Errc::size_cap, "vertex universe exceeds 64 vertices");
  const FaceMask all = K.universe_.size() == 64 ? ~FaceMask{0} : bit(static_cast<int>(K.universe_.size())) - 1;
  for (auto f : facets) {
    if (f & ~all) fail(Errc::invalid_argument, "invalid facet: mask has bits outside the universe");
  }
  K.facets_ = std::move(facets);
  K.finish();
  return K;
}

SimplicialComplex SimplicialComplex::from_minimal_non_faces(std::vector<Vertex> universe,
                                                           std::span<const FaceMask> non_faces) {
  const int n = static_cast<int>(universe.size());
  if (n > SubsetBitset::kMaxVars) fail(Errc::size_cap, "universe too large to expand a Stanley-Reisner presentation");
  SubsetBitset bad(n);
  for (auto g : non_faces) {
    if (n < 64 && (g >> n) != 0) fail(Errc::invalid_argument, "non-face has bits outside the universe");
    bad.set(g);
  }
  bad.close_up();
  const SubsetBitset faces = bad.complement();
  if (faces.count() == 0) fail(Errc::invalid_argument, "the empty set is listed as a non-face");
  return from_masks(std::move(universe), faces.maximal_of_down_closed().members());
}

void SimplicialComplex::finish() {
  {
    auto sorted = universe_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      fail(Errc::invalid_argument, "vertex universe has repeated vertices");
    }
  }
  facets_ = antichain(facets_.empty() ? std::vector<FaceMask>{0} : std::move(facets_));
  real_ = 0;
  for (auto f : facets_) real_ |= f;
  real_list_.clear();
  for (int i = 0; i < universe_size(); ++i) {
    if (real_ & bit(i)) real_list_.push_back(i);
  }
  if (f0() > kMaxRealVertices) {
    fail(Errc::size_cap, "complex has " + std::to_string(f0()) + " real vertices; cap is " +
                             std::to_string(kMaxRealVertices));
  }
  auto lattice = std::make_shared<SubsetBitset>(f0());
  dim_ = -1;
  for (auto f : facets_) {
    lattice->set(compress(f));
    dim_ = std::max(dim_, std::popcount(f) - 1);
  }
  lattice->close_down();
  const auto sizes = lattice->size_counts();
  fvec_.assign(sizes.begin() + 1, sizes.begin() + 1 + (dim_ + 1));
  lattice_ = std::move(lattice);
}

std::uint64_t SimplicialComplex::compress(FaceMask face) const {
  face &= real_;
  if ((real_ & (real_ + 1)) == 0) return face;
  std::uint64_t out = 0;
  for (; face; face &= face - 1) {
    out |= std::uint64_t{1} << std::popcount(real_ & ((face & (~face + 1)) - 1));
  }
  return out;
}

FaceMask SimplicialComplex::expand(std::uint64_t compressed) const {
  FaceMask out = 0;
  while (compressed) {
    const int k = std::countr_zero(compressed);
    compressed &= compressed - 1;
    out |= bit(real_list_[static_cast<std::size_t>(k)]);
  }
  return out;
}

bool SimplicialComplex::is_face(FaceMask face) const {
  if (face & ~real_) return false;
  return lattice_->test(compress(face));
}

std::optional<int> SimplicialComplex::index_of(Vertex v) const {
  for (int i = 0; i < universe_size(); ++i) {
    if (universe_[static_cast<std::size_t>(i)] == v) return i;
  }
  return std::nullopt;
}

FaceMask SimplicialComplex::mask_of(std::span<const Vertex> vertices) const {
  FaceMask mask = 0;
  for (const auto& v : vertices) {
    const auto idx = index_of(v);
    if (!idx) fail(Errc::invalid_argument, "vertex " + format_vertex(v) + " is not in the universe");
    mask |= bit(*idx);
  }
  return mask;
}

std::vector<Vertex> SimplicialComplex::vertices_of(FaceMask face) const {
  std::vector<Vertex> out;
  while (face) {
    const int i = std::countr_zero(face);
    face &= face - 1;
    out.push_back(universe_[static_cast<std::size_t>(i)]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Graph

int Graph::edge_count() const {
  int twice = 0;
  for (auto a : adjacency) twice += std::popcount(a);
  return twice / 2;
}

Graph Graph::from_edges(std::vector<Vertex> vertices, std::span<const std::pair<int, int>> edges) {
  Graph g;
  g.vertices = std::move(vertices);
  if (g.vertices.size() > 64) fail(Errc::size_cap, "graph exceeds 64 vertices");
  g.adjacency.assign(g.vertices.size(), 0);
  for (auto [a, b] : edges) {
    if (a == b || a < 0 || b < 0 || a >= g.size() || b >= g.size()) fail(Errc::invalid_argument, "invalid edge");
    g.adjacency[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
    g.adjacency[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
  }
  return g;
}

Graph one_skeleton(const SimplicialComplex& K) {
  Graph g;
  const int n = K.f0();
  for (int idx : K.real_list()) g.vertices.push_back(K.universe()[static_cast<std::size_t>(idx)]);
  g.adjacency.assign(static_cast<std::size_t>(n), 0);
  const auto& faces = K.face_lattice();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (faces.test((std::uint64_t{1} << i) | (std::uint64_t{1} << j))) {
        g.adjacency[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        g.adjacency[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
      }
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// Constructions

SimplicialComplex join(const SimplicialComplex& K, const SimplicialComplex& L) {
  for (const auto& v : L.universe()) {
    if (K.index_of(v)) fail(Errc::invalid_argument, "join: vertex universes overlap at " + format_vertex(v));
  }
  auto universe = K.universe();
  universe.insert(universe.end(), L.universe().begin(), L.universe().end());
  if (universe.size() > SimplicialComplex::kMaxUniverse) fail(Errc::size_cap, "join: universe exceeds 64 vertices");
  const int shift = K.universe_size();
  std::vector<FaceMask> facets;
  for (auto f : K.facets()) {
    for (auto g : L.facets()) facets.push_back(f | (g << shift));
  }
  return SimplicialComplex::from_masks(std::move(universe), std::move(facets));
}

SimplicialComplex cone(const SimplicialComplex& K, std::optional<Vertex> apex) {
  if (!apex) {
    int axis = 0;
    for (const auto& v : K.universe()) axis = std::max(axis, v.axis);
    apex = Vertex{axis + 1, 0};
  }
  if (K.index_of(*apex)) fail(Errc::invalid_argument, "cone: apex already in the universe");
  auto universe = K.universe();
  universe.push_back(*apex);
  if (universe.size() > SimplicialComplex::kMaxUniverse) fail(Errc::size_cap, "cone: universe exceeds 64 vertices");
  std::vector<FaceMask> facets;
  for (auto f : K.facets()) facets.push_back(f | bit(K.universe_size()));
  return SimplicialComplex::from_masks(std::move(universe), std::move(facets));
}

SimplicialComplex boundary_simplex(std::vector<Vertex> vertices) {
  const int n = static_cast<int>(vertices.size());
  if (n < 2) fail(Errc::invalid_argument, "boundary of a simplex needs at least 2 vertices");
  if (n > SimplicialComplex::kMaxUniverse) fail(Errc::size_cap, "simplex boundary exceeds 64 vertices");
  const FaceMask all = n == 64 ? ~FaceMask{0} : bit(n) - 1;
  std::vector<FaceMask> facets;
  for (int i = 0; i < n; ++i) facets.push_back(all ^ bit(i));
  return SimplicialComplex::from_masks(std::move(vertices), std::move(facets));
}

SimplicialComplex cycle_complex(int p, int axis) {
  if (p < 3) fail(Errc::invalid_argument, "a cycle needs at least 3 vertices");
  if (p > SimplicialComplex::kMaxUniverse) fail(Errc::size_cap, "cycle exceeds 64 vertices");
  std::vector<Vertex> universe;
  std::vector<FaceMask> facets;
  for (int i = 0; i < p; ++i) {
    universe.push_back(Vertex{axis, i});
    facets.push_back(bit(i) | bit((i + 1) % p));
  }
  return SimplicialComplex::from_masks(std::move(universe), std::move(facets));
}

SimplicialComplex permute_vertices(const SimplicialComplex& K, std::span<const int> perm) {
  const int n = K.universe_size();
  if (static_cast<int>(perm.size()) != n) fail(Errc::invalid_argument, "permutation has wrong length");
  FaceMask seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= n || (seen & bit(p))) fail(Errc::invalid_argument, "not a permutation");
    seen |= bit(p);
  }
  std::vector<FaceMask> facets;
  for (auto f : K.facets()) {
    FaceMask g = 0;
    while (f) {
      const int i = std::countr_zero(f);
      f &= f - 1;
      g |= bit(perm[static_cast<std::size_t>(i)]);
    }
    facets.push_back(g);
  }
  return SimplicialComplex::from_masks(K.universe(), std::move(facets));
}

SimplicialComplex link(const SimplicialComplex& K, int vertex_index) {
  if (vertex_index < 0 || vertex_index >= K.universe_size() || !(K.real_vertices() & bit(vertex_index))) {
    fail(Errc::invalid_argument, "link: not a real vertex");
  }
  std::vector<FaceMask> facets;
  for (auto f : K.facets()) {
    if (f & bit(vertex_index)) facets.push_back(f ^ bit(vertex_index));
  }
  return SimplicialComplex::from_masks(K.universe(), std::move(facets));
}

// ---------------------------------------------------------------------------
// Invariants

long long euler_characteristic(const SimplicialComplex& K) {
  long long chi = 0;
  const auto& f = K.f_vector();
  for (std::size_t k = 0; k < f.size(); ++k) chi += (k % 2 == 0) ? f[k] : -f[k];
  return chi;
}

bool is_pure(const SimplicialComplex& K) {
  const auto& facets = K.facets();
  return std::all_of(facets.begin(), facets.end(),
                     [&](FaceMask f) { return std::popcount(f) == K.dimension() + 1; });
}

namespace {

// Ridge bookkeeping through a table indexed by compressed faces: -1 unseen, -2 seen twice,
// otherwise the first facet containing the ridge. Touched entries are reset before returning.
bool small_pseudomanifold(const SimplicialComplex& K) {
  const auto& facets = K.facets();
  thread_local std::vector<std::int32_t> state;
  if (state.size() < (std::size_t{1} << K.f0())) state.assign(std::size_t{1} << K.f0(), -1);
  std::vector<std::uint64_t> compressed(facets.size());
  for (std::size_t k = 0; k < facets.size(); ++k) compressed[k] = K.compress(facets[k]);
  const bool ok = [&] {
    std::vector<std::size_t> parent(facets.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t k = 0; k < facets.size(); ++k) {
      for (auto rest = compressed[k]; rest; rest &= rest - 1) {
        auto& st = state[compressed[k] ^ (rest & (~rest + 1))];
        if (st == -2) return false;
        if (st == -1) {
          st = static_cast<std::int32_t>(k);
        } else {
          parent[find(static_cast<std::size_t>(st))] = find(k);
          st = -2;
        }
      }
    }
    for (auto f : compressed) {
      for (auto rest = f; rest; rest &= rest - 1) {
        if (state[f ^ (rest & (~rest + 1))] != -2) return false;
      }
    }
    const std::size_t root = find(0);
    for (std::size_t k = 1; k < facets.size(); ++k) {
      if (find(k) != root) return false;
    }
    return true;
  }();
  for (auto f : compressed) {
    for (auto rest = f; rest; rest &= rest - 1) state[f ^ (rest & (~rest + 1))] = -1;
  }
  return ok;
}

}  // namespace

bool is_pseudomanifold(const SimplicialComplex& K) {
  if (!is_pure(K)) return false;
  if (K.f0() <= 16) return small_pseudomanifold(K);
  const auto& facets = K.facets();
  std::vector<std::pair<FaceMask, std::size_t>> ridges;
  for (std::size_t k = 0; k < facets.size(); ++k) {
    FaceMask rest = facets[k];
    while (rest) {
      const FaceMask b = rest & (~rest + 1);
      rest ^= b;
      ridges.emplace_back(facets[k] ^ b, k);
    }
  }
  std::sort(ridges.begin(), ridges.end());
  std::vector<std::size_t> parent(facets.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < ridges.size();) {
    std::size_t j = i;
    while (j < ridges.size() && ridges[j].first == ridges[i].first) ++j;
    if (j - i != 2) return false;
    parent[find(ridges[i].second)] = find(ridges[i + 1].second);
    i = j;
  }
  const std::size_t root = find(0);
  for (std::size_t k = 1; k < facets.size(); ++k) {
    if (find(k) != root) return false;
  }
  return true;
}

std::vector<FaceMask> minimal_non_faces(const SimplicialComplex& K) {
  std::vector<FaceMask> out;
  for (int i = 0; i < K.universe_size(); ++i) {
    if (!(K.real_vertices() & bit(i))) out.push_back(bit(i));
  }
  K.face_lattice().complement().minimal_of_up_closed().for_each(
      [&](std::uint64_t x) { out.push_back(K.expand(x)); });
  std::sort(out.begin(), out.end(), [](FaceMask a, FaceMask b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

bool is_flag(const SimplicialComplex& K) {
  bool flag = true;
  K.face_lattice().complement().minimal_of_up_closed().for_each([&](std::uint64_t x) {
    if (std::popcount(x) != 2) flag = false;
  });
  return flag;
}

// ---------------------------------------------------------------------------
// Text format

std::string format_facets(const SimplicialComplex& K) {
  std::string out;
  bool first_facet = true;
  for (auto f : K.facets()) {
    if (!first_facet) out += '|';
    first_facet = false;
    bool first = true;
    for (const auto& v : K.vertices_of(f)) {
      if (!first) out += ',';
      first = false;
      out += format_vertex(v);
    }
  }
  return out;
}

std::vector<std::vector<Vertex>> parse_facets(std::string_view text) {
  std::vector<std::vector<Vertex>> out;
  text = trim(text);
  if (text.empty()) return {std::vector<Vertex>{}};
  while (true) {
    const auto bar = text.find('|');
    const auto facet = trim(text.substr(0, bar));
    if (facet.empty()) fail(Errc::invalid_argument, "facet list: empty facet");
    std::vector<Vertex> vs;
    std::string_view rest = facet;
    while (true) {
      const auto comma = rest.find(',');
      vs.push_back(parse_vertex(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    out.push_back(std::move(vs));
    if (bar == std::string_view::npos) break;
    text.remove_prefix(bar + 1);
  }
  return out;
}

SimplicialComplex complex_from_text(std::string_view text) {
  const auto facets = parse_facets(text);
  std::vector<Vertex> universe;
  for (const auto& f : facets) universe.insert(universe.end(), f.begin(), f.end());
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  return SimplicialComplex::from_facets(std::move(universe), facets);
}

}  // namespace murai
