#include "murai/buchstaber.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <tuple>

#include "murai/analysis.hpp"
#include "murai/error.hpp"

namespace murai {
namespace {

using Row = std::vector<std::int64_t>;

std::int64_t mod(std::int64_t a, int p) {
  const std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

std::int64_t inverse_mod(std::int64_t a, int p) {
  std::int64_t result = 1;
  std::int64_t base = mod(a, p);
  for (int e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

std::vector<Row> facet_rows(const SimplicialComplex& K, FaceMask facet, const CharMap& map) {
  std::vector<Row> rows;
  for (const auto& v : K.vertices_of(facet)) rows.push_back(map.assignment.at(v));
  return rows;
}

// Echelon basis of a subspace of F_p^d; vectors over F_2 are bit-packed.
class Echelon {
 public:
  explicit Echelon(int p) : p_(p) {}

  /// Adds v unless it lies in the span; returns whether it was independent.
  bool insert(Row v) {
    reduce(v);
    const auto lead = std::find_if(v.begin(), v.end(), [](std::int64_t x) { return x != 0; });
    if (lead == v.end()) return false;
    const std::int64_t inv = inverse_mod(*lead, p_);
    for (auto& x : v) x = x * inv % p_;
    pivots_.push_back(static_cast<int>(lead - v.begin()));
    rows_.push_back(std::move(v));
    return true;
  }

  bool spans(Row v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
  }

 private:
  void reduce(Row& v) const {
    for (auto& x : v) x = mod(x, p_);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const auto col = static_cast<std::size_t>(pivots_[k]);
      const std::int64_t f = v[col];
      if (f == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = mod(v[j] - f * rows_[k][j], p_);
    }
  }

  int p_;
  std::vector<Row> rows_;
  std::vector<int> pivots_;
};

class Echelon2 {
 public:
  bool insert(std::uint64_t v) {
    v = reduce(v);
    if (!v) return false;
    rows_.push_back(v);
    return true;
  }
  bool spans(std::uint64_t v) const { return reduce(v) == 0; }

 private:
  std::uint64_t reduce(std::uint64_t v) const {
    for (auto r : rows_) v = std::min(v, v ^ r);
    return v;
  }
  std::vector<std::uint64_t> rows_;
};

// A complex on compressed real vertices, with the search order fixed.
struct SearchFrame {
  int v = 0;
  std::vector<std::uint64_t> facets;
  std::vector<std::vector<std::size_t>> incident;
  std::vector<int> order;     // position -> vertex
  std::vector<int> position;  // vertex -> position
  int pinned = 0;             // the first `pinned` positions hold the first facet
};

SearchFrame make_frame(const SimplicialComplex& K) {
  SearchFrame fr;
  fr.v = K.f0();
  for (auto f : K.facets()) fr.facets.push_back(K.compress(f));
  fr.incident.resize(static_cast<std::size_t>(fr.v));
  for (std::size_t k = 0; k < fr.facets.size(); ++k) {
    for (auto f = fr.facets[k]; f; f &= f - 1) fr.incident[static_cast<std::size_t>(std::countr_zero(f))].push_back(k);
  }
  const std::uint64_t first = fr.facets.empty() ? 0 : fr.facets.front();
  for (auto f = first; f; f &= f - 1) fr.order.push_back(std::countr_zero(f));
  fr.pinned = static_cast<int>(fr.order.size());
  std::vector<int> rest;
  for (int u = 0; u < fr.v; ++u) {
    if (!(first >> u & 1U)) rest.push_back(u);
  }
  std::stable_sort(rest.begin(), rest.end(), [&](int a, int b) {
    return fr.incident[static_cast<std::size_t>(a)].size() > fr.incident[static_cast<std::size_t>(b)].size();
  });
  fr.order.insert(fr.order.end(), rest.begin(), rest.end());
  fr.position.assign(static_cast<std::size_t>(fr.v), 0);
  for (int pos = 0; pos < fr.v; ++pos) fr.position[static_cast<std::size_t>(fr.order[static_cast<std::size_t>(pos)])] = pos;
  return fr;
}

int max_facet_size(const SimplicialComplex& K) {
  int out = 0;
  for (auto f : K.facets()) out = std::max(out, std::popcount(f));
  return out;
}

// Number of candidates, or -1 when it exceeds `cap`.
long long count_or_cap(long long base, int d, long long divisor, long long cap) {
  long long total = 1;
  for (int i = 0; i < d; ++i) {
    if (total > (cap + 1) * divisor) return -1;
    total *= base;
  }
  const long long out = (total - 1) / divisor;
  return out > cap ? -1 : out;
}

// Nonzero vectors of F_p^d whose first nonzero entry is 1.
std::vector<Row> normalized_vectors(int p, int d) {
  std::vector<Row> out;
  Row v(static_cast<std::size_t>(d), 0);
  while (true) {
    int pos = d - 1;
    while (pos >= 0 && ++v[static_cast<std::size_t>(pos)] == p) v[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) break;
    const auto lead = std::find_if(v.begin(), v.end(), [](std::int64_t x) { return x != 0; });
    if (*lead == 1) out.push_back(v);
  }
  return out;
}

// Nonzero vectors in {-1,0,1}^d whose first nonzero entry is 1.
std::vector<Row> signed_unit_vectors(int d) {
  auto out = normalized_vectors(3, d);
  for (auto& v : out) {
    for (auto& x : v) x = x == 2 ? -1 : x;
  }
  return out;
}

Row basis_vector(int d, int i) {
  Row e(static_cast<std::size_t>(d), 0);
  e[static_cast<std::size_t>(i)] = 1;
  return e;
}

CharMap to_char_map(const SimplicialComplex& K, int prime, int d, const std::vector<Row>& by_vertex) {
  CharMap map{prime, d, {}};
  for (int u = 0; u < K.f0(); ++u) {
    map.assignment.emplace(K.universe()[static_cast<std::size_t>(K.real_list()[static_cast<std::size_t>(u)])],
                           by_vertex[static_cast<std::size_t>(u)]);
  }
  return map;
}

class ModPSearch {
 public:
  ModPSearch(const SearchFrame& fr, int p, int d, long long budget, std::vector<Row> candidates)
      : fr_(fr), p_(p), d_(d), budget_(budget), candidates_(std::move(candidates)) {
    vec_.assign(static_cast<std::size_t>(fr.v), Row{});
    bits_.assign(static_cast<std::size_t>(fr.v), 0);
    for (const auto& c : candidates_) candidate_bits_.push_back(pack(c));
    for (int i = 0; i < fr.pinned; ++i) {
      const auto u = static_cast<std::size_t>(fr.order[static_cast<std::size_t>(i)]);
      vec_[u] = basis_vector(d, i);
      bits_[u] = pack(vec_[u]);
    }
  }

  SearchOutcome run() {
    if (extend(static_cast<std::size_t>(fr_.pinned))) return SearchOutcome::found;
    return exhausted_ ? SearchOutcome::inconclusive : SearchOutcome::none;
  }
  long long nodes() const { return nodes_; }
  const std::vector<Row>& vectors() const { return vec_; }

 private:
  static std::uint64_t pack(const Row& v) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < v.size(); ++i) out |= static_cast<std::uint64_t>(v[i] & 1) << i;
    return out;
  }

  bool extend(std::size_t pos) {
    if (pos == fr_.order.size()) return true;
    const int u = fr_.order[pos];
    // Spans of the already-placed vertices of each facet through u.
    std::vector<Echelon2> spans2;
    std::vector<Echelon> spans;
    for (auto k : fr_.incident[static_cast<std::size_t>(u)]) {
      if (p_ == 2) {
        Echelon2 e;
        for (auto f = fr_.facets[k]; f; f &= f - 1) {
          const int w = std::countr_zero(f);
          if (fr_.position[static_cast<std::size_t>(w)] < static_cast<int>(pos)) e.insert(bits_[static_cast<std::size_t>(w)]);
        }
        spans2.push_back(std::move(e));
      } else {
        Echelon e(p_);
        for (auto f = fr_.facets[k]; f; f &= f - 1) {
          const int w = std::countr_zero(f);
          if (fr_.position[static_cast<std::size_t>(w)] < static_cast<int>(pos)) e.insert(vec_[static_cast<std::size_t>(w)]);
        }
        spans.push_back(std::move(e));
      }
    }
    for (std::size_t ci = 0; ci < candidates_.size(); ++ci) {
      if (++nodes_ > budget_) {
        exhausted_ = true;
        return false;
      }
      bool ok = true;
      if (p_ == 2) {
        const auto x = candidate_bits_[ci];
        ok = std::none_of(spans2.begin(), spans2.end(), [x](const Echelon2& e) { return e.spans(x); });
      } else {
        const auto& x = candidates_[ci];
        ok = std::none_of(spans.begin(), spans.end(), [&x](const Echelon& e) { return e.spans(x); });
      }
      if (!ok) continue;
      vec_[static_cast<std::size_t>(u)] = candidates_[ci];
      bits_[static_cast<std::size_t>(u)] = candidate_bits_[ci];
      if (extend(pos + 1)) return true;
      if (exhausted_) return false;
    }
    return false;
  }

  const SearchFrame& fr_;
  int p_;
  int d_;
  long long budget_;
  std::vector<Row> candidates_;
  std::vector<std::uint64_t> candidate_bits_;
  std::vector<Row> vec_;
  std::vector<std::uint64_t> bits_;
  long long nodes_ = 0;
  bool exhausted_ = false;
};

class IntegerSearch {
 public:
  IntegerSearch(const SearchFrame& fr, int d, long long budget)
      : fr_(fr), d_(d), budget_(budget), candidates_(signed_unit_vectors(d)) {
    vec_.assign(static_cast<std::size_t>(fr.v), Row{});
    for (int i = 0; i < fr.pinned; ++i) vec_[static_cast<std::size_t>(fr.order[static_cast<std::size_t>(i)])] = basis_vector(d, i);
  }

  SearchOutcome run() {
    if (extend(static_cast<std::size_t>(fr_.pinned))) return SearchOutcome::found;
    return SearchOutcome::inconclusive;
  }
  long long nodes() const { return nodes_; }
  const std::vector<Row>& vectors() const { return vec_; }

 private:
  bool extend(std::size_t pos) {
    if (pos == fr_.order.size()) return true;
    const int u = fr_.order[pos];
    std::vector<std::vector<Row>> placed;
    std::vector<Echelon2> spans2;
    for (auto k : fr_.incident[static_cast<std::size_t>(u)]) {
      std::vector<Row> rows;
      Echelon2 e;
      for (auto f = fr_.facets[k]; f; f &= f - 1) {
        const int w = std::countr_zero(f);
        if (fr_.position[static_cast<std::size_t>(w)] < static_cast<int>(pos)) {
          rows.push_back(vec_[static_cast<std::size_t>(w)]);
          e.insert(parity(rows.back()));
        }
      }
      placed.push_back(std::move(rows));
      spans2.push_back(std::move(e));
    }
    for (const auto& x : candidates_) {
      if (++nodes_ > budget_) {
        exhausted_ = true;
        return false;
      }
      const auto bits = parity(x);
      bool ok = std::none_of(spans2.begin(), spans2.end(), [bits](const Echelon2& e) { return e.spans(bits); });
      for (std::size_t k = 0; k < placed.size() && ok; ++k) {
        auto rows = placed[k];
        rows.push_back(x);
        ok = extends_to_basis(rows);
      }
      if (!ok) continue;
      vec_[static_cast<std::size_t>(u)] = x;
      if (extend(pos + 1)) return true;
      if (exhausted_) return false;
    }
    return false;
  }

  static std::uint64_t parity(const Row& v) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < v.size(); ++i) out |= static_cast<std::uint64_t>(v[i] & 1) << i;
    return out;
  }

  const SearchFrame& fr_;
  int d_;
  long long budget_;
  std::vector<Row> candidates_;
  std::vector<Row> vec_;
  long long nodes_ = 0;
  bool exhausted_ = false;
};

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

}  // namespace

std::string to_string(SearchOutcome outcome) {
  switch (outcome) {
    case SearchOutcome::found: return "found";
    case SearchOutcome::none: return "none";
    case SearchOutcome::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::int64_t bareiss_determinant(std::vector<std::vector<std::int64_t>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  int sign = 1;
  __int128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const __int128 num = static_cast<__int128>(a[i][j]) * a[k][k] - static_cast<__int128>(a[i][k]) * a[k][j];
        a[i][j] = static_cast<std::int64_t>(num / prev);
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// Row-major k x d matrix, reduced in place.
static bool extends_to_basis_in_place(std::int64_t* a, std::size_t k, std::size_t d) {
  if (k > d) return false;
  auto at = [&](std::size_t i, std::size_t j) -> std::int64_t& { return a[i * d + j]; };
  // Unimodular column operations bring the rows to lower-triangular form; the gcd of the
  // maximal minors is then the product of the diagonal.
  for (std::size_t r = 0; r < k; ++r) {
    if (at(r, r) == 0) {
      // Bring a unit entry of row r to the diagonal when there is one.
      for (std::size_t j = r + 1; j < d; ++j) {
        if (at(r, j) == 1 || at(r, j) == -1) {
          for (std::size_t i = r; i < k; ++i) std::swap(at(i, r), at(i, j));
          break;
        }
      }
    }
    for (std::size_t j = r + 1; j < d; ++j) {
      if (at(r, j) == 0) continue;
      if (at(r, r) == 1 || at(r, r) == -1) {
        const std::int64_t q = at(r, j) * at(r, r);
        for (std::size_t i = r; i < k; ++i) at(i, j) -= q * at(i, r);
        continue;
      }
      std::int64_t x = at(r, r);
      std::int64_t y = at(r, j);
      // Extended gcd: s x + t y = g.
      std::int64_t s0 = 1, s1 = 0, t0 = 0, t1 = 1;
      while (y != 0) {
        const std::int64_t q = x / y;
        std::tie(x, y) = std::make_pair(y, x - q * y);
        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
        std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
      }
      const std::int64_t g = x;
      const std::int64_t u = at(r, j) / g;
      const std::int64_t w = at(r, r) / g;
      for (std::size_t i = r; i < k; ++i) {
        const std::int64_t cr = at(i, r);
        const std::int64_t cj = at(i, j);
        at(i, r) = s0 * cr + t0 * cj;
        at(i, j) = -u * cr + w * cj;
      }
    }
    if (at(r, r) != 1 && at(r, r) != -1) return false;
  }
  return true;
}

bool extends_to_basis(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty()) return true;
  const std::size_t d = rows.front().size();
  std::vector<std::int64_t> a;
  a.reserve(rows.size() * d);
  for (const auto& r : rows) a.insert(a.end(), r.begin(), r.end());
  return extends_to_basis_in_place(a.data(), rows.size(), d);
}

bool independent_mod_p(const std::vector<std::vector<std::int64_t>>& rows, int p) {
  Echelon e(p);
  return std::all_of(rows.begin(), rows.end(), [&](const Row& r) { return e.insert(r); });
}

bool verify_char_map(const SimplicialComplex& K, const CharMap& map) {
  for (int idx : K.real_list()) {
    const auto v = K.universe()[static_cast<std::size_t>(idx)];
    const auto it = map.assignment.find(v);
    if (it == map.assignment.end()) fail(Errc::invalid_argument, "characteristic map misses vertex " + format_vertex(v));
    if (static_cast<int>(it->second.size()) != map.rank) {
      fail(Errc::invalid_argument, "characteristic map vector for " + format_vertex(v) + " has the wrong length");
    }
  }
  if (map.prime != 0 && !is_prime(map.prime)) fail(Errc::invalid_argument, "characteristic map over a non-prime modulus");
  if (map.prime != 0) {
    return std::all_of(K.facets().begin(), K.facets().end(),
                       [&](FaceMask f) { return independent_mod_p(facet_rows(K, f, map), map.prime); });
  }
  std::vector<const Row*> rows(static_cast<std::size_t>(K.universe_size()), nullptr);
  for (int idx : K.real_list()) rows[static_cast<std::size_t>(idx)] = &map.assignment.at(K.universe()[static_cast<std::size_t>(idx)]);
  const auto d = static_cast<std::size_t>(map.rank);
  std::vector<std::int64_t> scratch;
  return std::all_of(K.facets().begin(), K.facets().end(), [&](FaceMask f) {
    scratch.resize(static_cast<std::size_t>(std::popcount(f)) * d);
    auto out = scratch.begin();
    for (FaceMask rest = f; rest; rest &= rest - 1) {
      const auto& r = *rows[static_cast<std::size_t>(std::countr_zero(rest))];
      out = std::copy(r.begin(), r.end(), out);
    }
    return extends_to_basis_in_place(scratch.data(), static_cast<std::size_t>(std::popcount(f)), d);
  });
}

CharMap canonical_char_map(const CompositionVector& c, const SimplicialComplex& K) {
  CharMap map{0, c.total(), {}};
  std::vector<int> offset(static_cast<std::size_t>(c.m()), 0);
  for (int i = 1; i < c.m(); ++i) offset[static_cast<std::size_t>(i)] = offset[static_cast<std::size_t>(i - 1)] + c[i - 1];
  for (int idx : K.real_list()) {
    const auto v = K.universe()[static_cast<std::size_t>(idx)];
    if (v.axis < 1 || v.axis > c.m() || v.level < 0 || v.level > c[v.axis - 1]) {
      fail(Errc::invalid_argument, "vertex " + format_vertex(v) + " is not a sphere vertex for c");
    }
    const int base = offset[static_cast<std::size_t>(v.axis - 1)];
    Row vec(static_cast<std::size_t>(c.total()), 0);
    if (v.level > 0) {
      vec[static_cast<std::size_t>(base + v.level - 1)] = 1;
    } else {
      for (int k = 0; k < c[v.axis - 1]; ++k) vec[static_cast<std::size_t>(base + k)] = 1;
    }
    map.assignment.emplace(v, std::move(vec));
  }
  return map;
}

CharMap reduce_mod_p(const CharMap& map, int p) {
  CharMap out{p, map.rank, {}};
  for (const auto& [v, vec] : map.assignment) {
    Row r;
    for (auto x : vec) r.push_back(mod(x, p));
    out.assignment.emplace(v, std::move(r));
  }
  return out;
}

SearchResult search_char_map_mod_p(const SimplicialComplex& K, int p, int d, long long budget) {
  if (!is_prime(p)) fail(Errc::invalid_argument, "search modulus must be prime");
  if (d < 0) fail(Errc::invalid_argument, "target rank must be non-negative");
  SearchResult out;
  if (d < max_facet_size(K) || (d == 0 && K.f0() > 0)) {
    out.outcome = SearchOutcome::none;
    return out;
  }
  if (d > 63 || count_or_cap(p, d, p - 1, budget) < 0) return out;
  const auto fr = make_frame(K);
  ModPSearch search(fr, p, d, budget, normalized_vectors(p, d));
  out.outcome = search.run();
  out.nodes = search.nodes();
  if (out.outcome == SearchOutcome::found) {
    out.map = to_char_map(K, p, d, search.vectors());
    ensure(verify_char_map(K, *out.map), "mod-p search returned an invalid characteristic map");
  }
  return out;
}

SearchResult search_integer_char_map(const SimplicialComplex& K, int d, long long budget) {
  SearchResult out;
  if (d < max_facet_size(K) || d > 39 || count_or_cap(3, d, 2, budget) < 0) return out;
  const auto fr = make_frame(K);
  IntegerSearch search(fr, d, budget);
  out.outcome = search.run();
  out.nodes = search.nodes();
  if (out.outcome == SearchOutcome::found) {
    out.map = to_char_map(K, 0, d, search.vectors());
    ensure(verify_char_map(K, *out.map), "integer search returned an invalid characteristic map");
  }
  return out;
}

BuchstaberReport buchstaber_report(const SimplicialComplex& K, const CompositionVector& c,
                                   const BuchstaberOptions& options) {
  BuchstaberReport r;
  r.f0 = K.f0();
  r.n = K.dimension() + 1;
  r.chromatic = chromatic_number(one_skeleton(K));
  r.lower_bound_chromatic = r.f0 - r.chromatic;
  r.s_upper = r.f0 - r.n;
  const bool canonical = verify_char_map(K, canonical_char_map(c, K));
  if (canonical) r.canonical_lower_bound = r.f0 - c.total();

  const auto mod2 = search_char_map_mod_p(K, 2, r.n, options.search_budget);
  r.mod2_search = mod2.outcome;
  r.mod2_map = mod2.map;
  if (mod2.outcome == SearchOutcome::found) {
    r.s2_exact = r.s_upper;
  } else if (mod2.outcome == SearchOutcome::none && canonical && c.total() == r.n + 1) {
    r.s2_exact = r.s_upper - 1;
    r.s_exact = r.s_upper - 1;
  }
  if (r.s2_exact == r.s_upper && options.integer_search) {
    const auto integral = search_integer_char_map(K, r.n, options.search_budget);
    r.integer_search = integral.outcome;
    r.integer_map = integral.map;
    if (integral.outcome == SearchOutcome::found) r.s_exact = r.s_upper;
  }
  return r;
}

}  // namespace murai
