#include <doctest.h>

#include <bit>
#include <cmath>
#include <numeric>
#include <random>

#include "murai/analysis.hpp"
#include "murai/buchstaber.hpp"
#include "murai/error.hpp"
#include "murai/sphere.hpp"

using namespace murai;

namespace {

using Matrix = std::vector<std::vector<std::int64_t>>;

Multicomplex gen(const std::vector<int>& c, const char* text) {
  const CompositionVector cv(c);
  return Multicomplex::from_generators(cv, parse_monomials(text, cv.m()));
}

std::vector<Vertex> line(int n, int axis = 1) {
  std::vector<Vertex> out;
  for (int j = 0; j < n; ++j) out.push_back({axis, j});
  return out;
}

std::int64_t cofactor_det(const Matrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  std::int64_t out = 0;
  for (std::size_t j = 0; j < n; ++j) {
    Matrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(a[i][k]);
      }
      minor.push_back(row);
    }
    out += (j % 2 ? -1 : 1) * a[0][j] * cofactor_det(minor);
  }
  return out;
}

// gcd of all maximal minors, choosing column subsets explicitly.
std::int64_t minor_gcd(const Matrix& rows) {
  const std::size_t k = rows.size();
  const std::size_t d = rows.front().size();
  std::int64_t g = 0;
  for (std::uint32_t cols = 0; cols < (1U << d); ++cols) {
    if (static_cast<std::size_t>(std::popcount(cols)) != k) continue;
    Matrix sq;
    for (const auto& r : rows) {
      std::vector<std::int64_t> row;
      for (std::size_t j = 0; j < d; ++j) {
        if (cols >> j & 1U) row.push_back(r[j]);
      }
      sq.push_back(row);
    }
    g = std::gcd(g, cofactor_det(sq));
  }
  return g;
}

// No nontrivial combination with coefficients in F_p vanishes.
bool independent_by_combinations(const Matrix& rows, int p) {
  const std::size_t k = rows.size();
  const std::size_t d = k ? rows.front().size() : 0;
  std::vector<int> coef(k, 0);
  while (true) {
    std::size_t pos = 0;
    while (pos < k && ++coef[pos] == p) coef[pos++] = 0;
    if (pos == k) return true;
    bool zero = true;
    for (std::size_t j = 0; j < d && zero; ++j) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < k; ++i) s += coef[i] * rows[i][j];
      zero = ((s % p) + p) % p == 0;
    }
    if (zero) return false;
  }
}

// Every assignment of nonzero vectors of F_p^d, no pinning and no normalization.
bool exists_by_enumeration(const SimplicialComplex& K, int p, int d) {
  std::vector<std::vector<std::int64_t>> vectors;
  for (int code = 1; code < static_cast<int>(std::pow(p, d)); ++code) {
    std::vector<std::int64_t> v;
    for (int x = code, j = 0; j < d; ++j, x /= p) v.push_back(x % p);
    vectors.push_back(v);
  }
  const int v = K.f0();
  std::vector<std::size_t> choice(static_cast<std::size_t>(v), 0);
  while (true) {
    bool ok = true;
    for (auto f : K.facets()) {
      Matrix rows;
      for (auto c = K.compress(f); c; c &= c - 1) rows.push_back(vectors[choice[static_cast<std::size_t>(std::countr_zero(c))]]);
      if (!independent_by_combinations(rows, p)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
    std::size_t pos = 0;
    while (pos < choice.size() && ++choice[pos] == vectors.size()) choice[pos++] = 0;
    if (pos == choice.size()) return false;
  }
}

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  Matrix m(rows, std::vector<std::int64_t>(cols));
  for (auto& r : m) {
    for (auto& x : r) x = entry(rng);
  }
  return m;
}

}  // namespace

TEST_CASE("fraction-free determinants agree with cofactor expansion") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const auto n = static_cast<std::size_t>(1 + trial % 6);
    const auto m = random_matrix(rng, n, n, trial % 3 == 0 ? 1 : 4);
    CHECK(bareiss_determinant(m) == cofactor_det(m));
  }
}

TEST_CASE("basis extension and independence agree with minors and combinations") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 600; ++trial) {
    const auto d = static_cast<std::size_t>(1 + trial % 5);
    const auto k = static_cast<std::size_t>(1 + (trial / 5) % d);
    const auto m = random_matrix(rng, k, d, trial % 2 ? 1 : 2);
    const auto g = minor_gcd(m);
    CHECK(extends_to_basis(m) == (g == 1 || g == -1));
    for (int p : {2, 3, 5}) CHECK(independent_mod_p(m, p) == independent_by_combinations(m, p));
  }
  CHECK_FALSE(extends_to_basis({{1, 0}, {0, 1}, {1, 1}}));
  CHECK_FALSE(extends_to_basis({{2, 0, 0}}));
  CHECK(extends_to_basis({{2, 3, 0}}));
}

TEST_CASE("verifying characteristic maps") {
  const auto z4 = facet_set(gen({3}, "1"));
  const auto canonical = canonical_char_map(CompositionVector({3}), z4);
  CHECK(canonical.rank == 3);
  CHECK(verify_char_map(z4, canonical));

  CharMap same{2, 2, {}};
  for (int idx : z4.real_list()) same.assignment[z4.universe()[static_cast<std::size_t>(idx)]] = {1, 0};
  CHECK_FALSE(verify_char_map(z4, same));

  const auto boundary = boundary_simplex(line(5));
  CharMap identity{0, 5, {}};
  for (int i = 0; i < 5; ++i) {
    std::vector<std::int64_t> e(5, 0);
    e[static_cast<std::size_t>(i)] = 1;
    identity.assignment[{1, i}] = e;
  }
  CHECK(verify_char_map(boundary, identity));

  identity.assignment.erase({1, 0});
  CHECK_THROWS_AS(verify_char_map(boundary, identity), Error);
}

TEST_CASE("canonical map values") {
  const CompositionVector c({2, 1});
  const auto K = facet_set(gen({2, 1}, "1 0; 0 1"));
  const auto map = canonical_char_map(c, K);
  auto at = [&](int axis, int level) { return map.assignment.at({axis, level}); };
  CHECK(at(1, 0) == std::vector<std::int64_t>{1, 1, 0});
  CHECK(at(1, 1) == std::vector<std::int64_t>{1, 0, 0});
  CHECK(at(1, 2) == std::vector<std::int64_t>{0, 1, 0});
  CHECK(at(2, 0) == std::vector<std::int64_t>{0, 0, 1});
  CHECK(at(2, 1) == std::vector<std::int64_t>{0, 0, 1});
  CHECK(verify_char_map(K, map));
}

TEST_CASE("canonical maps verify across censuses") {
  for (const auto& cv : std::vector<std::vector<int>>{{1, 1, 1}, {2, 1}, {4}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}, {3, 2}, {2, 2, 1}}) {
    const CompositionVector c(cv);
    for_each_proper(c, [&](const Multicomplex& M) {
      const auto K = facet_set(M);
      const auto map = canonical_char_map(c, K);
      CHECK(verify_char_map(K, map));
      CHECK(verify_char_map(K, reduce_mod_p(map, 2)));
    });
  }
}

TEST_CASE("mod-p search on known cases") {
  const auto z5 = search_char_map_mod_p(cycle_complex(5), 2, 2);
  CHECK(z5.outcome == SearchOutcome::found);
  REQUIRE(z5.map.has_value());
  CHECK(verify_char_map(cycle_complex(5), *z5.map));

  CHECK(search_char_map_mod_p(cycle_complex(5), 2, 1).outcome == SearchOutcome::none);
  for (int n = 2; n <= 6; ++n) {
    CHECK(search_char_map_mod_p(boundary_simplex(line(n + 1)), 2, n).outcome == SearchOutcome::found);
  }
  CHECK(search_char_map_mod_p(cycle_complex(5), 3, 2).outcome == SearchOutcome::found);

  const auto cyclic = facet_set(cyclic_multicomplex(3));
  const auto none = search_char_map_mod_p(cyclic, 2, 7);
  CHECK(none.outcome == SearchOutcome::none);
  CHECK(search_char_map_mod_p(cyclic, 2, 8).outcome == SearchOutcome::found);
  CHECK(search_char_map_mod_p(cyclic, 2, 7, 10).outcome == SearchOutcome::inconclusive);
  CHECK_THROWS_AS(search_char_map_mod_p(cyclic, 4, 7), Error);
}

TEST_CASE("pinned search agrees with unrestricted enumeration on small spheres") {
  std::vector<SimplicialComplex> spheres;
  for (int p = 3; p <= 7; ++p) spheres.push_back(cycle_complex(p));
  spheres.push_back(boundary_simplex(line(4)));
  for (const char* g : {"1 0 0", "1 1 0", "1 0 0; 0 1 0", "2 0 0; 0 1 0; 0 0 1", "2 0 0; 1 1 0; 0 0 1", "1 1 0; 1 0 1"}) {
    spheres.push_back(facet_set(gen({2, 1, 1}, g)));
  }
  for (const auto& K : spheres) {
    REQUIRE(K.f0() <= 7);
    const int n = K.dimension() + 1;
    CHECK((search_char_map_mod_p(K, 2, n).outcome == SearchOutcome::found) == exists_by_enumeration(K, 2, n));
    if (K.dimension() == 1 && K.f0() <= 6) {
      CHECK((search_char_map_mod_p(K, 3, n).outcome == SearchOutcome::found) == exists_by_enumeration(K, 3, n));
    }
  }
}

TEST_CASE("integer maps") {
  const auto z5 = search_integer_char_map(cycle_complex(5), 2);
  REQUIRE(z5.outcome == SearchOutcome::found);
  CHECK(verify_char_map(cycle_complex(5), reduce_mod_p(*z5.map, 2)));
  CHECK(search_integer_char_map(cycle_complex(5), 1).outcome == SearchOutcome::inconclusive);

  const auto d2 = classify_dim2(CompositionVector({1, 1, 1, 1}));
  for (const auto& cl : d2.classes) {
    const auto& K = d2.spheres[cl.representative].sphere;
    const auto found = search_integer_char_map(K, 3);
    REQUIRE(found.outcome == SearchOutcome::found);
    CHECK(verify_char_map(K, reduce_mod_p(*found.map, 2)));
    CHECK(verify_char_map(K, reduce_mod_p(*found.map, 3)));
  }
}

TEST_CASE("Buchstaber reports") {
  const auto cyclic = buchstaber_report(facet_set(cyclic_multicomplex(3)), CompositionVector({5, 3}));
  CHECK(cyclic.f0 == 10);
  CHECK(cyclic.canonical_lower_bound == 2);
  CHECK(cyclic.s_upper == 3);
  CHECK(cyclic.s2_exact == 2);
  CHECK(cyclic.s_exact == 2);
  CHECK(cyclic.r2() == 8);

  const auto z5 = buchstaber_report(facet_set(gen({2, 1}, "1 0; 0 1")), CompositionVector({2, 1}));
  CHECK(z5.s2_exact == 3);
  CHECK(z5.s_exact == 3);
  CHECK(z5.s_upper == 3);
  CHECK(z5.chromatic == 3);
  CHECK(z5.lower_bound_chromatic == 2);

  for (const auto& cv : std::vector<std::vector<int>>{{2, 1, 1}, {1, 1, 1, 1}, {3, 2}, {2, 2, 1}}) {
    const CompositionVector c(cv);
    for_each_proper(c, [&](const Multicomplex& M) {
      const auto K = facet_set(M);
      const auto r = buchstaber_report(K, c);
      REQUIRE(r.canonical_lower_bound.has_value());
      CHECK(r.s_upper - *r.canonical_lower_bound == 1);
      REQUIRE(r.s2_exact.has_value());
      CHECK(*r.canonical_lower_bound <= *r.s2_exact);
      CHECK(*r.s2_exact <= r.s_upper);
      CHECK(r.lower_bound_chromatic <= *r.s2_exact);
      if (r.integer_map) CHECK(verify_char_map(K, reduce_mod_p(*r.integer_map, 2)));
      if (r.s_exact) CHECK(*r.s_exact <= *r.s2_exact);
    });
  }
}
