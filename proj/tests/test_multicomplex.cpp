#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "murai/error.hpp"
#include "murai/multicomplex.hpp"

using namespace murai;

namespace {

using Tuple = std::vector<int>;

std::vector<Tuple> all_tuples(const std::vector<int>& c) {
  std::vector<Tuple> out{{}};
  for (int ci : c) {
    std::vector<Tuple> next;
    for (const auto& t : out) {
      for (int e = 0; e <= ci; ++e) {
        auto u = t;
        u.push_back(e);
        next.push_back(u);
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool leq(const Tuple& a, const Tuple& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

// Membership strings of every proper nonempty down-set, in lex monomial order.
std::vector<std::string> brute_force_census(const std::vector<int>& c) {
  const auto cells = all_tuples(c);
  const std::size_t n = cells.size();
  std::vector<std::string> out;
  for (std::uint64_t s = 1; s + 1 < (std::uint64_t{1} << n); ++s) {
    bool closed = true;
    for (std::size_t i = 0; i < n && closed; ++i) {
      if (!(s >> i & 1U)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (leq(cells[j], cells[i]) && !(s >> j & 1U)) closed = false;
      }
    }
    if (!closed) continue;
    std::string str;
    for (std::size_t i = 0; i < n; ++i) str += (s >> i & 1U) ? '1' : '0';
    out.push_back(str);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string membership_string(const Multicomplex& M) {
  std::string str;
  for (const auto& t : all_tuples(M.c().entries())) str += M.contains(Monomial(t)) ? '1' : '0';
  return str;
}

Multicomplex gen(const std::vector<int>& c, const char* text) {
  const CompositionVector cv(c);
  return Multicomplex::from_generators(cv, parse_monomials(text, cv.m()));
}

const std::vector<std::vector<int>> kSmall = {{1},    {3},    {1, 1},    {2, 1},    {1, 2},       {1, 1, 1},
                                              {4},    {3, 1}, {2, 2},    {2, 1, 1}, {1, 1, 1, 1}, {2, 2, 1},
                                              {5, 2}, {1, 3}, {2, 1, 2}, {3, 3}};

}  // namespace

TEST_CASE("composition vectors") {
  const CompositionVector c({2, 1, 1});
  CHECK(c.m() == 3);
  CHECK(c.total() == 4);
  CHECK(c.bar_entries() == std::vector<int>{3, 2, 2});
  CHECK(c.grid_size() == 12);
  CHECK(c.universe_size() == 7);
  CHECK(format_composition(parse_composition(" 2, 1 ,1")) == "2,1,1");
  CHECK_THROWS_AS(CompositionVector({2, 0}), Error);
  CHECK_THROWS_AS(CompositionVector({}), Error);
  CHECK_THROWS_AS(parse_composition("2,x"), Error);
}

TEST_CASE("monomial text round trip") {
  const auto monos = parse_monomials("2 0; 1 1", 2);
  REQUIRE(monos.size() == 2);
  CHECK(monos[0] == Monomial({2, 0}));
  CHECK(format_monomials(monos) == "2 0; 1 1");
  CHECK_THROWS_AS(parse_monomials("2 0 1", 2), Error);
  CHECK(complement(Monomial({1, 0}), CompositionVector({2, 1})) == Monomial({1, 1}));
  CHECK(complement(Monomial({0, 0}), CompositionVector({5, 3})) == Monomial({5, 3}));
  CHECK(diamond(Monomial({1, 1}), 0, 3) == Monomial({3, 1}));
}

TEST_CASE("grid addressing") {
  const MonomialGrid grid(CompositionVector({2, 1, 3}));
  CHECK(grid.size() == 24);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto a = grid.decode(i);
    CHECK(grid.index(a) == i);
    CHECK(i == static_cast<std::size_t>(a[0] + 3 * a[1] + 6 * a[2]));
  }
  CHECK_THROWS_AS(grid.index(Monomial({3, 0, 0})), Error);
  std::vector<Tuple> lex;
  for (auto idx : grid.lex_order()) lex.push_back(grid.decode(idx).exponents());
  CHECK(lex == all_tuples({2, 1, 3}));
  CHECK_THROWS_AS(MonomialGrid(CompositionVector({3, 3}), 15), Error);
}

TEST_CASE("generators, closure and min non-elements") {
  const auto M = gen({2, 1}, "2 0; 0 1");
  CHECK(M.size() == 4);
  for (const char* t : {"0 0", "1 0", "2 0", "0 1"}) CHECK(M.contains(parse_monomials(t, 2)[0]));
  CHECK(format_monomials(M.min_non_elements()) == "1 1");
  CHECK(gen({3}, "0").size() == 1);
  const auto N = gen({2, 2}, "1 1; 0 0; 1 0");
  CHECK(N.size() == 4);
  CHECK(format_monomials(N.generators()) == "1 1");
  CHECK(format_monomials(ideal_generators(N).gens) == "2 0; 0 2");
  CHECK(format_monomials(ideal_generators(gen({3}, "0")).gens) == "1");
  CHECK_THROWS_AS(gen({2, 1}, "3 0"), Error);
}

TEST_CASE("alexander duals of listed examples") {
  CHECK(alexander_dual(gen({2, 2}, "1 0; 0 2")) == gen({2, 2}, "1 1; 0 2"));
  CHECK(alexander_dual(gen({2, 1}, "0 1")) == gen({2, 1}, "1 1"));
  CHECK(alexander_dual(gen({2, 1}, "0 0")) == gen({2, 1}, "2 0; 1 1"));
  CHECK(alexander_dual(gen({3, 1}, "0 0")) == gen({3, 1}, "2 1; 3 0"));
  CHECK(alexander_dual(gen({1, 1, 1}, "1 0 0; 0 1 0")) == gen({1, 1, 1}, "0 0 1; 1 1 0"));
  try {
    alexander_dual(gen({2, 1}, "2 1"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_proper);
  }
}

TEST_CASE("census matches brute-force down-set enumeration in order") {
  for (const auto& c : kSmall) {
    CAPTURE(format_composition(CompositionVector(c)));
    const auto expected = brute_force_census(c);
    std::vector<std::string> got;
    for_each_proper(CompositionVector(c), [&](const Multicomplex& M) {
      CHECK(M.is_proper());
      got.push_back(membership_string(M));
    });
    CHECK(got == expected);
  }
}

TEST_CASE("census sizes") {
  auto count = [](std::vector<int> c) {
    std::size_t n = 0;
    for_each_proper(CompositionVector(std::move(c)), [&](const Multicomplex&) { ++n; });
    return n;
  };
  CHECK(count({3}) == 3);
  CHECK(count({2, 1}) == 8);
  CHECK(count({1, 1}) == 4);
  CHECK(count({1, 1, 1}) == 18);
  CHECK(count({1, 1, 1, 1}) == 166);
  CHECK(count({1, 1, 1, 1, 1}) == 7579);
  std::vector<std::string> first;
  for_each_proper(CompositionVector({3}), [&](const Multicomplex& M) { first.push_back(format_monomials(M.generators())); });
  CHECK(first == std::vector<std::string>{"0", "1", "2"});
}

TEST_CASE("duality properties over censuses") {
  for (const auto& c : kSmall) {
    const CompositionVector cv(c);
    std::set<std::vector<std::uint64_t>> seen;
    for_each_proper(cv, [&](const Multicomplex& M) {
      CHECK(seen.insert(M.membership_words()).second);
      const auto D = alexander_dual(M);
      CHECK(D.is_proper());
      CHECK(alexander_dual(D) == M);
      CHECK(D.size() + M.size() == M.grid().size());
      // Direct definition of the dual.
      for (std::size_t i = 0; i < M.grid().size(); ++i) {
        const auto a = M.grid().decode(i);
        CHECK(D.contains(complement(a, cv)) == !M.contains(a));
      }
      std::vector<Monomial> dual_tops;
      for (const auto& g : D.generators()) dual_tops.push_back(complement(g, cv));
      auto mins = M.min_non_elements();
      std::sort(dual_tops.begin(), dual_tops.end());
      std::sort(mins.begin(), mins.end());
      CHECK(dual_tops == mins);
      CHECK(Multicomplex::from_generators(cv, M.generators()) == M);
    });
  }
}

TEST_CASE("membership tables are validated") {
  const CompositionVector c({2});
  CHECK_NOTHROW(Multicomplex::from_membership(c, {true, true, false}));
  CHECK_THROWS_AS(Multicomplex::from_membership(c, {true, false, true}), Error);
  CHECK_THROWS_AS(Multicomplex::from_membership(c, {false, false, false}), Error);
  CHECK_THROWS_AS(Multicomplex::from_membership(c, {true, true}), Error);
}
