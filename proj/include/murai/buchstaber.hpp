#pragma once

// Characteristic maps and the Buchstaber number of a simplicial sphere.
//
// A characteristic map of rank d sends every real vertex to a vector of length d so that
// the vectors of each facet are part of a lattice basis (over the integers) or linearly
// independent (over F_p). s(K) = f_0 - (least such d); s_p(K) likewise over F_p.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "murai/multicomplex.hpp"
#include "murai/simplicial.hpp"

namespace murai {

struct CharMap {
  /// 0 for the integers, otherwise the prime p.
  int prime = 0;
  int rank = 0;
  std::map<Vertex, std::vector<std::int64_t>> assignment;
};

/// Every facet maps to a part of a basis. Throws invalid_argument if a real vertex is
/// unassigned or a vector has the wrong length.
bool verify_char_map(const SimplicialComplex& K, const CharMap& map);

/// The rows extend to a basis of Z^d: the gcd of the maximal minors is 1.
bool extends_to_basis(const std::vector<std::vector<std::int64_t>>& rows);
/// The rows are linearly independent over F_p.
bool independent_mod_p(const std::vector<std::vector<std::int64_t>>& rows, int p);
/// Exact determinant by fraction-free elimination.
std::int64_t bareiss_determinant(std::vector<std::vector<std::int64_t>> matrix);

/// Rank |c| map: level j >= 1 of axis i goes to e_(i,j), level 0 to the sum of e_(i,1..c_i).
CharMap canonical_char_map(const CompositionVector& c, const SimplicialComplex& K);

CharMap reduce_mod_p(const CharMap& map, int p);

enum class SearchOutcome { found, none, inconclusive };

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::inconclusive;
  std::optional<CharMap> map;
  long long nodes = 0;
};

inline constexpr long long kDefaultSearchBudget = 50'000'000;

/// Exhaustive backtracking for a rank-d characteristic map over F_p, with the first facet
/// pinned to the standard basis. Vectors are taken up to scalar multiples.
SearchResult search_char_map_mod_p(const SimplicialComplex& K, int p, int d,
                                   long long budget = kDefaultSearchBudget);
/// Bounded search for an integer map of rank d with entries in {-1, 0, 1}. Never answers
/// `none`: a failed search is inconclusive.
SearchResult search_integer_char_map(const SimplicialComplex& K, int d, long long budget = kDefaultSearchBudget);

struct BuchstaberReport {
  int f0 = 0;
  int n = 0;
  int chromatic = 0;
  /// f0 - chromatic number of the 1-skeleton.
  int lower_bound_chromatic = 0;
  /// f0 - |c| when the canonical map verifies.
  std::optional<int> canonical_lower_bound;
  /// f0 - n.
  int s_upper = 0;
  std::optional<int> s2_exact;
  std::optional<int> s_exact;
  SearchOutcome mod2_search = SearchOutcome::inconclusive;
  SearchOutcome integer_search = SearchOutcome::inconclusive;
  std::optional<CharMap> mod2_map;
  std::optional<CharMap> integer_map;

  std::optional<int> r2() const { return s2_exact ? std::optional<int>(f0 - *s2_exact) : std::nullopt; }
  std::optional<int> r() const { return s_exact ? std::optional<int>(f0 - *s_exact) : std::nullopt; }
};

struct BuchstaberOptions {
  long long search_budget = kDefaultSearchBudget;
  bool integer_search = true;
};

BuchstaberReport buchstaber_report(const SimplicialComplex& K, const CompositionVector& c,
                                   const BuchstaberOptions& options = {});

std::string to_string(SearchOutcome outcome);

}  // namespace murai
