#pragma once

// Census runs: one record of invariants per proper c-multicomplex, with isomorphism classes,
// serialized as JSON Lines.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "murai/analysis.hpp"
#include "murai/buchstaber.hpp"
#include "murai/multicomplex.hpp"

namespace murai {

inline constexpr int kRecordVersion = 1;

struct InvariantSelection {
  bool chordality = true;
  bool stackedness = true;
  bool neighborly = true;
  bool chromatic = true;
  bool buchstaber = true;
  bool iso_classes = true;
};

/// Parses a comma-separated list drawn from chordality, stackedness, neighborly, chromatic,
/// buchstaber, iso; "all" selects everything.
InvariantSelection parse_selection(std::string_view text);

struct CensusOptions {
  InvariantSelection select;
  std::size_t max_grid = kDefaultMaxGrid;
  int max_vertices = SimplicialComplex::kMaxRealVertices;
  long long search_budget = kDefaultSearchBudget;
  int jobs = 1;
};

struct BuchstaberSummary {
  int f0 = 0;
  int n = 0;
  int chromatic_bound = 0;
  std::optional<int> canonical_bound;
  int s_upper = 0;
  std::optional<int> s2;
  std::optional<int> s;
  std::string mod2_search;
  std::string integer_search;

  friend bool operator==(const BuchstaberSummary&, const BuchstaberSummary&) = default;
};

BuchstaberSummary summarize(const BuchstaberReport& r);

struct CensusRecord {
  std::vector<int> c;
  std::string generators;
  std::string dual_generators;
  std::vector<long long> f_vector;
  long long euler = 0;
  bool pseudomanifold = false;
  bool flag = false;
  std::optional<bool> chordal;
  std::vector<Vertex> chordless_cycle;
  std::optional<bool> stacked;
  std::optional<int> truncation_cuts;
  std::optional<bool> neighborly;
  std::optional<int> chromatic;
  std::optional<BuchstaberSummary> buchstaber;
  std::optional<int> iso_class;

  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

/// All selected invariants of Bier_c(M) except the isomorphism class.
CensusRecord analyse(const Multicomplex& M, const CensusOptions& options);

std::string to_json_line(const CensusRecord& record);
/// Inverse of to_json_line. Throws invalid_argument on malformed input.
CensusRecord record_from_json_line(std::string_view line);

struct CensusClass {
  int id = 0;
  std::string representative;
  std::size_t count = 0;
  std::vector<std::string> names;
  std::vector<long long> f_vector;
};

struct CensusSummary {
  std::size_t records = 0;
  std::vector<CensusClass> classes;
};

/// Analyses every proper c-multicomplex on `options.jobs` workers and hands the records to
/// `sink` in census order.
CensusSummary run_census(const CompositionVector& c, const CensusOptions& options,
                         const std::function<void(const CensusRecord&)>& sink);

/// Rejects c whose grid or sphere exceeds the caps in `options`.
void check_caps(const CompositionVector& c, const CensusOptions& options);

/// Default worker count: MURAI_JOBS if set, else 1.
int default_jobs();

}  // namespace murai
