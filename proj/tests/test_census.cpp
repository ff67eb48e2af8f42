#include <doctest.h>

#include <sstream>

#include "murai/census.hpp"
#include "murai/error.hpp"
#include "murai/sphere.hpp"

using namespace murai;

namespace {

std::vector<CensusRecord> collect(const CompositionVector& c, const CensusOptions& options, CensusSummary* summary = nullptr) {
  std::vector<CensusRecord> out;
  const auto s = run_census(c, options, [&](const CensusRecord& r) { out.push_back(r); });
  if (summary) *summary = s;
  return out;
}

}  // namespace

TEST_CASE("records survive a JSON round trip byte for byte") {
  for (const auto& cv : std::vector<std::vector<int>>{{2, 1}, {2, 1, 1}, {3, 2}, {1, 1, 1, 1}}) {
    for (const auto& r : collect(CompositionVector(cv), {})) {
      const auto line = to_json_line(r);
      const auto back = record_from_json_line(line);
      CHECK(back == r);
      CHECK(to_json_line(back) == line);
    }
  }
  CensusOptions bare;
  bare.select = parse_selection("iso");
  for (const auto& r : collect(CompositionVector({2, 2}), bare)) {
    CHECK_FALSE(r.chordal.has_value());
    CHECK_FALSE(r.buchstaber.has_value());
    CHECK(to_json_line(record_from_json_line(to_json_line(r))) == to_json_line(r));
  }
}

TEST_CASE("malformed records are rejected") {
  CHECK_THROWS_AS(record_from_json_line("{"), Error);
  CHECK_THROWS_AS(record_from_json_line("{\"v\":2}"), Error);
  CHECK_THROWS_AS(record_from_json_line("{\"v\":1,\"c\":[1]}"), Error);
  CHECK_THROWS_AS(parse_selection("chordality,colour"), Error);
}

TEST_CASE("isomorphism class ids agree with isomorphism tests") {
  const CompositionVector c({2, 1, 1});
  std::vector<SimplicialComplex> spheres;
  for_each_proper(c, [&](const Multicomplex& M) { spheres.push_back(facet_set(M)); });
  CensusSummary summary;
  const auto records = collect(c, {}, &summary);
  REQUIRE(records.size() == spheres.size());
  CHECK(summary.records == records.size());
  CHECK(summary.classes.size() == 9);
  std::size_t total = 0;
  for (const auto& cl : summary.classes) total += cl.count;
  CHECK(total == records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    for (std::size_t j = i + 1; j < records.size(); ++j) {
      CHECK((records[i].iso_class == records[j].iso_class) == is_isomorphic(spheres[i], spheres[j]));
    }
  }
}

TEST_CASE("parallel runs keep census order and content") {
  const CompositionVector c({2, 2, 1});
  CensusOptions one;
  CensusOptions many;
  many.jobs = 4;
  const auto a = collect(c, one);
  const auto b = collect(c, many);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) CHECK(to_json_line(a[k]) == to_json_line(b[k]));
}

TEST_CASE("census caps") {
  CensusOptions small;
  small.max_grid = 10;
  CHECK_THROWS_AS(run_census(CompositionVector({3, 3}), small, [](const CensusRecord&) {}), Error);
  CensusOptions few;
  few.max_vertices = 5;
  try {
    run_census(CompositionVector({2, 2}), few, [](const CensusRecord&) {});
    FAIL("expected a size cap");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::size_cap);
  }
}
