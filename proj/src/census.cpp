#include "murai/census.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <unordered_map>

#include "json.hpp"
#include "murai/error.hpp"
#include "murai/sphere.hpp"

namespace murai {
namespace {

using json = nlohmann::ordered_json;

struct Analysed {
  CensusRecord record;
  std::optional<SimplicialComplex> sphere;
};

Analysed analyse_full(const Multicomplex& M, const CensusOptions& options) {
  Analysed out;
  auto& r = out.record;
  const auto& c = M.c();
  r.c = c.entries();
  r.generators = format_monomials(M.generators());
  r.dual_generators = format_monomials(alexander_dual(M).generators());
  const auto K = facet_set(M);
  ensure(K == sphere_from_sr_ideal(M), "facet formula and Stanley-Reisner ideal disagree");
  r.f_vector = K.f_vector();
  r.euler = euler_characteristic(K);
  r.pseudomanifold = is_pseudomanifold(K);
  ensure(r.pseudomanifold, "Murai sphere is not a pseudomanifold");
  ensure(r.euler == 1 + (c.total() % 2 == 0 ? 1 : -1), "Murai sphere has the wrong Euler characteristic");
  r.flag = is_flag(K);
  const auto& sel = options.select;
  if (sel.chordality) {
    const auto ch = chordality(K);
    r.chordal = ch.chordal;
    r.chordless_cycle = ch.witness;
  }
  if (sel.stackedness) {
    const auto st = stackedness(K, c);
    r.stacked = st.stacked;
    r.truncation_cuts = st.truncation_cuts;
  }
  if (sel.neighborly) r.neighborly = is_neighborly(K);
  if (sel.chromatic) r.chromatic = chromatic_number(one_skeleton(K));
  if (sel.buchstaber) {
    BuchstaberOptions bo;
    bo.search_budget = options.search_budget;
    const auto report = buchstaber_report(K, c, bo);
    ensure(report.canonical_lower_bound.has_value(), "canonical characteristic map fails to verify");
    r.buchstaber = summarize(report);
  }
  if (sel.iso_classes) out.sphere = K;
  return out;
}

template <class T>
json optional_json(const std::optional<T>& x) {
  return x ? json(*x) : json(nullptr);
}

template <class T>
std::optional<T> optional_from(const json& j, const char* key) {
  const auto& x = j.at(key);
  if (x.is_null()) return std::nullopt;
  return x.get<T>();
}

}  // namespace

InvariantSelection parse_selection(std::string_view text) {
  InvariantSelection s{false, false, false, false, false, false};
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto tok = rest.substr(0, comma);
    if (tok == "all") {
      s = InvariantSelection{};
    } else if (tok == "chordality") {
      s.chordality = true;
    } else if (tok == "stackedness") {
      s.stackedness = true;
    } else if (tok == "neighborly") {
      s.neighborly = true;
    } else if (tok == "chromatic") {
      s.chromatic = true;
    } else if (tok == "buchstaber") {
      s.buchstaber = true;
    } else if (tok == "iso") {
      s.iso_classes = true;
    } else {
      fail(Errc::invalid_argument, "unknown invariant '" + std::string(tok) + "'");
    }
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return s;
}

BuchstaberSummary summarize(const BuchstaberReport& r) {
  return BuchstaberSummary{r.f0,      r.n,      r.lower_bound_chromatic, r.canonical_lower_bound, r.s_upper,
                           r.s2_exact, r.s_exact, to_string(r.mod2_search),  to_string(r.integer_search)};
}

CensusRecord analyse(const Multicomplex& M, const CensusOptions& options) {
  return analyse_full(M, options).record;
}

std::string to_json_line(const CensusRecord& r) {
  json j;
  j["v"] = kRecordVersion;
  j["c"] = r.c;
  j["generators"] = r.generators;
  j["dual"] = r.dual_generators;
  j["f_vector"] = r.f_vector;
  j["euler"] = r.euler;
  j["pseudomanifold"] = r.pseudomanifold;
  j["flag"] = r.flag;
  if (r.chordal) {
    json w = json::array();
    for (auto v : r.chordless_cycle) w.push_back(format_vertex(v));
    j["chordality"] = {{"chordal", *r.chordal}, {"witness", w}};
  } else {
    j["chordality"] = nullptr;
  }
  j["stackedness"] = r.stacked ? json{{"stacked", *r.stacked}, {"k", optional_json(r.truncation_cuts)}} : json(nullptr);
  j["neighborly"] = optional_json(r.neighborly);
  j["chromatic"] = optional_json(r.chromatic);
  if (r.buchstaber) {
    const auto& b = *r.buchstaber;
    j["buchstaber"] = {{"f0", b.f0},
                       {"n", b.n},
                       {"chromatic_bound", b.chromatic_bound},
                       {"canonical_bound", optional_json(b.canonical_bound)},
                       {"s_upper", b.s_upper},
                       {"s2", optional_json(b.s2)},
                       {"s", optional_json(b.s)},
                       {"mod2_search", b.mod2_search},
                       {"integer_search", b.integer_search}};
  } else {
    j["buchstaber"] = nullptr;
  }
  j["iso_class"] = optional_json(r.iso_class);
  return j.dump();
}

CensusRecord record_from_json_line(std::string_view line) {
  try {
    const auto j = json::parse(line);
    if (j.at("v").get<int>() != kRecordVersion) fail(Errc::invalid_argument, "unsupported record version");
    CensusRecord r;
    r.c = j.at("c").get<std::vector<int>>();
    r.generators = j.at("generators").get<std::string>();
    r.dual_generators = j.at("dual").get<std::string>();
    r.f_vector = j.at("f_vector").get<std::vector<long long>>();
    r.euler = j.at("euler").get<long long>();
    r.pseudomanifold = j.at("pseudomanifold").get<bool>();
    r.flag = j.at("flag").get<bool>();
    if (const auto& ch = j.at("chordality"); !ch.is_null()) {
      r.chordal = ch.at("chordal").get<bool>();
      for (const auto& v : ch.at("witness")) r.chordless_cycle.push_back(parse_vertex(v.get<std::string>()));
    }
    if (const auto& st = j.at("stackedness"); !st.is_null()) {
      r.stacked = st.at("stacked").get<bool>();
      r.truncation_cuts = optional_from<int>(st, "k");
    }
    r.neighborly = optional_from<bool>(j, "neighborly");
    r.chromatic = optional_from<int>(j, "chromatic");
    if (const auto& b = j.at("buchstaber"); !b.is_null()) {
      BuchstaberSummary s;
      s.f0 = b.at("f0").get<int>();
      s.n = b.at("n").get<int>();
      s.chromatic_bound = b.at("chromatic_bound").get<int>();
      s.canonical_bound = optional_from<int>(b, "canonical_bound");
      s.s_upper = b.at("s_upper").get<int>();
      s.s2 = optional_from<int>(b, "s2");
      s.s = optional_from<int>(b, "s");
      s.mod2_search = b.at("mod2_search").get<std::string>();
      s.integer_search = b.at("integer_search").get<std::string>();
      r.buchstaber = s;
    }
    r.iso_class = optional_from<int>(j, "iso_class");
    return r;
  } catch (const json::exception& e) {
    fail(Errc::invalid_argument, std::string("malformed census record: ") + e.what());
  }
}

void check_caps(const CompositionVector& c, const CensusOptions& options) {
  MonomialGrid grid(c, options.max_grid);
  if (c.universe_size() > SimplicialComplex::kMaxUniverse) {
    fail(Errc::size_cap, "sphere universe of " + std::to_string(c.universe_size()) + " vertices exceeds 64");
  }
  if (c.universe_size() > options.max_vertices) {
    fail(Errc::size_cap, "sphere universe of " + std::to_string(c.universe_size()) + " vertices exceeds the cap of " +
                             std::to_string(options.max_vertices));
  }
}

int default_jobs() {
  if (const char* env = std::getenv("MURAI_JOBS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 1;
}

CensusSummary run_census(const CompositionVector& c, const CensusOptions& options,
                         const std::function<void(const CensusRecord&)>& sink) {
  check_caps(c, options);
  const int jobs = std::max(1, options.jobs);
  constexpr std::size_t kBatch = 2048;
  CensusSummary summary;
  std::vector<SimplicialComplex> reps;
  std::unordered_multimap<std::uint64_t, std::size_t> by_hash;

  ProperEnumerator en(c, options.max_grid);
  std::vector<Multicomplex> batch;
  std::vector<std::optional<Analysed>> results;
  auto flush = [&] {
    results.assign(batch.size(), std::nullopt);
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    auto work = [&] {
      for (std::size_t k; !failed && (k = next++) < batch.size();) {
        try {
          results[k] = analyse_full(batch[k], options);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
        }
      }
    };
    if (jobs == 1 || batch.size() < 2) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
      for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);
    for (auto& res : results) {
      auto& rec = res->record;
      if (res->sphere) {
        const auto& S = *res->sphere;
        const auto h = iso_invariant_hash(S);
        int id = -1;
        auto [lo, hi] = by_hash.equal_range(h);
        for (auto i = lo; i != hi && id < 0; ++i) {
          if (is_isomorphic(reps[i->second], S)) id = static_cast<int>(i->second);
        }
        if (id < 0) {
          id = static_cast<int>(reps.size());
          by_hash.emplace(h, reps.size());
          reps.push_back(S);
          summary.classes.push_back(CensusClass{id, rec.generators, 0, {}, rec.f_vector});
        }
        ++summary.classes[static_cast<std::size_t>(id)].count;
        rec.iso_class = id;
      }
      sink(rec);
      ++summary.records;
    }
    batch.clear();
  };
  while (auto M = en.next()) {
    batch.push_back(std::move(*M));
    if (batch.size() == kBatch) flush();
  }
  if (!batch.empty()) flush();
  for (auto& cls : summary.classes) cls.names = named_types(reps[static_cast<std::size_t>(cls.id)]);
  return summary;
}

}  // namespace murai
