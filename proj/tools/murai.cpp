// murai: command-line front end for Murai spheres.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "murai/analysis.hpp"
#include "murai/buchstaber.hpp"
#include "murai/census.hpp"
#include "murai/error.hpp"
#include "murai/sphere.hpp"

using namespace murai;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kUsage = 2, kSizeCap = 3, kInvariant = 4 };

struct Common {
  std::string c;
  std::string gens;
  bool as_json = false;
  std::size_t max_grid = kDefaultMaxGrid;
  int max_vertices = SimplicialComplex::kMaxRealVertices;
  long long search_budget = kDefaultSearchBudget;
};

void add_input(CLI::App* cmd, Common& o) {
  cmd->add_option("--c", o.c, "composition vector, e.g. \"2,1,1\"")->required();
  cmd->add_option("--gens", o.gens, "generators of M, e.g. \"2 0 0; 0 1 0\"")->required();
}

void add_caps(CLI::App* cmd, Common& o) {
  cmd->add_flag("--json", o.as_json, "print JSON");
  cmd->add_option("--max-grid", o.max_grid, "cap on grid cells")->capture_default_str();
  cmd->add_option("--max-vertices", o.max_vertices, "cap on sphere vertices")->capture_default_str();
  cmd->add_option("--search-budget", o.search_budget, "node budget for characteristic-map searches")
      ->capture_default_str();
}

CensusOptions caps(const Common& o) {
  CensusOptions opts;
  opts.max_grid = o.max_grid;
  opts.max_vertices = o.max_vertices;
  opts.search_budget = o.search_budget;
  return opts;
}

Multicomplex input(const Common& o) {
  const auto c = parse_composition(o.c);
  check_caps(c, caps(o));
  return Multicomplex::from_generators(c, parse_monomials(o.gens, c.m()), o.max_grid);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

json vertex_list(const SimplicialComplex& K, FaceMask face) {
  json out = json::array();
  for (auto v : K.vertices_of(face)) out.push_back(format_vertex(v));
  return out;
}

std::string joined(const std::vector<Vertex>& vs, const char* sep) {
  std::string out;
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (k) out += sep;
    out += format_vertex(vs[k]);
  }
  return out;
}

json char_map_json(const CharMap& map) {
  json vectors = json::object();
  for (const auto& [v, vec] : map.assignment) vectors[format_vertex(v)] = vec;
  return {{"ring", map.prime == 0 ? "Z" : "F_" + std::to_string(map.prime)}, {"rank", map.rank}, {"vectors", vectors}};
}

void print_char_map(const CharMap& map) {
  for (const auto& [v, vec] : map.assignment) {
    std::cout << "  " << format_vertex(v) << " ->";
    for (auto x : vec) std::cout << ' ' << x;
    std::cout << '\n';
  }
}

std::string opt_int(const std::optional<int>& x) { return x ? std::to_string(*x) : "?"; }

int cmd_dual(const Common& o) {
  const auto M = input(o);
  if (!M.is_proper()) fail(Errc::not_proper, "the dual needs a proper multicomplex");
  const auto D = alexander_dual(M);
  if (o.as_json) {
    std::cout << json{{"c", M.c().entries()},
                      {"generators", format_monomials(M.generators())},
                      {"dual", format_monomials(D.generators())}}
                     .dump()
              << '\n';
  } else {
    std::cout << format_monomials(D.generators()) << '\n';
  }
  return kOk;
}

int cmd_facets(const Common& o) {
  const auto K = facet_set(input(o));
  if (o.as_json) {
    json facets = json::array();
    for (auto f : K.facets()) facets.push_back(vertex_list(K, f));
    std::cout << json{{"f_vector", K.f_vector()}, {"facets", facets}}.dump() << '\n';
  } else {
    for (auto f : K.facets()) std::cout << joined(K.vertices_of(f), " ") << '\n';
  }
  return kOk;
}

int cmd_sr_ideal(const Common& o) {
  const auto M = input(o);
  const auto ideal = sr_ideal(M);
  const auto K = SimplicialComplex::from_minimal_non_faces(ideal.universe, ideal.gens);
  const bool agrees = K == facet_set(M);
  if (o.as_json) {
    json gens = json::array();
    for (auto g : ideal.gens) gens.push_back(vertex_list(K, g));
    std::cout << json{{"generators", gens}, {"agrees_with_facets", agrees}}.dump() << '\n';
  } else {
    for (auto g : ideal.gens) std::cout << joined(K.vertices_of(g), "*") << '\n';
    std::cout << "agrees with facet formula: " << yes_no(agrees) << '\n';
  }
  ensure(agrees, "facet formula and Stanley-Reisner ideal disagree");
  return kOk;
}

struct CheckFlags {
  bool all = false, sphere = false, chordal = false, stacked = false, neighborly = false, chromatic = false,
       names = false;
};

int cmd_check(const Common& o, CheckFlags f) {
  const auto M = input(o);
  const auto& c = M.c();
  const auto K = facet_set(M);
  if (f.all || !(f.sphere || f.chordal || f.stacked || f.neighborly || f.chromatic || f.names)) {
    f.sphere = f.chordal = f.stacked = f.neighborly = f.chromatic = f.names = true;
  }
  json j;
  j["c"] = c.entries();
  j["generators"] = format_monomials(M.generators());
  j["f_vector"] = K.f_vector();
  j["euler"] = euler_characteristic(K);
  if (!o.as_json) {
    std::cout << "generators: " << format_monomials(M.generators()) << '\n';
    std::cout << "f-vector:";
    for (auto x : K.f_vector()) std::cout << ' ' << x;
    std::cout << "\neuler: " << euler_characteristic(K) << '\n';
  }
  if (f.sphere) {
    const auto s = sphere_check(K);
    j["sphere"] = {{"passed", s.passed}, {"complete", s.complete}, {"detail", s.detail}};
    if (!o.as_json) {
      std::cout << "sphere: " << yes_no(s.passed) << (s.complete ? "" : " (partial check)") << " - " << s.detail << '\n';
    }
  }
  if (f.chordal) {
    const auto r = chordality(K);
    json w = json::array();
    for (auto v : r.witness) w.push_back(format_vertex(v));
    j["chordality"] = {{"chordal", r.chordal}, {"witness", w}};
    if (!o.as_json) {
      std::cout << "chordal: " << yes_no(r.chordal);
      if (!r.chordal) std::cout << " (chordless cycle " << joined(r.witness, " ") << ")";
      std::cout << '\n';
    }
  }
  if (f.stacked) {
    const auto r = stackedness(K, c);
    j["stackedness"] = {{"stacked", r.stacked},
                        {"k", r.truncation_cuts ? json(*r.truncation_cuts) : json(nullptr)},
                        {"n", r.base_dim ? json(*r.base_dim) : json(nullptr)}};
    if (!o.as_json) {
      std::cout << "stacked: " << yes_no(r.stacked);
      if (r.stacked) std::cout << " k=" << *r.truncation_cuts << " n=" << *r.base_dim;
      std::cout << '\n';
    }
  }
  if (f.neighborly) {
    j["neighborly"] = is_neighborly(K);
    j["flag"] = is_flag(K);
    if (!o.as_json) std::cout << "neighborly: " << yes_no(is_neighborly(K)) << "\nflag: " << yes_no(is_flag(K)) << '\n';
  }
  if (f.chromatic) {
    const int chi = chromatic_number(one_skeleton(K));
    j["chromatic"] = chi;
    if (!o.as_json) std::cout << "chromatic number: " << chi << '\n';
  }
  if (f.names) {
    const auto names = named_types(K);
    j["names"] = names;
    if (!o.as_json) {
      std::cout << "type:";
      for (const auto& n : names) std::cout << ' ' << n;
      if (names.empty()) std::cout << " (unnamed)";
      std::cout << '\n';
    }
  }
  if (o.as_json) std::cout << j.dump() << '\n';
  return kOk;
}

int cmd_buchstaber(const Common& o, std::optional<int> prime, std::optional<int> rank) {
  const auto M = input(o);
  const auto K = facet_set(M);
  if (prime || rank) {
    const int p = prime.value_or(2);
    const int d = rank.value_or(K.dimension() + 1);
    const auto r = search_char_map_mod_p(K, p, d, o.search_budget);
    if (o.as_json) {
      std::cout << json{{"prime", p},
                        {"rank", d},
                        {"outcome", to_string(r.outcome)},
                        {"nodes", r.nodes},
                        {"map", r.map ? char_map_json(*r.map) : json(nullptr)}}
                       .dump()
                << '\n';
    } else {
      std::cout << "mod-" << p << " map of rank " << d << ": " << to_string(r.outcome) << " (" << r.nodes
                << " nodes)\n";
      if (r.map) print_char_map(*r.map);
    }
    return kOk;
  }
  BuchstaberOptions bo;
  bo.search_budget = o.search_budget;
  const auto r = buchstaber_report(K, M.c(), bo);
  if (o.as_json) {
    std::cout << json{{"f0", r.f0},
                      {"n", r.n},
                      {"chromatic", r.chromatic},
                      {"chromatic_bound", r.lower_bound_chromatic},
                      {"canonical_bound", r.canonical_lower_bound ? json(*r.canonical_lower_bound) : json(nullptr)},
                      {"s_upper", r.s_upper},
                      {"s2", r.s2_exact ? json(*r.s2_exact) : json(nullptr)},
                      {"s", r.s_exact ? json(*r.s_exact) : json(nullptr)},
                      {"mod2_search", to_string(r.mod2_search)},
                      {"integer_search", to_string(r.integer_search)},
                      {"canonical_map", char_map_json(canonical_char_map(M.c(), K))},
                      {"mod2_map", r.mod2_map ? char_map_json(*r.mod2_map) : json(nullptr)},
                      {"integer_map", r.integer_map ? char_map_json(*r.integer_map) : json(nullptr)}}
                     .dump()
              << '\n';
  } else {
    std::cout << "f0=" << r.f0 << " n=" << r.n << " chromatic=" << r.chromatic << '\n'
              << "bounds: " << r.lower_bound_chromatic << " (chromatic) <= " << opt_int(r.canonical_lower_bound)
              << " (canonical) <= s <= s_2 <= " << r.s_upper << '\n'
              << "s_2 = " << opt_int(r.s2_exact) << " (mod-2 search at rank " << r.n << ": "
              << to_string(r.mod2_search) << ")\n"
              << "s = " << opt_int(r.s_exact) << " (integer search: " << to_string(r.integer_search) << ")\n";
  }
  return kOk;
}

int cmd_cyclic(const Common& o, std::optional<int> k, std::optional<int> p, std::optional<int> q) {
  json j;
  bool ok = false;
  if (k) {
    const auto M = cyclic_multicomplex(*k);
    const auto K = facet_set(M);
    const CyclicSpec spec{2 * *k + 4, 2 * *k + 1};
    const auto L = gale_facets(spec);
    const auto map = murai_cyclic_map(*k);
    ok = map_carries_facets(K, L, map);
    j = {{"c", M.c().entries()},
         {"generators", format_monomials(M.generators())},
         {"cyclic", {spec.p, spec.q}},
         {"facets", K.facets().size()},
         {"cyclic_facets", L.facets().size()},
         {"explicit_map_carries_facets", ok}};
    json m = json::object();
    for (const auto& [a, b] : map) m[format_vertex(a)] = "t" + std::to_string(b.level);
    j["map"] = m;
  } else {
    if (!p || !q) fail(Errc::invalid_argument, "cyclic-compare needs --k, or --c/--gens with --p and --q");
    const auto K = facet_set(input(o));
    const auto iso = cyclic_compare(K, {*p, *q});
    ok = iso.has_value();
    j = {{"cyclic", {*p, *q}}, {"isomorphic", ok}};
    if (iso) {
      json m = json::object();
      for (const auto& [a, b] : *iso) m[format_vertex(a)] = "t" + std::to_string(b.level);
      j["map"] = m;
    }
  }
  if (o.as_json) {
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "Δ(" << j["cyclic"][0].get<int>() << "," << j["cyclic"][1].get<int>() << "): " << yes_no(ok) << '\n';
    if (j.contains("map")) {
      for (const auto& [a, b] : j["map"].items()) std::cout << "  " << a << " -> " << b.get<std::string>() << '\n';
    }
  }
  return kOk;
}

int cmd_census(const Common& o, const std::string& invariants, const std::string& out_path, int jobs) {
  const auto c = parse_composition(o.c);
  auto opts = caps(o);
  opts.select = parse_selection(invariants);
  opts.jobs = jobs;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) fail(Errc::invalid_argument, "cannot write " + out_path);
  }
  std::ostream& records = out_path.empty() ? std::cout : file;
  std::ostream& report = out_path.empty() ? std::cerr : std::cout;
  const auto summary = run_census(c, opts, [&](const CensusRecord& r) { records << to_json_line(r) << '\n'; });
  if (o.as_json) {
    json classes = json::array();
    for (const auto& cl : summary.classes) {
      classes.push_back({{"id", cl.id}, {"representative", cl.representative}, {"count", cl.count},
                         {"f_vector", cl.f_vector}, {"names", cl.names}});
    }
    report << json{{"c", c.entries()}, {"records", summary.records}, {"classes", classes}}.dump() << '\n';
  } else {
    report << "c=(" << format_composition(c) << "): " << summary.records << " multicomplexes";
    if (opts.select.iso_classes) report << ", " << summary.classes.size() << " isomorphism classes";
    report << '\n';
    for (const auto& cl : summary.classes) {
      report << "  #" << cl.id << "  x" << cl.count << "  <" << cl.representative << ">";
      for (const auto& n : cl.names) report << "  " << n;
      report << '\n';
    }
  }
  return kOk;
}

int exit_code(Errc code) {
  switch (code) {
    case Errc::invalid_argument:
    case Errc::not_proper: return kUsage;
    case Errc::size_cap: return kSizeCap;
    case Errc::invariant_violation: return kInvariant;
  }
  return kInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Murai spheres: construction, invariants and censuses"};
  app.require_subcommand(1);
  Common o;
  CheckFlags flags;
  std::optional<int> prime, rank, k, p, q;
  std::string invariants = "all", out_path;
  int jobs = default_jobs();

  auto* dual = app.add_subcommand("dual", "Alexander dual of a multicomplex");
  auto* facets = app.add_subcommand("facets", "facets of Bier_c(M) from the facet formula");
  auto* sr = app.add_subcommand("sr-ideal", "minimal non-faces from the polarized ideals");
  auto* check = app.add_subcommand("check", "invariants of Bier_c(M)");
  auto* buch = app.add_subcommand("buchstaber", "Buchstaber number bounds and characteristic maps");
  for (auto* cmd : {dual, facets, sr, check, buch}) {
    add_input(cmd, o);
    add_caps(cmd, o);
  }
  check->add_flag("--all", flags.all, "every invariant (the default)");
  check->add_flag("--sphere", flags.sphere, "sphere check");
  check->add_flag("--chordal", flags.chordal, "chordality with a chordless-cycle witness");
  check->add_flag("--stacked", flags.stacked, "stackedness and truncation type");
  check->add_flag("--neighborly", flags.neighborly, "neighborliness and flagness");
  check->add_flag("--chromatic", flags.chromatic, "chromatic number of the 1-skeleton");
  check->add_flag("--names", flags.names, "named reference types");
  buch->add_option("--prime", prime, "search a mod-p map only");
  buch->add_option("--rank", rank, "target rank of the search (default dim + 1)");

  auto* cyc = app.add_subcommand("cyclic-compare", "compare with a cyclic polytope boundary");
  cyc->add_option("--k", k, "use <x^a : |a| = k> over c = (k+2, k) and the explicit map");
  cyc->add_option("--c", o.c, "composition vector");
  cyc->add_option("--gens", o.gens, "generators");
  cyc->add_option("--p", p, "vertices of the cyclic polytope");
  cyc->add_option("--q", q, "facet size of the cyclic sphere");
  add_caps(cyc, o);

  auto* census = app.add_subcommand("census", "analyse every proper c-multicomplex");
  census->add_option("--c", o.c, "composition vector")->required();
  census->add_option("--invariants", invariants, "chordality,stackedness,neighborly,chromatic,buchstaber,iso or all")
      ->capture_default_str();
  census->add_option("--out", out_path, "JSON Lines output (default: stdout, summary on stderr)");
  census->add_option("--jobs", jobs, "worker threads (default: MURAI_JOBS or 1)");
  add_caps(census, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*dual) return cmd_dual(o);
    if (*facets) return cmd_facets(o);
    if (*sr) return cmd_sr_ideal(o);
    if (*check) return cmd_check(o, flags);
    if (*buch) return cmd_buchstaber(o, prime, rank);
    if (*cyc) return cmd_cyclic(o, k, p, q);
    if (*census) return cmd_census(o, invariants, out_path, jobs);
  } catch (const Error& e) {
    std::cerr << "murai: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "murai: " << e.what() << '\n';
    return kInvariant;
  }
  return kUsage;
}
