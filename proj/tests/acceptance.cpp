// One line per acceptance criterion; exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "zdring/atlas.hpp"
#include "zdring/families.hpp"
#include "zdring/graph.hpp"
#include "zdring/identity.hpp"
#include "zdring/isomorphism.hpp"
#include "zdring/ncpoly.hpp"
#include "zdring/ringtab.hpp"
#include "zdring/scenarios.hpp"
#include "zdring/structure.hpp"

using namespace zdring;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    passed = false;
    detail << " [" << what << "]";
  }
};

bool adjacency_preserved(const SimpleGraph& g, const SimpleGraph& h, const std::vector<std::size_t>& map) {
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      if (g.adjacent(u, v) != h.adjacent(map[u], map[v])) return false;
  return true;
}

void cor1(Outcome& o) {
  const auto report = run_scenario("cor1");
  o.expect(report.passed, "scenario cor1 failed");
  const std::vector<FiniteRing> expected{n0(3), zn(9), zpx_mod_x2(3), direct_sum(zn(2), zn(2))};
  const SimpleGraph k2 = complete_graph(2);
  std::size_t found = 0;
  for (const auto& e : enumerate_up_to(9)) {
    if (e.ring.order() < 2) continue;
    if (!oracle::graphs_isomorphic(zero_divisor_graph(e.ring), k2)) continue;
    ++found;
    std::size_t hits = 0;
    for (const auto& r : expected) hits += oracle::rings_isomorphic(e.ring, r) ? 1 : 0;
    o.expect(hits == 1, "unexpected K2 ring " + catalog_label(e.certificate).value_or("?"));
  }
  o.expect(found == 4, "found " + std::to_string(found) + " K2 classes");
  o.expect(rings_with_graph(9, k2).size() == 4, "rings_with_graph(9, K2) size");
  o.detail << " " << found << " classes with graph K2";
}

void prop5(Outcome& o) {
  for (long long p : {2LL, 3LL, 5LL}) {
    const std::vector<FiniteRing> rings{np2(p), npp(p), ap(p), ap0(p), direct_sum(n0(p), zn(static_cast<std::size_t>(p)))};
    std::vector<SimpleGraph> graphs;
    for (const auto& r : rings) graphs.push_back(zero_divisor_graph(r));
    std::size_t ok = 0;
    for (std::size_t i = 0; i < graphs.size(); ++i)
      for (std::size_t j = i + 1; j < graphs.size(); ++j) {
        const auto map = graph_isomorphic(graphs[i], graphs[j]);
        if (map && adjacency_preserved(graphs[i], graphs[j], *map)) ++ok;
      }
    o.expect(ok == 10, "p=" + std::to_string(p) + ": " + std::to_string(ok) + "/10");
    ScenarioParams params;
    params.p = p;
    o.expect(run_scenario("prop5", params).passed, "scenario prop5 p=" + std::to_string(p));
    o.detail << " p=" << p << ":" << ok << "/10";
  }
}

void prop4(Outcome& o) {
  const FiniteRing a = n0(3);
  const FiniteRing b = direct_sum(zn(2), zn(2));
  const auto ga = zero_divisor_graph(a), gb = zero_divisor_graph(b);
  const auto map = graph_isomorphic(ga, gb);
  o.expect(map.has_value() && adjacency_preserved(ga, gb, *map), "graphs not isomorphic");
  o.expect(is_complete(ga) == std::optional<std::size_t>{2}, "graph is not K2");
  o.expect(!ring_isomorphic(a, b).has_value(), "ring_isomorphic returned a map");
  o.expect(!oracle::rings_isomorphic(a, b), "exhaustive search found a ring map");
  o.expect(run_scenario("prop4-counterexample").passed, "scenario prop4-counterexample");
}

void identities(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  for (const char* f : {"xyz", "4x", "2xy", "2x + x^2"}) {
    const auto r = satisfies_identity(np2(2), parse_poly(f));
    o.expect(r.holds && !r.sampled, std::string("N4 fails ") + f);
  }
  for (const char* f : {"4x", "xy"}) {
    const auto r = satisfies_identity(n0(2, 2), parse_poly(f));
    o.expect(r.holds && !r.sampled, std::string("N0(4) fails ") + f);
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.expect(seconds < 1.0, "took " + std::to_string(seconds) + " s");
}

void substitution(Outcome& o) {
  const NcPoly f = parse_poly("x + x^2");
  const NcPoly x = NcPoly::variable(0);
  const NcPoly result = add(scale(4, f), scale(-1, substitute(f, {{0, scale(2, x)}})));
  o.expect(result == scale(2, x), "got " + render(result));
  o.detail << " 2^2 f(x) - f(2x) = " << render(result);
}

void counts(Outcome& o) {
  const std::vector<std::pair<std::size_t, std::vector<std::vector<std::size_t>>>> orders{
      {2, {{2}}}, {3, {{3}}}, {4, {{4}, {2, 2}}}, {5, {{5}}}, {7, {{7}}}, {8, {{8}, {4, 2}, {2, 2, 2}}}, {9, {{9}, {3, 3}}}};
  const std::map<std::size_t, std::size_t> published{{2, 2}, {3, 2}, {4, 11}, {5, 2}, {7, 2}, {8, 52}, {9, 11}};
  for (const auto& [n, types] : orders) {
    const std::size_t got = enumerate_rings(n).size();
    const std::size_t brute = oracle::count_ring_classes_of_types(types);
    o.expect(got == brute && got == published.at(n),
             "order " + std::to_string(n) + ": " + std::to_string(got) + " vs oracle " + std::to_string(brute));
    o.detail << " " << n << ":" << got;
  }
}

void oracles(Outcome& o) {
  const auto atlas = enumerate_up_to(9);
  std::vector<SimpleGraph> graphs;
  std::vector<std::vector<std::uint8_t>> forms;
  for (const auto& e : atlas) {
    const auto g = zero_divisor_graph(e.ring);
    if (g.vertex_count() > 8) continue;
    graphs.push_back(g);
    forms.push_back(canonical_form(g));
  }
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (std::size_t j = i; j < graphs.size(); ++j) {
      ++pairs;
      o.expect((forms[i] == forms[j]) == oracle::graphs_isomorphic(graphs[i], graphs[j]), "graph pair disagrees");
    }
  std::size_t unital = 0;
  for (const auto& e : atlas) {
    if (identity_element(e.ring)) {
      ++unital;
      const Ideal radical = jacobson_radical(e.ring);
      const auto& j = radical.members();
      o.expect(std::vector<Element>(j.begin(), j.end()) == oracle::radical_by_maximal_ideals(e.ring),
               "radical of " + catalog_label(e.certificate).value_or("?"));
    }
    o.expect(is_subdirectly_irreducible(e.ring) == oracle::subdirectly_irreducible(e.ring),
             "subdirect irreducibility of " + catalog_label(e.certificate).value_or("?"));
  }
  o.detail << " " << pairs << " graph pairs, " << unital << " unital rings, " << atlas.size() << " rings";
}

// Two separate CLI processes, so no in-process memoization is shared.
void determinism(Outcome& o, const std::string& cli) {
  const fs::path root = fs::temp_directory_path() / "zdring-acceptance";
  fs::remove_all(root);
  std::string files[2];
  const char* workers[2] = {"1", "3"};
  for (int i = 0; i < 2; ++i) {
    const fs::path dir = root / workers[i];
    const std::string cmd = "\"" + cli + "\" --workers " + workers[i] + " atlas build 8 --out \"" + dir.string() + "\" > " +
                            (root / (std::string("log") + workers[i])).string() + " 2>&1";
    fs::create_directories(root);
    o.expect(std::system(cmd.c_str()) == 0, "atlas build 8 with workers " + std::string(workers[i]));
    files[i] = fs::exists(dir / "atlas-8.txt") ? read_text_file(dir / "atlas-8.txt") : "";
  }
  o.expect(!files[0].empty() && files[0] == files[1], "atlas files differ");
  o.expect(files[0] == write_atlas(enumerate_rings(8)), "CLI atlas differs from the library output");
  o.detail << " " << files[0].size() << " bytes, identical";
  fs::remove_all(root);
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "zdring";
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"K2 classification of rings of order 2-9", cor1},
      {"five rings share one zero-divisor graph for p = 2, 3, 5", prop5},
      {"N0(3) and Z2+Z2 have isomorphic graphs but are not isomorphic", prop4},
      {"identity suites of N4 and N0(4)", identities},
      {"4f(x) - f(2x) = 2x for f = x + x^2", substitution},
      {"ring counts by order", counts},
      {"graph forms, radical and subdirect irreducibility agree with brute force", oracles},
      {"atlas build 8 is byte-identical across worker counts", [&](Outcome& o) { determinism(o, cli); }},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", seconds);
    std::cout << "criterion " << (i + 1) << " " << (o.passed ? "PASS" : "FAIL") << " " << criteria[i].first << " ("
              << timing << ")" << o.detail.str() << std::endl;
    all = all && o.passed;
  }
  return all ? 0 : 1;
}
