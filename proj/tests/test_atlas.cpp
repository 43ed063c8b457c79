#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "zdring/atlas.hpp"
#include "zdring/errors.hpp"
#include "zdring/families.hpp"
#include "zdring/graph.hpp"
#include "zdring/isomorphism.hpp"
#include "zdring/ringtab.hpp"
#include "zdring/structure.hpp"

using namespace zdring;

namespace {

const std::vector<AtlasEntry>& small_atlas() {
  static const std::vector<AtlasEntry> atlas = enumerate_up_to(9);
  return atlas;
}

std::set<std::string> labels_of(const std::vector<AtlasEntry>& entries) {
  std::set<std::string> out;
  for (const auto& e : entries) out.insert(catalog_label(e.certificate).value_or("?"));
  return out;
}

std::size_t matches(const FiniteRing& r) {
  std::size_t hits = 0;
  for (const auto& e : small_atlas()) hits += oracle::rings_isomorphic(e.ring, r) ? 1 : 0;
  return hits;
}

}  // namespace

TEST_CASE("abelian_group_types") {
  CHECK(abelian_group_types(1) == std::vector<AdditiveType>{AdditiveType{}});
  CHECK(abelian_group_types(8) == std::vector<AdditiveType>{{8}, {4, 2}, {2, 2, 2}});
  CHECK(abelian_group_types(9) == std::vector<AdditiveType>{{9}, {3, 3}});
  CHECK(abelian_group_types(7) == std::vector<AdditiveType>{{7}});
  CHECK_THROWS_AS(abelian_group_types(10), OrderCapExceeded);
  Limits wide;
  wide.enumeration_cap = 16;
  CHECK(abelian_group_types(16, wide).size() == 5);
  CHECK(abelian_group_types(12, wide) == std::vector<AdditiveType>{{4, 3}, {2, 2, 3}});
  wide.enumeration_cap = 17;
  CHECK_THROWS_AS(abelian_group_types(17, wide), OrderCapExceeded);
}

TEST_CASE("enumerate_rings counts") {
  CHECK(enumerate_rings(1).size() == 1);
  for (std::size_t p : {2, 3, 5, 7}) CHECK(enumerate_rings(p).size() == 2);
  CHECK(enumerate_rings(4).size() == 11);
  CHECK(enumerate_rings(6).size() == 4);
  CHECK(enumerate_rings(9).size() == 11);
  CHECK_THROWS_AS(enumerate_rings(16), OrderCapExceeded);
}

TEST_CASE("oracle: class counts agree with an orbit count over all tables") {
  for (std::size_t p : {2, 3, 5, 7}) CHECK(enumerate_rings(p).size() == oracle::count_ring_classes_of_types({{p}}));
  CHECK(enumerate_rings(4).size() == oracle::count_ring_classes_of_types({{4}, {2, 2}}));
  CHECK(enumerate_rings(6).size() == oracle::count_ring_classes_of_types({{6}}));
  CHECK(enumerate_rings(9).size() == oracle::count_ring_classes_of_types({{9}, {3, 3}}));
  std::map<AdditiveType, std::size_t> by_type;
  for (const auto& e : enumerate_rings(8)) ++by_type[additive_type(e.ring)];
  CHECK(by_type[AdditiveType{8}] == oracle::count_ring_classes(std::vector<std::size_t>{8}));
  CHECK(by_type[AdditiveType{4, 2}] == oracle::count_ring_classes(std::vector<std::size_t>{4, 2}));
}

TEST_CASE("entries are pairwise non-isomorphic with unique certificates") {
  const auto& atlas = small_atlas();
  std::set<Certificate> certs;
  for (const auto& e : atlas) {
    CHECK(certs.insert(e.certificate).second);
    CHECK(ring_canonical_certificate(e.ring) == e.certificate);
  }
  for (std::size_t n : {4, 6}) {
    const auto rings = enumerate_rings(n);
    for (std::size_t i = 0; i < rings.size(); ++i)
      for (std::size_t j = i + 1; j < rings.size(); ++j) CHECK_FALSE(oracle::rings_isomorphic(rings[i].ring, rings[j].ring));
  }
}

TEST_CASE("property: every associative presentation lands in exactly one class") {
  std::mt19937 rng(41);
  for (const AdditiveType& type : {AdditiveType{4}, AdditiveType{2, 2}, AdditiveType{9}, AdditiveType{3, 3},
                                   AdditiveType{4, 2}}) {
    const auto pres = associative_presentations(type);
    REQUIRE_FALSE(pres.empty());
    std::set<Certificate> entries;
    std::size_t n = 1;
    for (auto c : type) n *= c;
    for (const auto& e : enumerate_rings(n)) entries.insert(e.certificate);
    for (int trial = 0; trial < 20; ++trial) {
      const auto& g = pres[std::uniform_int_distribution<std::size_t>(0, pres.size() - 1)(rng)];
      const FiniteRing r = ring_from_structure_constants(g.type, g.constants);
      CHECK(entries.count(ring_canonical_certificate(r)) == 1);
      if (n <= 6) CHECK(matches(r) == 1);
    }
  }
}

TEST_CASE("property: relabeled atlas rings are recognised") {
  std::mt19937 rng(43);
  const auto& atlas = small_atlas();
  for (int trial = 0; trial < 60; ++trial) {
    const auto& e = atlas[static_cast<std::size_t>(trial * 7) % atlas.size()];
    const FiniteRing r = oracle::relabel(e.ring, oracle::random_relabeling(e.ring.order(), rng));
    const Certificate c = ring_canonical_certificate(r);
    std::size_t hits = 0;
    for (const auto& f : atlas) hits += f.certificate == c ? 1 : 0;
    CHECK(hits == 1);
    CHECK(c == e.certificate);
  }
}

TEST_CASE("catalog labels") {
  CHECK(labels_of(enumerate_rings(2)) == std::set<std::string>{"Z2", "N0(2)"});
  CHECK(catalog_label(ring_canonical_certificate(zn(9))) == "Z9");
  CHECK(catalog_label(ring_canonical_certificate(direct_sum(zn(2), zn(2)))) == "Z2+Z2");
  CHECK(catalog_label(ring_canonical_certificate(gf(2, 2))) == "GF(4)");
  CHECK(catalog_label(ring_canonical_certificate(zpx_mod_x2(3))) == "Z3[x]/(x^2)");
}

TEST_CASE("rings_with_graph") {
  const auto k2 = rings_with_graph(9, complete_graph(2));
  CHECK(labels_of(k2) == std::set<std::string>{"N0(3)", "Z9", "Z3[x]/(x^2)", "Z2+Z2"});
  const auto k1 = labels_of(rings_with_graph(4, complete_graph(1)));
  CHECK(k1.count("Z4") == 1);
  CHECK(k1.count("Z2[x]/(x^2)") == 1);
  CHECK(k1.count("N0(2)") == 1);
  const auto e0 = rings_with_graph(3, SimpleGraph(0, {}));
  CHECK(e0.size() == 3);
  CHECK(labels_of(e0).count("Z3") == 1);
}

TEST_CASE("graph_determinacy_report") {
  std::vector<AtlasEntry> five;
  for (const FiniteRing& r : {np2(2), npp(2), ap(2), ap0(2), direct_sum(n0(2), zn(2))}) five.push_back(make_entry(r));
  CHECK(graph_determinacy_report(five).size() == 10);
  const auto& atlas = small_atlas();
  const auto report = graph_determinacy_report(atlas);
  for (const auto& [i, j] : report) {
    CHECK(i < j);
    CHECK(atlas[i].graph_certificate == atlas[j].graph_certificate);
    CHECK(atlas[i].certificate != atlas[j].certificate);
  }
  const std::vector<NcPoly> filter{parse_poly("6x"), parse_poly("xy - x^2y"), parse_poly("xy - xy^2")};
  const auto filtered = graph_determinacy_report(atlas, filter);
  REQUIRE(filtered.size() == 1);
  std::set<std::string> pair{catalog_label(atlas[filtered[0].first].certificate).value_or("?"),
                             catalog_label(atlas[filtered[0].second].certificate).value_or("?")};
  CHECK(pair == std::set<std::string>{"N0(3)", "Z2+Z2"});
}

TEST_CASE("atlas files") {
  const auto rings = enumerate_rings(4);
  const std::string text = write_atlas(rings);
  CHECK(text.rfind("atlas v1\norder 4\ncount 11\n", 0) == 0);
  const auto back = read_atlas(text);
  REQUIRE(back.size() == rings.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].certificate == rings[i].certificate);
    CHECK(back[i].ring.same_tables(rings[i].ring));
  }
  CHECK(write_atlas(back) == text);
  CHECK(read_atlas("").empty());

  const auto path = std::filesystem::temp_directory_path() / "zdring-test-atlas.txt";
  save_atlas(rings, path);
  CHECK(load_atlas(path).size() == 11);
  std::filesystem::remove(path);

  // N0(2) with one product changed loses distributivity.
  const std::string two = write_atlas(enumerate_rings(2));
  std::string corrupt = two;
  corrupt.replace(corrupt.find("mul\n0 0\n0 0"), 11, "mul\n0 0\n0 1");
  CHECK_THROWS_AS(read_atlas(corrupt), Error);
  std::string swapped = two;
  const auto line2 = swapped.find('\n', swapped.find("count 2\n") + 8) + 1;
  swapped[line2 + swapped.substr(line2).find('\n') - 1] ^= 1;
  CHECK_THROWS_AS(read_atlas(swapped), FormatError);
  CHECK_THROWS_AS(read_atlas("atlas v2\n"), FormatError);
}

TEST_CASE("structure reports stored with entries are consistent") {
  for (const auto& e : small_atlas()) {
    CHECK(report_inconsistency(e.report).empty());
    CHECK(e.report.order == e.ring.order());
    CHECK(e.graph_certificate == canonical_form(zero_divisor_graph(e.ring)));
  }
}

TEST_CASE("results do not depend on the worker count") {
  Limits one, three;
  one.workers = 1;
  three.workers = 3;
  for (const AdditiveType& type : {AdditiveType{2, 2}, AdditiveType{4, 2}, AdditiveType{3, 3}}) {
    const auto a = associative_presentations(type, one);
    const auto b = associative_presentations(type, three);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].constants == b[i].constants);
  }
}
