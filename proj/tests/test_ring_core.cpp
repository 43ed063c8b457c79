#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "zdring/errors.hpp"
#include "zdring/families.hpp"
#include "zdring/ringtab.hpp"
#include "zdring/structure.hpp"

using namespace zdring;

namespace {

Table rows(std::initializer_list<std::initializer_list<Element>> init) {
  Table t;
  for (auto r : init) t.emplace_back(r);
  return t;
}

std::vector<FiniteRing> named_rings() {
  std::vector<FiniteRing> out;
  for (long long p : {2LL, 3LL, 5LL}) {
    out.push_back(zn(static_cast<std::size_t>(p)));
    out.push_back(n0(p));
    out.push_back(n0(p, 2));
    out.push_back(np2(p));
    out.push_back(npp(p));
    out.push_back(ap(p));
    out.push_back(ap0(p));
    out.push_back(zpx_mod_x2(p));
    out.push_back(gf(p, 2));
  }
  out.push_back(zn(9));
  out.push_back(gf(2, 3));
  out.push_back(matrix_ring(zn(2), 2));
  return out;
}

}  // namespace

TEST_CASE("make_ring accepts Z2 and the zero-product ring of order 2") {
  const FiniteRing z2 = make_ring(rows({{0, 1}, {1, 0}}), rows({{0, 0}, {0, 1}}), "Z2");
  CHECK(z2.order() == 2);
  CHECK(z2.mul(1, 1) == 1);
  CHECK(z2.label() == "Z2");
  const FiniteRing n = make_ring(rows({{0, 1}, {1, 0}}), rows({{0, 0}, {0, 0}}));
  CHECK(n.mul(1, 1) == 0);
  CHECK(oracle::rings_isomorphic(n, n0(2)));
}

TEST_CASE("make_ring reports the failing axiom with a witness") {
  SUBCASE("additive identity") {
    try {
      make_ring(rows({{1, 0}, {0, 1}}), rows({{0, 0}, {0, 1}}));
      FAIL("expected AxiomViolation");
    } catch (const AxiomViolation& e) {
      CHECK(e.axiom() == "additive identity is element 0");
    }
  }
  SUBCASE("additive associativity") {
    // 0 is neutral and the table is commutative with inverses, but
    // (1+1)+2 = 0+2 = 2 while 1+(1+2) = 1+1 = 0.
    try {
      make_ring(rows({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}), rows({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}));
      FAIL("expected AxiomViolation");
    } catch (const AxiomViolation& e) {
      CHECK(e.axiom() == "additive associativity");
      const Table add = rows({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
      const auto [x, y, z] = e.witness();
      CHECK(add[add[x][y]][z] != add[x][add[y][z]]);
    }
  }
  SUBCASE("distributivity") {
    // 1*0 = 1 breaks x(y + z) = xy + xz.
    try {
      make_ring(rows({{0, 1}, {1, 0}}), rows({{0, 0}, {1, 1}}));
      FAIL("expected AxiomViolation");
    } catch (const AxiomViolation& e) {
      CHECK(e.axiom().find("distributivity") != std::string::npos);
    }
  }
  SUBCASE("the zero ring of order 1") { CHECK_NOTHROW(make_ring(rows({{0}}), rows({{0}}))); }
  SUBCASE("shape and range") {
    CHECK_THROWS_AS(make_ring(rows({{0, 1}, {1}}), rows({{0, 0}, {0, 1}})), AxiomViolation);
    CHECK_THROWS_AS(make_ring(rows({{0, 1}, {1, 0}}), rows({{0, 0}, {0, 2}})), AxiomViolation);
    CHECK_THROWS_AS(make_ring({}, {}), AxiomViolation);
  }
  SUBCASE("order cap") {
    Limits tiny;
    tiny.order_cap = 3;
    CHECK_THROWS_AS(zn(4, tiny), OrderCapExceeded);
  }
}

TEST_CASE("a non-associative multiplication is rejected") {
  // On Z2 + Z2 (index x + 2y) take the bilinear product with e1*e1 = e2,
  // everything else zero except e2*e1 = e1: (e1 e1) e1 = e2 e1 = e1 but
  // e1 (e1 e1) = e1 e2 = 0.
  const Table add = rows({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
  Table mul(4, std::vector<Element>(4, 0));
  auto bil = [](Element a, Element b) {
    const int a1 = a & 1, a2 = a >> 1, b1 = b & 1, b2 = b >> 1;
    const int e1 = (a2 * b1) & 1;  // e2*e1 = e1
    const int e2 = (a1 * b1) & 1;  // e1*e1 = e2
    return static_cast<Element>(e1 + 2 * e2);
  };
  for (Element a = 0; a < 4; ++a)
    for (Element b = 0; b < 4; ++b) mul[a][b] = bil(a, b);
  try {
    make_ring(add, mul);
    FAIL("expected AxiomViolation");
  } catch (const AxiomViolation& e) {
    CHECK(e.axiom() == "multiplicative associativity");
    const auto [x, y, z] = e.witness();
    CHECK(bil(bil(x, y), z) != bil(x, bil(y, z)));
  }
}

TEST_CASE("zn") {
  const FiniteRing z9 = zn(9);
  CHECK(z9.mul(3, 6) == 0);
  CHECK(z9.label() == "Z9");
  CHECK(zero_divisors(z9).size() == 2);
  CHECK(oracle::rings_isomorphic(zn(2), gf(2)));
  CHECK(zn(1).order() == 1);
}

TEST_CASE("gf") {
  const FiniteRing f4 = gf(2, 2);
  CHECK(f4.order() == 4);
  CHECK(zero_divisors(f4).empty());
  CHECK(oracle::rings_isomorphic(gf(3, 1), zn(3)));
  // The multiplicative group of GF(4) is cyclic of order 3.
  const Element one = *identity_element(f4);
  bool cyclic = false;
  for (Element g = 1; g < 4; ++g) {
    Element x = g;
    std::size_t k = 1;
    while (x != one) {
      x = f4.mul(x, g);
      ++k;
    }
    cyclic = cyclic || k == 3;
  }
  CHECK(cyclic);
  CHECK_THROWS_AS(gf(4, 1), NotPrime);
  CHECK(gf_modulus(2, 2) == std::vector<long long>{1, 1, 1});
  CHECK(gf_modulus(3, 2) == std::vector<long long>{1, 0, 1});
  for (long long p : {2LL, 3LL, 5LL})
    for (std::size_t k : {1U, 2U, 3U}) {
      if (p == 5 && k == 3) continue;
      CHECK(is_field(gf(p, k)));
    }
}

TEST_CASE("n0") {
  const FiniteRing r = n0(3);
  CHECK(r.order() == 3);
  for (Element a = 0; a < 3; ++a)
    for (Element b = 0; b < 3; ++b) CHECK(r.mul(a, b) == 0);
  CHECK(n0(2, 2).order() == 4);
  CHECK(nilpotency_index(n0(5)) == std::optional<std::size_t>(2));
  CHECK_THROWS_AS(n0(6), NotPrime);
  CHECK(n0(3).label() == "N0(3)");
}

TEST_CASE("np2") {
  const FiniteRing n4 = np2(2);
  // (m a)(k a) = 2mk a
  for (Element m = 0; m < 4; ++m)
    for (Element k = 0; k < 4; ++k) CHECK(n4.mul(m, k) == (2 * m * k) % 4);
  for (Element x = 0; x < 4; ++x) CHECK(n4.add(n4.scale(2, x), n4.mul(x, x)) == 0);
  CHECK(n4.element_name(1) == "a");
  CHECK(n4.element_name(3) == "3a");
  for (long long p : {2LL, 3LL, 5LL}) CHECK(nilpotency_index(np2(p)) == std::optional<std::size_t>(3));
  CHECK_THROWS_AS(np2(1), NotPrime);
}

TEST_CASE("npp") {
  const FiniteRing r = npp(2);
  CHECK(r.order() == 4);
  CHECK(r.mul(1, 1) != 0);  // a = 1, b = 0 squares to the b slot
  CHECK(characteristic(npp(3)) == 3);
  for (long long p : {2LL, 3LL}) {
    const FiniteRing s = npp(p);
    for (Element a = 0; a < s.order(); ++a)
      for (Element b = 0; b < s.order(); ++b)
        for (Element c = 0; c < s.order(); ++c) CHECK(s.mul(s.mul(a, b), c) == 0);
    CHECK(nilpotency_index(s) == std::optional<std::size_t>(3));
  }
}

TEST_CASE("ap and ap0") {
  const FiniteRing a = ap(2), a0 = ap0(2);
  // (0,1) has index 0 + 2*1 = 2 and kills everything from the left.
  for (Element x = 0; x < 4; ++x) CHECK(a.mul(2, x) == 0);
  // (1,0) is a left identity of ap and a right identity of ap0.
  for (Element x = 0; x < 4; ++x) {
    CHECK(a.mul(1, x) == x);
    CHECK(a0.mul(x, 1) == x);
  }
  CHECK_FALSE(identity_element(a).has_value());
  CHECK_FALSE(oracle::rings_isomorphic(a, a0));
}

TEST_CASE("zpx_mod_x2") {
  const FiniteRing r3 = zpx_mod_x2(3);
  CHECK(zero_divisors(r3) == std::vector<Element>{3, 6});
  CHECK(r3.element_name(3) == "x");
  const FiniteRing r2 = zpx_mod_x2(2);
  CHECK(r2.mul(2, 2) == 0);
  const auto u = units(r3);
  CHECK(u.size() == 6);
  for (Element x : u) CHECK(x % 3 != 0);
  CHECK(is_local(r3));
}

TEST_CASE("direct_sum") {
  const FiniteRing s = direct_sum(zn(2), zn(3));
  CHECK(s.order() == 6);
  CHECK(characteristic(s) == 6);
  CHECK(oracle::rings_isomorphic(direct_sum(zn(2), zero_ring()), zn(2)));
  CHECK(oracle::rings_isomorphic(direct_sum(zn(3), zn(2)), zn(6)));
  Limits tiny;
  tiny.order_cap = 8;
  CHECK_THROWS_AS(direct_sum(zn(3), zn(3), tiny), OrderCapExceeded);
  CHECK(s.label() == "Z2+Z3");
}

TEST_CASE("matrix_ring") {
  const FiniteRing m = matrix_ring(zn(2), 2);
  CHECK(m.order() == 16);
  REQUIRE(identity_element(m).has_value());
  CHECK(*identity_element(m) == 9);  // E11 + E22
  CHECK(m.mul(1, 8) == 0);           // E11 E22
  CHECK(m.mul(8, 1) == 0);
  CHECK(oracle::rings_isomorphic(matrix_ring(zn(3), 1), zn(3)));
  CHECK_THROWS_AS(matrix_ring(zn(3), 3), OrderCapExceeded);
  CHECK_FALSE(is_commutative(m));
}

TEST_CASE("quotient") {
  const FiniteRing z9 = zn(9);
  const Ideal i = make_ideal(z9, std::vector<Element>{0, 3, 6});
  const FiniteRing q = quotient(z9, i);
  CHECK(q.order() == 3);
  CHECK(oracle::rings_isomorphic(q, zn(3)));
  CHECK(quotient_map(z9, i) == std::vector<Element>{0, 1, 2, 0, 1, 2, 0, 1, 2});
  CHECK(quotient(z9, zero_ideal()).same_tables(z9));
  const FiniteRing r = zpx_mod_x2(3);
  CHECK(oracle::rings_isomorphic(quotient(r, principal_ideal(r, 3)), zn(3)));
  CHECK_THROWS_AS(make_ideal(z9, std::vector<Element>{0, 1}), NotAnIdeal);
  // An ideal of a different ring is revalidated.
  CHECK_THROWS_AS(quotient(zn(8), make_ideal(z9, std::vector<Element>{0, 3, 6})), NotAnIdeal);
}

TEST_CASE("subring_generated") {
  const std::vector<Element> two{2};
  const auto s = subring_generated(zn(4), two);
  CHECK(oracle::rings_isomorphic(s.ring, n0(2)));
  CHECK(s.embedding == std::vector<Element>{0, 2});
  const std::vector<Element> none;
  CHECK(subring_generated(zn(4), none).ring.order() == 1);
  const std::vector<Element> three{3};
  CHECK(oracle::rings_isomorphic(subring_generated(zn(9), three).ring, n0(3)));
}

TEST_CASE("characteristic") {
  CHECK(characteristic(zn(9)) == 9);
  CHECK(characteristic(npp(3)) == 3);
  CHECK(characteristic(direct_sum(zn(2), zn(3))) == 6);
  CHECK(characteristic(zero_ring()) == 1);
}

TEST_CASE("property: constructor outputs revalidate and have the right orders") {
  for (const auto& r : named_rings()) {
    CAPTURE(r.label());
    CHECK(make_ring(r.add_rows(), r.mul_rows()).same_tables(r));
  }
  for (long long p : {2LL, 3LL, 5LL}) {
    const auto pp = static_cast<std::size_t>(p * p);
    CHECK(n0(p, 1).order() == static_cast<std::size_t>(p));
    CHECK(n0(p, 2).order() == pp);
    CHECK(np2(p).order() == pp);
    CHECK(npp(p).order() == pp);
    CHECK(ap(p).order() == pp);
    CHECK(ap0(p).order() == pp);
  }
}

TEST_CASE("property: direct_sum is commutative and associative up to isomorphism") {
  const std::vector<FiniteRing> parts{zn(2), n0(2), zn(3), zn(4)};
  for (const auto& a : parts)
    for (const auto& b : parts) {
      if (a.order() * b.order() > 8) continue;
      CHECK(oracle::rings_isomorphic(direct_sum(a, b), direct_sum(b, a)));
    }
  for (const auto& a : parts)
    for (const auto& b : parts)
      for (const auto& c : parts) {
        if (a.order() * b.order() * c.order() > 8) continue;
        CHECK(oracle::rings_isomorphic(direct_sum(direct_sum(a, b), c), direct_sum(a, direct_sum(b, c))));
      }
}

TEST_CASE("property: subring embeddings preserve both tables") {
  std::mt19937 rng(7);
  for (const auto& r : named_rings()) {
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(r.order() - 1));
    for (int trial = 0; trial < 3; ++trial) {
      const std::vector<Element> gens{pick(rng), pick(rng)};
      const auto s = subring_generated(r, gens);
      RingHom hom{s.ring.order(), r.order(), s.embedding, false};
      CHECK(is_homomorphism(hom, s.ring, r));
      for (Element g : gens) CHECK(std::binary_search(s.embedding.begin(), s.embedding.end(), g));
    }
  }
}

TEST_CASE("property: quotient order is |R|/|I| for every ideal") {
  for (const auto& r : {zn(8), zn(9), npp(2), ap(2), zpx_mod_x2(3), direct_sum(zn(2), n0(2)), gf(2, 3)}) {
    for (const auto& i : ideals(r)) CHECK(quotient(r, i).order() * i.size() == r.order());
  }
}

TEST_CASE("ringtab round trip and diagnostics") {
  for (const auto& r : named_rings()) {
    const FiniteRing back = read_ringtab(write_ringtab(r));
    CHECK(back.same_tables(r));
    CHECK(back.label() == r.label());
  }
  const std::string text = "# comment\nringtab 1\norder 2\nlabel Z2\nadd\n0 1\n1 0\nmul\n0 0\n0 1\n";
  CHECK(read_ringtab(text).same_tables(zn(2)));
  CHECK_THROWS_AS(read_ringtab("ringtab 2\norder 1\nadd\n0\nmul\n0\n"), FormatError);
  CHECK_THROWS_AS(read_ringtab("ringtab 1\norder 2\nadd\n0 1\n1 0\nmul\n0 0\n"), FormatError);
  CHECK_THROWS_AS(read_ringtab("ringtab 1\norder 2\nadd\n0 1\n1 0\nmul\n0 0\n1 1\n"), AxiomViolation);
  CHECK_THROWS_AS(read_ringtab("ringtab 1\norder 2\nadd\n0 x\n1 0\nmul\n0 0\n0 1\n"), FormatError);
  const auto two = read_ringtabs(write_ringtab(zn(2)) + "\n" + write_ringtab(zn(3)));
  REQUIRE(two.size() == 2);
  CHECK(two[1].same_tables(zn(3)));
  CHECK_THROWS_AS(load_ringtab("/nonexistent/zdring.ring"), IoError);
}

TEST_CASE("is_homomorphism rejects a non-multiplicative map") {
  // Negation on Z3 is additive but not multiplicative.
  RingHom neg{3, 3, {0, 2, 1}, true};
  CHECK_FALSE(is_homomorphism(neg, zn(3), zn(3)));
  RingHom id{3, 3, {0, 1, 2}, true};
  CHECK(is_homomorphism(id, zn(3), zn(3)));
}
