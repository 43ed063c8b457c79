#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "zdring/atlas.hpp"
#include "zdring/errors.hpp"
#include "zdring/families.hpp"
#include "zdring/identity.hpp"
#include "zdring/ncpoly.hpp"

using namespace zdring;

namespace {

const NcPoly X = NcPoly::variable(0);
const NcPoly Y = NcPoly::variable(1);
const NcPoly Z = NcPoly::variable(2);

NcPoly random_poly(std::mt19937& rng, std::size_t vars) {
  std::uniform_int_distribution<int> terms(1, 4), len(1, 3), coef(-3, 3);
  std::uniform_int_distribution<Variable> var(0, static_cast<Variable>(vars - 1));
  NcPoly p;
  for (int t = terms(rng); t > 0; --t) {
    Word w;
    for (int l = len(rng); l > 0; --l) w.push_back(var(rng));
    p = p + NcPoly::monomial(coef(rng), w);
  }
  return p;
}

// Brute-force identity check without the library scan.
std::optional<Assignment> first_failure(const FiniteRing& r, const NcPoly& p) {
  const auto vars = p.variables();
  std::vector<Variable> vs(vars.begin(), vars.end());
  std::vector<Element> values(vs.size(), 0);
  while (true) {
    Assignment a;
    for (std::size_t i = 0; i < vs.size(); ++i) a[vs[i]] = values[i];
    if (evaluate(p, r, a) != 0) return a;
    std::size_t i = vs.size();
    while (i > 0) {
      --i;
      if (++values[i] < r.order()) break;
      values[i] = 0;
      if (i == 0) return std::nullopt;
    }
    if (vs.empty()) return std::nullopt;
  }
}

}  // namespace

TEST_CASE("parse") {
  const NcPoly p = parse_poly("2x + x^2");
  CHECK(p.coefficient({0}) == 2);
  CHECK(p.coefficient({0, 0}) == 1);
  CHECK(p.terms().size() == 2);
  CHECK(parse_poly("[x,y]") == X * Y - Y * X);
  CHECK(parse_poly("0").is_zero());
  CHECK(parse_poly("x1 x2 x3") == X * Y * Z);
  CHECK(parse_poly("x4").variables() == std::set<Variable>{3});
  CHECK(parse_poly("-(x + y)^2") == -((X + Y) * (X + Y)));
  CHECK(parse_poly("3*x*y - 3 x y").is_zero());
  CHECK(parse_poly("x(1 - x)y") == X * Y - X * X * Y);
}

TEST_CASE("parse errors carry positions") {
  auto position_of = [](const char* text) -> std::size_t {
    try {
      parse_poly(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return 999;
  };
  CHECK(position_of("2x + ") == 5);
  CHECK(position_of("x $ y") == 2);
  CHECK(position_of("[x, y") == 5);
  CHECK(position_of("x0") == 1);
  CHECK_THROWS_AS(parse_poly("x + 1"), ParseError);
  CHECK_THROWS_AS(parse_poly("x^0"), ParseError);
}

TEST_CASE("render") {
  CHECK(render(parse_poly("x^2 + 2x")) == "2x + x^2");
  CHECK(render(parse_poly("[x,y]")) == "xy - yx");
  CHECK(render(NcPoly{}) == "0");
  CHECK(render(-X) == "-x");
  CHECK(render(parse_poly("x1 x4^2 x1")) == "xx4^2x");
  CHECK(variable_name(5) == "x6");
}

TEST_CASE("add, mul, scale") {
  CHECK(mul(X, Y) != mul(Y, X));
  const NcPoly p = parse_poly("x^2 + 3xy - y");
  CHECK(add(p, scale(-1, p)).is_zero());
  CHECK(mul(X + Y, X) == X * X + Y * X);
  CHECK(scale(0, p).is_zero());
  CHECK(commutator(X, Y) == parse_poly("[x,y]"));
  CHECK(power(X + Y, 2) == parse_poly("x^2 + xy + yx + y^2"));
  CHECK_THROWS_AS(scale(std::int64_t{1} << 62, scale(4, X)), Error);
}

TEST_CASE("substitute") {
  const NcPoly f = parse_poly("x + x^2");
  const NcPoly f2 = substitute(f, {{0, scale(2, X)}});
  CHECK(add(scale(4, f), scale(-1, f2)) == scale(2, X));
  CHECK(substitute(X * Y, {{0, X}, {1, X}}) == X * X);
  CHECK(substitute(parse_poly("xy + y + x^2"), {{0, NcPoly{}}, {1, Y}}) == Y);
  CHECK_THROWS_AS(substitute(X * Y, {{0, X}}), UnboundVariable);
}

TEST_CASE("lower_degree and essentially_depends") {
  CHECK(lower_degree(parse_poly("xy + x^2y + x^3")) == 2);
  CHECK(lower_degree(parse_poly("4x")) == 1);
  const NcPoly f = parse_poly("xy + x^2y + xyx");
  CHECK(lower_degree(f - X * Y) > 2);
  CHECK_THROWS_AS(lower_degree(NcPoly{}), ZeroPolynomial);
  CHECK(essentially_depends(X * Y));
  CHECK_FALSE(essentially_depends(parse_poly("x + xy")));
  CHECK(essentially_depends(X * Y * Z));
}

TEST_CASE("evaluate") {
  const FiniteRing n04 = n0(2, 2);
  for (Element a = 0; a < 4; ++a)
    for (Element b = 0; b < 4; ++b) CHECK(evaluate(X * Y, n04, {{0, a}, {1, b}}) == 0);
  CHECK(evaluate(parse_poly("2x + x^2"), np2(2), {{0, 1}}) == 0);
  CHECK(evaluate(X, zn(5), {{0, 0}}) == 0);
  CHECK(evaluate(parse_poly("-x"), zn(5), {{0, 1}}) == 4);
  CHECK_THROWS_AS(evaluate(X * Y, zn(3), {{0, 1}}), UnboundVariable);
}

TEST_CASE("satisfies_identity") {
  CHECK(satisfies_identity(zn(2), parse_poly("xy - x^2y")).holds);
  for (const char* f : {"xyz", "4x", "2xy", "2x + x^2"}) CHECK(satisfies_identity(np2(2), parse_poly(f)).holds);
  const auto res = satisfies_identity(zn(4), parse_poly("2x"));
  CHECK_FALSE(res.holds);
  REQUIRE(res.counterexample.has_value());
  CHECK(*res.counterexample == Assignment{{0, 1}});
  CHECK(render_assignment(*res.counterexample) == "x=1");
  CHECK(satisfies_identity(zn(3), NcPoly{}).holds);
}

TEST_CASE("budget and sampling") {
  Limits small;
  small.identity_budget = 100;
  const NcPoly f = parse_poly("xyz");
  CHECK_THROWS_AS(satisfies_identity(zn(5), f, small), BudgetExceeded);
  IdentityOptions sampling;
  sampling.allow_sampling = true;
  const auto res = satisfies_identity(n0(5), f, small, sampling);
  CHECK(res.sampled);
  CHECK(res.holds);
  CHECK(res.evaluations == 100);
  const auto bad = satisfies_identity(zn(5), f, small, sampling);
  CHECK_FALSE(bad.holds);
}

TEST_CASE("least counterexample does not depend on the worker count") {
  const NcPoly f = parse_poly("xyz - zyx");
  const FiniteRing r = matrix_ring(zn(2), 2);
  Limits one, many;
  one.workers = 1;
  many.workers = 4;
  const auto a = satisfies_identity(r, f, one);
  const auto b = satisfies_identity(r, f, many);
  REQUIRE_FALSE(a.holds);
  CHECK(a.counterexample == b.counterexample);
  CHECK(a.counterexample == first_failure(r, f));
}

TEST_CASE("property: Zp and N0(p) identities") {
  for (long long p : {2LL, 3LL, 5LL}) {
    const auto pu = static_cast<std::size_t>(p);
    const FiniteRing zp = zn(pu);
    CHECK(satisfies_identity(zp, power(X, pu) - X).holds);
    CHECK(satisfies_identity(zp, X * Y - power(X, pu) * Y).holds);
    CHECK(satisfies_identity(n0(p), X * Y).holds);
    CHECK(satisfies_identity(n0(p), scale(p, X)).holds);
  }
}

TEST_CASE("property: evaluate is a homomorphism and commutes with substitution") {
  const auto atlas = enumerate_up_to(6);
  std::mt19937 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const auto& r = atlas[static_cast<std::size_t>(trial) % atlas.size()].ring;
    const NcPoly p = random_poly(rng, 2), q = random_poly(rng, 2);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(r.order() - 1));
    const Assignment a{{0, pick(rng)}, {1, pick(rng)}};
    CHECK(evaluate(add(p, q), r, a) == r.add(evaluate(p, r, a), evaluate(q, r, a)));
    CHECK(evaluate(mul(p, q), r, a) == r.mul(evaluate(p, r, a), evaluate(q, r, a)));
    // p(g0, g1) at a equals p at (g0(a), g1(a)).
    const NcPoly g0 = random_poly(rng, 2), g1 = random_poly(rng, 2);
    const NcPoly composed = substitute(p, {{0, g0}, {1, g1}});
    const Assignment inner{{0, evaluate(g0, r, a)}, {1, evaluate(g1, r, a)}};
    CHECK(evaluate(composed, r, a) == evaluate(p, r, inner));
  }
}

TEST_CASE("property: parse(render(p)) == p") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    const NcPoly p = random_poly(rng, 5);
    CHECK(parse_poly(render(p)) == p);
  }
}

TEST_CASE("collapse of kx + x^2 phi(x) to a multiple of x") {
  auto collapse = [](NcPoly f) {
    const std::map<Variable, NcPoly> doubled{{0, scale(2, X)}};
    while (f.degree() > 1) f = add(scale(std::int64_t{1} << f.degree(), f), scale(-1, substitute(f, doubled)));
    return f;
  };
  CHECK(collapse(parse_poly("x + x^2")) == scale(2, X));
  // (2^3 - 2)(2^2 - 2) k with k = 3.
  CHECK(collapse(parse_poly("3x + x^2 + x^3")) == scale(36, X));
  // (2^4 - 2)(2^3 - 2)(2^2 - 2) k with k = 1.
  CHECK(collapse(parse_poly("x - 5x^2 + 2x^3 + x^4")) == scale(14 * 6 * 2, X));
}

TEST_CASE("parse_suite") {
  const auto suite = parse_suite("# identities of N4\nxyz\n\n4x  # additive order\n2xy\n2x + x^2\n");
  REQUIRE(suite.size() == 4);
  CHECK(suite[3] == parse_poly("2x + x^2"));
  try {
    parse_suite("x\ny +\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}
