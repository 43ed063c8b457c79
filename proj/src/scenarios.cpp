#include "zdring/scenarios.hpp"

#include <algorithm>
#include <filesystem>
#include <random>
#include <sstream>

#include "zdring/atlas.hpp"
#include "zdring/errors.hpp"
#include "zdring/families.hpp"
#include "zdring/graph.hpp"
#include "zdring/identity.hpp"
#include "zdring/isomorphism.hpp"
#include "zdring/ncpoly.hpp"
#include "zdring/structure.hpp"

namespace zdring {

namespace {

class Session {
 public:
  explicit Session(std::string name) { report_.name = std::move(name); }

  void use(std::initializer_list<const char*> ops) {
    for (const char* op : ops) report_.operations_used.insert(op);
  }
  void note(std::string line) { report_.lines.push_back(std::move(line)); }
  bool check(bool ok, const std::string& what) {
    report_.lines.push_back((ok ? "  ok   " : "  FAIL ") + what);
    if (!ok) report_.passed = false;
    return ok;
  }
  ScenarioReport finish() { return std::move(report_); }

 private:
  ScenarioReport report_;
};

std::string type_text(const AdditiveType& type) {
  std::string out = "[";
  for (std::size_t i = 0; i < type.size(); ++i) out += (i ? "," : "") + std::to_string(type[i]);
  return out + "]";
}

std::string graph_text(const SimpleGraph& g) {
  return std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) + " edges";
}

ScenarioReport cor1(const Limits& limits) {
  Session s("cor1");
  s.note("rings of order 2..9 whose zero-divisor graph is K2");
  std::vector<AtlasEntry> k2;
  for (std::size_t n = 2; n <= 9; ++n) {
    const auto types = abelian_group_types(n, limits);
    const auto entries = enumerate_rings(n, limits);
    std::string tl;
    for (const auto& t : types) tl += " " + type_text(t);
    s.note("order " + std::to_string(n) + ": " + std::to_string(entries.size()) + " classes, additive types" + tl);
    for (const auto& e : entries)
      if (is_complete(zero_divisor_graph(e.ring)) == std::optional<std::size_t>(2)) k2.push_back(e);
  }
  s.use({"abelian_group_types", "enumerate_rings", "zero_divisor_graph", "is_complete"});

  const std::vector<FiniteRing> expected{n0(3, 1, limits), zn(9, limits), zpx_mod_x2(3, limits),
                                         direct_sum(zn(2, limits), zn(2, limits), limits)};
  s.use({"n0", "zn", "zpx_mod_x2", "direct_sum", "ring_canonical_certificate", "ring_isomorphic"});
  s.check(k2.size() == expected.size(), "exactly " + std::to_string(expected.size()) + " classes found, got " +
                                            std::to_string(k2.size()));
  const SimpleGraph target = complete_graph(2);
  for (const auto& want : expected) {
    const auto cert = ring_canonical_certificate(want, limits);
    auto it = std::find_if(k2.begin(), k2.end(), [&](const AtlasEntry& e) { return e.certificate == cert; });
    if (!s.check(it != k2.end(), want.label() + " is among them")) continue;
    s.check(ring_isomorphic(it->ring, want, limits).has_value(),
            want.label() + " matches atlas entry " + it->ring.label() + " by explicit isomorphism");
    s.check(graph_isomorphic(zero_divisor_graph(it->ring), target, limits).has_value(),
            "graph of " + want.label() + " is isomorphic to K2");
  }
  s.use({"graph_isomorphic", "canonical_form", "rings_with_graph"});
  const auto query = rings_with_graph(9, target, limits);
  std::set<Certificate> a, b;
  for (const auto& e : k2) a.insert(e.certificate);
  for (const auto& e : query) b.insert(e.certificate);
  s.check(a == b, "graph-certificate query agrees with the per-order scan");
  for (const auto& e : k2) s.check(e.graph_certificate == canonical_form(target, limits), "canonical form of " + e.ring.label() + " equals that of K2");

  s.use({"save_atlas", "load_atlas"});
  const auto path = std::filesystem::temp_directory_path() /
                    ("zdring-cor1-" + std::to_string(std::random_device{}()) + ".atlas");
  save_atlas(k2, path);
  const auto loaded = load_atlas(path, limits);
  std::error_code ec;
  std::filesystem::remove(path, ec);
  bool same = loaded.size() == k2.size();
  for (std::size_t i = 0; same && i < k2.size(); ++i) same = loaded[i].certificate == k2[i].certificate;
  s.check(same, "atlas file round trip keeps the four certificates");

  // Context for two of the four: Z9 is local with radical 3Z9, and the
  // field GF(9) of the same order has no zero divisors at all.
  s.use({"jacobson_radical", "quotient", "is_field", "is_local", "units", "gf", "zero_divisors"});
  const FiniteRing z9 = zn(9, limits);
  const Ideal j = jacobson_radical(z9, limits);
  s.check(j.size() == 3 && is_local(z9, limits) && is_field(quotient(z9, j)), "Z9 is local and Z9/J(Z9) is a field");
  s.check(units(z9).size() == 6, "Z9 has 6 units");
  const FiniteRing f9 = gf(3, 2, limits);
  s.check(zero_divisors(f9).empty() && is_complete(zero_divisor_graph(f9)) == std::optional<std::size_t>(0),
          "GF(9) has an empty zero-divisor graph");
  for (const auto& e : k2) s.note("K2: " + e.ring.label());
  return s.finish();
}

ScenarioReport prop5(long long p, const Limits& limits) {
  Session s("prop5");
  if (!is_prime(p)) throw NotPrime(p);
  s.note("p = " + std::to_string(p));
  const std::vector<FiniteRing> rings{np2(p, limits), npp(p, limits), ap(p, limits), ap0(p, limits),
                                      direct_sum(n0(p, 1, limits), zn(static_cast<std::size_t>(p), limits), limits)};
  s.use({"np2", "npp", "ap", "ap0", "direct_sum", "n0", "zn", "zero_divisor_graph", "graph_isomorphic",
         "canonical_form", "ring_isomorphic", "characteristic"});
  std::vector<SimpleGraph> graphs;
  for (const auto& r : rings) {
    graphs.push_back(zero_divisor_graph(r));
    s.note("graph of " + r.label() + ": " + graph_text(graphs.back()) + ", characteristic " +
           std::to_string(characteristic(r)));
  }
  std::size_t passed = 0;
  for (std::size_t i = 0; i < rings.size(); ++i)
    for (std::size_t j = i + 1; j < rings.size(); ++j) {
      const bool iso = graph_isomorphic(graphs[i], graphs[j], limits).has_value() &&
                       canonical_form(graphs[i], limits) == canonical_form(graphs[j], limits);
      const bool distinct = !ring_isomorphic(rings[i], rings[j], limits).has_value();
      if (s.check(iso && distinct, rings[i].label() + " vs " + rings[j].label() +
                                       ": graphs isomorphic, rings not isomorphic"))
        ++passed;
    }
  s.check(passed == 10, std::to_string(passed) + " of 10 pairwise graph checks passed");

  const auto up = static_cast<std::size_t>(p);
  if (up * up * up * up <= limits.order_cap) {
    s.use({"matrix_ring", "subring_generated"});
    const FiniteRing m2 = matrix_ring(zn(up, limits), 2, limits);
    // Row-major entries, first entry least significant: E11 = 1, E12 = p, E21 = p^2.
    const std::vector<Element> upper{1, static_cast<Element>(up)};
    const std::vector<Element> lower{1, static_cast<Element>(up * up)};
    s.check(ring_isomorphic(subring_generated(m2, upper).ring, rings[2], limits).has_value(),
            "A(p) is the subring of M2(Zp) generated by E11, E12");
    s.check(ring_isomorphic(subring_generated(m2, lower).ring, rings[3], limits).has_value(),
            "A0(p) is the subring of M2(Zp) generated by E11, E21");
  } else {
    s.note("matrix model of A(p) skipped: M2(Zp) has order above the cap");
  }

  s.use({"export_dot"});
  const SimpleGraph back = parse_dot(export_dot(graphs[0]));
  s.check(graph_isomorphic(back, graphs[0], limits).has_value(), "DOT export of the first graph reads back");
  return s.finish();
}

std::vector<NcPoly> parse_all(std::initializer_list<const char*> texts) {
  std::vector<NcPoly> out;
  for (const char* t : texts) out.push_back(parse_poly(t));
  return out;
}

ScenarioReport prop4_counterexample(const Limits& limits) {
  Session s("prop4-counterexample");
  const FiniteRing r = n0(3, 1, limits);
  const FiniteRing sum = direct_sum(zn(2, limits), zn(2, limits), limits);
  const FiniteRing t = make_ring(sum.add_rows(), sum.mul_rows(), sum.label(), limits);
  s.use({"n0", "zn", "direct_sum", "make_ring", "zero_divisor_graph", "is_complete", "graph_isomorphic",
         "ring_isomorphic", "ring_canonical_certificate"});
  const SimpleGraph gr = zero_divisor_graph(r), gt = zero_divisor_graph(t);
  s.check(is_complete(gr) == std::optional<std::size_t>(2) && is_complete(gt) == std::optional<std::size_t>(2),
          "both graphs are K2");
  s.check(graph_isomorphic(gr, gt, limits).has_value(), "graph of N0(3) is isomorphic to graph of Z2+Z2");
  s.check(!ring_isomorphic(r, t, limits).has_value(), "N0(3) and Z2+Z2 are not isomorphic");
  s.check(ring_canonical_certificate(r, limits) != ring_canonical_certificate(t, limits),
          "their ring certificates differ");

  s.use({"enumerate_rings", "graph_determinacy_report", "parse_poly", "render", "satisfies_identity"});
  const auto atlas = enumerate_up_to(9, limits);
  // Identities of var N0(3) joined with var Z2: 6x = 0 and xy = x^2 y = x y^2.
  const auto mixed = parse_all({"6x", "xy - x^2y", "xy - xy^2"});
  std::string names;
  for (const auto& f : mixed) names += (names.empty() ? "" : ", ") + render(f);
  const auto collisions = graph_determinacy_report(atlas, mixed, limits);
  for (const auto& [i, j] : collisions)
    s.note("collision under {" + names + "}: " + atlas[i].ring.label() + " / " + atlas[j].ring.label());
  const bool expected = collisions.size() == 1 &&
                        std::set<std::string>{atlas[collisions[0].first].ring.label(),
                                              atlas[collisions[0].second].ring.label()} ==
                            std::set<std::string>{"N0(3)", "Z2+Z2"};
  s.check(expected, "the only collision of order <= 9 in that variety is N0(3) / Z2+Z2");
  const auto pure = parse_all({"2x", "xy"});
  s.check(graph_determinacy_report(atlas, pure, limits).empty(), "no collisions among rings satisfying 2x, xy");

  // xy - x^p y vanishes on Zp and on every N0(q).
  s.use({"add", "mul", "scale"});
  const NcPoly x = NcPoly::variable(0), y = NcPoly::variable(1);
  for (long long p : {2LL, 3LL}) {
    const NcPoly f = add(mul(x, y), scale(-1, mul(power(x, static_cast<std::size_t>(p)), y)));
    bool all = satisfies_identity(zn(static_cast<std::size_t>(p), limits), f, limits).holds;
    for (long long q : {2LL, 3LL, 5LL}) all = all && satisfies_identity(n0(q, 1, limits), f, limits).holds;
    s.check(all, render(f) + " holds on Z" + std::to_string(p) + " and on N0(2), N0(3), N0(5)");
  }
  return s.finish();
}

ScenarioReport tn4_identities(const Limits& limits) {
  Session s("tn4-identities");
  s.use({"np2", "n0", "parse_poly", "render", "satisfies_identity", "evaluate", "lower_degree",
         "essentially_depends"});
  struct Case {
    FiniteRing ring;
    std::string suite;
    std::string control;
  };
  const std::vector<Case> cases{{np2(2, limits), "xyz\n4x\n2xy\n2x + x^2\n", "xy"},
                                {n0(2, 2, limits), "4x\nxy\n", "2x"}};
  for (const auto& c : cases) {
    for (const auto& f : parse_suite(c.suite)) {
      const auto res = satisfies_identity(c.ring, f, limits);
      s.check(res.holds, c.ring.label() + " satisfies " + render(f) + " (lower degree " +
                             std::to_string(lower_degree(f)) + ", " + std::to_string(res.evaluations) +
                             " assignments)");
    }
    const NcPoly ctl = parse_poly(c.control);
    const auto res = satisfies_identity(c.ring, ctl, limits);
    const bool witnessed = !res.holds && res.counterexample && evaluate(ctl, c.ring, *res.counterexample) != 0;
    s.check(witnessed, c.ring.label() + " does not satisfy " + render(ctl) +
                           (res.counterexample ? " (counterexample " + render_assignment(*res.counterexample) + ")"
                                               : std::string()));
  }
  s.check(essentially_depends(parse_poly("xyz")) && !essentially_depends(parse_poly("x + xy")),
          "xyz depends essentially on x, y, z; x + xy does not");

  // 2^s f(x) - f(2x) removes the top-degree term; repeating until the
  // result is linear leaves (2^s - 2)...(2^2 - 2) k x.
  s.use({"substitute", "scale", "add"});
  auto collapse = [&](NcPoly f) {
    const std::map<Variable, NcPoly> doubled{{0, scale(2, NcPoly::variable(0))}};
    while (f.degree() > 1) {
      const std::int64_t two_s = std::int64_t{1} << f.degree();
      f = add(scale(two_s, f), scale(-1, substitute(f, doubled)));
    }
    return f;
  };
  const NcPoly g = collapse(parse_poly("x + x^2"));
  s.check(render(g) == "2x", "4f(x) - f(2x) = " + render(g) + " for f = x + x^2");
  const NcPoly h = collapse(parse_poly("3x + x^2 + x^3"));
  s.check(render(h) == "36x", "collapse of 3x + x^2 + x^3 gives " + render(h) + " = (2^3-2)(2^2-2)3x");
  return s.finish();
}

ScenarioReport theorem3_shape(const Limits& limits) {
  Session s("theorem3-shape");
  const auto filters = parse_all({"2x", "x^2", "[x,y]"});
  s.use({"enumerate_rings", "is_subdirectly_irreducible", "satisfies_identity", "ring_isomorphic", "zn",
         "identity_element", "nilpotency_index", "is_commutative", "decompose", "ideals", "jacobson_radical",
         "units", "idempotents", "nilpotent_elements", "zero_divisors", "is_field", "is_local", "parse_poly"});
  std::size_t si_count = 0, in_shape = 0;
  const FiniteRing z2 = zn(2, limits);
  for (std::size_t n : {2U, 4U, 8U}) {
    for (const auto& e : enumerate_rings(n, limits)) {
      const FiniteRing& r = e.ring;
      if (!is_subdirectly_irreducible(r, limits)) continue;
      ++si_count;
      s.check(decompose(r, limits).size() == 1, r.label() + " is indecomposable");
      const auto nil = nilpotent_elements(r);
      const auto zd = zero_divisors(r);
      const auto idem = idempotents(r);
      if (identity_element(r)) {
        const auto u = units(r);
        bool disjoint = std::none_of(u.begin(), u.end(), [&](Element x) {
          return std::binary_search(zd.begin(), zd.end(), x);
        });
        s.check(disjoint && u.size() + zd.size() + 1 == r.order(),
                r.label() + ": units and zero divisors partition the nonzero elements");
      }
      if (ring_isomorphic(r, z2, limits)) {
        s.check(is_field(r), r.label() + " is Z2");
        ++in_shape;
        continue;
      }
      bool sat = true;
      for (const auto& f : filters) sat = sat && satisfies_identity(r, f, limits).holds;
      const auto index = nilpotency_index(r);
      std::ostringstream line;
      line << r.label() << ": " << ideals(r, limits).size() << " ideals, |J| = " << jacobson_radical(r, limits).size()
           << ", " << nil.size() << " nilpotent, " << idem.size() << " idempotent";
      if (identity_element(r)) line << ", " << (is_local(r, limits) ? "local" : "not local");
      if (sat) {
        ++in_shape;
        s.check(index.has_value() && is_commutative(r) && idem.size() == 1,
                line.str() + "; satisfies 2x, x^2, [x,y] and is nilpotent of index " +
                    (index ? std::to_string(*index) : std::string("none")));
      } else {
        s.note("  --   " + line.str() + "; violates 2x, x^2 or [x,y], excluded from the conclusion");
      }
    }
  }
  s.check(si_count > 0 && in_shape > 1, std::to_string(si_count) + " subdirectly irreducible rings of order 2, 4, 8; " +
                                            std::to_string(in_shape) + " have the conclusion's shape");
  return s.finish();
}

}  // namespace

std::vector<std::string> scenario_names() {
  return {"cor1", "prop5", "prop4-counterexample", "tn4-identities", "theorem3-shape"};
}

ScenarioReport run_scenario(const std::string& name, const ScenarioParams& params, const Limits& limits) {
  if (name == "cor1") return cor1(limits);
  if (name == "prop5") return prop5(params.p, limits);
  if (name == "prop4-counterexample") return prop4_counterexample(limits);
  if (name == "tn4-identities") return tn4_identities(limits);
  if (name == "theorem3-shape") return theorem3_shape(limits);
  throw Error("unknown scenario '" + name + "'");
}

std::vector<std::string> public_operations() {
  return {
      // rings
      "make_ring", "zn", "gf", "n0", "np2", "npp", "ap", "ap0", "zpx_mod_x2", "direct_sum", "matrix_ring",
      "quotient", "subring_generated", "characteristic",
      // structure
      "zero_divisors", "units", "idempotents", "nilpotent_elements", "identity_element", "ideals",
      "jacobson_radical", "nilpotency_index", "is_subdirectly_irreducible", "is_local", "is_field", "is_commutative",
      "decompose",
      "ring_isomorphic", "ring_canonical_certificate",
      // graphs
      "zero_divisor_graph", "is_complete", "canonical_form", "graph_isomorphic", "export_dot",
      // polynomials
      "parse_poly", "render", "add", "mul", "scale", "substitute", "lower_degree", "essentially_depends",
      "evaluate", "satisfies_identity",
      // atlas
      "abelian_group_types", "enumerate_rings", "rings_with_graph", "graph_determinacy_report", "save_atlas",
      "load_atlas"};
}

}  // namespace zdring
