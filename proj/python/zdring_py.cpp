#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zdring/atlas.hpp"
#include "zdring/errors.hpp"
#include "zdring/families.hpp"
#include "zdring/graph.hpp"
#include "zdring/identity.hpp"
#include "zdring/isomorphism.hpp"
#include "zdring/ncpoly.hpp"
#include "zdring/ringtab.hpp"
#include "zdring/scenarios.hpp"
#include "zdring/structure.hpp"

namespace py = pybind11;
using namespace zdring;

namespace {

std::vector<Element> members(const Ideal& i) { return i.members(); }

py::dict report_dict(const StructureReport& r) {
  py::dict d;
  d["order"] = r.order;
  d["label"] = r.label;
  d["identity"] = r.identity;
  d["is_commutative"] = r.is_commutative;
  d["is_field"] = r.is_field;
  d["is_local"] = r.is_local;
  d["nilpotency_index"] = r.nilpotency_index;
  d["is_subdirectly_irreducible"] = r.is_subdirectly_irreducible;
  d["is_decomposable"] = r.is_decomposable;
  d["characteristic"] = r.characteristic;
  d["zero_divisor_count"] = r.zero_divisor_count;
  d["jacobson_radical"] = members(r.jacobson_radical);
  return d;
}

}  // namespace

PYBIND11_MODULE(zdring, m) {
  m.doc() = "Finite rings, zero-divisor graphs and polynomial identities";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<AxiomViolation>(m, "AxiomViolation", error);
  py::register_exception<NotPrime>(m, "NotPrime", error);
  py::register_exception<OrderCapExceeded>(m, "OrderCapExceeded", error);
  py::register_exception<GraphCapExceeded>(m, "GraphCapExceeded", error);
  py::register_exception<NotAnIdeal>(m, "NotAnIdeal", error);
  py::register_exception<NoIdentity>(m, "NoIdentity", error);
  py::register_exception<ParseError>(m, "ParseError", error);
  py::register_exception<UnboundVariable>(m, "UnboundVariable", error);
  py::register_exception<ZeroPolynomial>(m, "ZeroPolynomial", error);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", error);
  py::register_exception<FormatError>(m, "FormatError", error);
  py::register_exception<IoError>(m, "IoError", error);

  py::class_<Limits>(m, "Limits")
      .def(py::init<>())
      .def_readwrite("order_cap", &Limits::order_cap)
      .def_readwrite("structural_cap", &Limits::structural_cap)
      .def_readwrite("graph_cap", &Limits::graph_cap)
      .def_readwrite("enumeration_cap", &Limits::enumeration_cap)
      .def_readwrite("identity_budget", &Limits::identity_budget)
      .def_readwrite("workers", &Limits::workers);

  py::class_<FiniteRing>(m, "FiniteRing")
      .def_property_readonly("order", &FiniteRing::order)
      .def_property_readonly("label", &FiniteRing::label)
      .def("add", &FiniteRing::add)
      .def("mul", &FiniteRing::mul)
      .def("neg", &FiniteRing::neg)
      .def("add_rows", &FiniteRing::add_rows)
      .def("mul_rows", &FiniteRing::mul_rows)
      .def("__eq__", &FiniteRing::same_tables)
      .def("__repr__", [](const FiniteRing& r) {
        return "<FiniteRing " + r.label() + " of order " + std::to_string(r.order()) + ">";
      });

  m.def("make_ring", [](const Table& add, const Table& mul, const std::string& label, const Limits& limits) {
    return make_ring(add, mul, label, limits);
  }, py::arg("add"), py::arg("mul"), py::arg("label") = "", py::arg("limits") = Limits{});
  m.def("zero_ring", &zero_ring);
  m.def("zn", &zn, py::arg("n"), py::arg("limits") = Limits{});
  m.def("gf", &gf, py::arg("p"), py::arg("k") = 1, py::arg("limits") = Limits{});
  m.def("n0", &n0, py::arg("p"), py::arg("n") = 1, py::arg("limits") = Limits{});
  m.def("np2", &np2, py::arg("p"), py::arg("limits") = Limits{});
  m.def("npp", &npp, py::arg("p"), py::arg("limits") = Limits{});
  m.def("ap", &ap, py::arg("p"), py::arg("limits") = Limits{});
  m.def("ap0", &ap0, py::arg("p"), py::arg("limits") = Limits{});
  m.def("zpx_mod_x2", &zpx_mod_x2, py::arg("p"), py::arg("limits") = Limits{});
  m.def("direct_sum", &direct_sum, py::arg("r"), py::arg("s"), py::arg("limits") = Limits{});
  m.def("matrix_ring", &matrix_ring, py::arg("base"), py::arg("k"), py::arg("limits") = Limits{});
  m.def("quotient", [](const FiniteRing& r, const std::vector<Element>& ideal) {
    return quotient(r, make_ideal(r, ideal));
  });
  m.def("characteristic", &characteristic);
  m.def("read_ringtab", [](const std::string& text) { return read_ringtab(text); });
  m.def("write_ringtab", &write_ringtab);

  m.def("zero_divisors", &zero_divisors);
  m.def("units", &units);
  m.def("idempotents", &idempotents);
  m.def("nilpotent_elements", &nilpotent_elements);
  m.def("identity_element", &identity_element);
  m.def("is_commutative", &is_commutative);
  m.def("is_field", &is_field);
  m.def("is_local", [](const FiniteRing& r) { return is_local(r); });
  m.def("nilpotency_index", &nilpotency_index);
  m.def("is_subdirectly_irreducible", [](const FiniteRing& r) { return is_subdirectly_irreducible(r); });
  m.def("ideals", [](const FiniteRing& r) {
    std::vector<std::vector<Element>> out;
    for (const auto& i : ideals(r)) out.push_back(members(i));
    return out;
  });
  m.def("jacobson_radical", [](const FiniteRing& r) { return members(jacobson_radical(r)); });
  m.def("structure_report", [](const FiniteRing& r) { return report_dict(structure_report(r)); });
  m.def("ring_isomorphic", [](const FiniteRing& r, const FiniteRing& s) -> std::optional<std::vector<Element>> {
    auto map = ring_isomorphic(r, s);
    if (!map) return std::nullopt;
    return map->image;
  });
  m.def("ring_certificate", [](const FiniteRing& r) { return to_hex(ring_canonical_certificate(r)); });

  py::class_<SimpleGraph>(m, "SimpleGraph")
      .def(py::init<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>>(), py::arg("vertex_count"),
           py::arg("edges"))
      .def_property_readonly("vertex_count", &SimpleGraph::vertex_count)
      .def_property_readonly("edges", &SimpleGraph::edges)
      .def_property_readonly("elements", &SimpleGraph::elements);
  m.def("zero_divisor_graph", &zero_divisor_graph);
  m.def("complete_graph", &complete_graph);
  m.def("is_complete", &is_complete);
  m.def("graph_isomorphic", [](const SimpleGraph& g, const SimpleGraph& h) { return graph_isomorphic(g, h); });
  m.def("export_dot", &export_dot);
  m.def("parse_dot", &parse_dot);

  py::class_<NcPoly>(m, "NcPoly")
      .def("__str__", [](const NcPoly& p) { return render(p); })
      .def("__repr__", [](const NcPoly& p) { return "NcPoly('" + render(p) + "')"; })
      .def("__eq__", [](const NcPoly& a, const NcPoly& b) { return a == b; })
      .def("__add__", [](const NcPoly& a, const NcPoly& b) { return add(a, b); })
      .def("__sub__", [](const NcPoly& a, const NcPoly& b) { return a - b; })
      .def("__mul__", [](const NcPoly& a, const NcPoly& b) { return mul(a, b); })
      .def("__rmul__", [](const NcPoly& p, std::int64_t c) { return scale(c, p); })
      .def_property_readonly("degree", &NcPoly::degree)
      .def_property_readonly("is_zero", &NcPoly::is_zero);
  m.def("parse_poly", [](const std::string& text) { return parse_poly(text); });
  m.def("substitute", &substitute);
  m.def("lower_degree", &lower_degree);
  m.def("essentially_depends", &essentially_depends);
  m.def("evaluate", &evaluate);
  m.def("satisfies_identity", [](const FiniteRing& r, const NcPoly& p) -> py::tuple {
    const auto res = satisfies_identity(r, p);
    if (res.holds) return py::make_tuple(true, py::none());
    return py::make_tuple(false, render_assignment(*res.counterexample));
  });

  m.def("enumerate_rings", [](std::size_t n, const Limits& limits) {
    std::vector<FiniteRing> out;
    for (const auto& e : enumerate_rings(n, limits)) out.push_back(e.ring);
    return out;
  }, py::arg("n"), py::arg("limits") = Limits{});
  m.def("catalog_label", [](const FiniteRing& r) { return catalog_label(ring_canonical_certificate(r)); });
  m.def("rings_with_graph", [](std::size_t n_max, const SimpleGraph& g) {
    std::vector<FiniteRing> out;
    for (const auto& e : rings_with_graph(n_max, g)) out.push_back(e.ring);
    return out;
  });

  m.def("scenario_names", &scenario_names);
  m.def("run_scenario", [](const std::string& name, long long p) {
    ScenarioParams params;
    params.p = p;
    const auto report = run_scenario(name, params);
    return py::make_tuple(report.passed, report.lines);
  }, py::arg("name"), py::arg("p") = 2);
}
