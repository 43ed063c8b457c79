// zdring: batch front end for building rings, zero-divisor graphs, identity
// checks, the small-ring atlas and the verification scenarios.
//
// Exit codes: 0 success, 1 negative answer (not isomorphic, identity or
// scenario failure), 2 invalid input, 3 size cap or budget exceeded.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zdring/atlas.hpp"
#include "zdring/errors.hpp"
#include "zdring/families.hpp"
#include "zdring/graph.hpp"
#include "zdring/identity.hpp"
#include "zdring/ncpoly.hpp"
#include "zdring/ringtab.hpp"
#include "zdring/scenarios.hpp"
#include "zdring/structure.hpp"

namespace fs = std::filesystem;
using namespace zdring;

namespace {

constexpr const char* kCapVariable = "ZDRING_ENUM_CAP";

struct Context {
  Limits limits;
  bool cap_overridden = false;

  void echo_cap(std::ostream& out) const {
    if (cap_overridden)
      out << "# enumeration cap " << limits.effective_enumeration_cap() << " (from " << kCapVariable << ")\n";
  }
};

Context make_context() {
  Context ctx;
  if (const char* v = std::getenv(kCapVariable); v != nullptr && *v != '\0') {
    char* end = nullptr;
    const unsigned long cap = std::strtoul(v, &end, 10);
    if (end == v || *end != '\0' || cap == 0) throw Error(std::string(kCapVariable) + " must be a positive integer");
    ctx.limits.enumeration_cap = cap;
    ctx.cap_overridden = true;
  }
  return ctx;
}

long long to_int(const std::string& text, const char* what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) throw Error(std::string(what) + " must be an integer, got '" + text + "'");
  return v;
}

std::size_t to_size(const std::string& text, const char* what) {
  const long long v = to_int(text, what);
  if (v < 1) throw Error(std::string(what) + " must be positive");
  return static_cast<std::size_t>(v);
}

void expect_params(const std::string& family, const std::vector<std::string>& params, std::size_t lo,
                   std::size_t hi) {
  if (params.size() < lo || params.size() > hi) {
    std::ostringstream msg;
    msg << "family '" << family << "' takes " << lo;
    if (hi != lo) msg << " to " << hi;
    msg << " parameter(s)";
    throw Error(msg.str());
  }
}

FiniteRing build_family(const std::string& family, const std::vector<std::string>& params, const Limits& limits) {
  auto prime = [&](std::size_t i) { return to_int(params[i], "p"); };
  if (family == "zn") {
    expect_params(family, params, 1, 1);
    return zn(to_size(params[0], "n"), limits);
  }
  if (family == "gf") {
    expect_params(family, params, 1, 2);
    return gf(prime(0), params.size() > 1 ? to_size(params[1], "k") : 1, limits);
  }
  if (family == "n0") {
    expect_params(family, params, 1, 2);
    return n0(prime(0), params.size() > 1 ? to_size(params[1], "n") : 1, limits);
  }
  if (family == "np2" || family == "npp" || family == "ap" || family == "ap0" || family == "zpx2") {
    expect_params(family, params, 1, 1);
    const long long p = prime(0);
    if (family == "np2") return np2(p, limits);
    if (family == "npp") return npp(p, limits);
    if (family == "ap") return ap(p, limits);
    if (family == "ap0") return ap0(p, limits);
    return zpx_mod_x2(p, limits);
  }
  if (family == "sum") {
    expect_params(family, params, 2, 2);
    return direct_sum(load_ringtab(params[0], limits), load_ringtab(params[1], limits), limits);
  }
  if (family == "matrix") {
    expect_params(family, params, 2, 2);
    return matrix_ring(load_ringtab(params[0], limits), to_size(params[1], "k"), limits);
  }
  if (family == "quotient") {
    expect_params(family, params, 2, 2);
    const FiniteRing ring = load_ringtab(params[0], limits);
    Ideal ideal = zero_ideal();
    std::stringstream gens(params[1]);
    std::string item;
    while (std::getline(gens, item, ',')) {
      const long long g = to_int(item, "ideal generator");
      if (g < 0 || static_cast<std::size_t>(g) >= ring.order()) throw Error("ideal generator out of range");
      ideal = ideal_sum(ring, ideal, principal_ideal(ring, static_cast<Element>(g)));
    }
    return quotient(ring, ideal);
  }
  throw Error("unknown family '" + family + "' (zn, gf, n0, np2, npp, ap, ap0, zpx2, sum, matrix, quotient)");
}

bool looks_like_dot(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && (text.compare(pos, 5, "graph") == 0 || text.compare(pos, 6, "strict") == 0 ||
                                      text.compare(pos, 2, "//") == 0);
}

// A ringtab file yields its zero-divisor graph; a DOT file is read as is.
SimpleGraph load_graph(const std::string& path, const Limits& limits) {
  const std::string text = read_text_file(path);
  if (looks_like_dot(text)) return parse_dot(text);
  return zero_divisor_graph(read_ringtab(text, limits));
}

int cmd_ring_build(const Context& ctx, const std::string& family, const std::vector<std::string>& params,
                   const std::string& out) {
  const FiniteRing ring = build_family(family, params, ctx.limits);
  if (out.empty()) {
    std::cout << write_ringtab(ring);
  } else {
    save_ringtab(ring, out);
    std::cout << "wrote " << ring.label() << " (order " << ring.order() << ") to " << out << "\n";
  }
  return 0;
}

int cmd_ring_info(const Context& ctx, const std::string& file) {
  std::cout << render_report(structure_report(load_ringtab(file, ctx.limits), ctx.limits));
  return 0;
}

int cmd_zdg_graph(const Context& ctx, const std::string& file, const std::string& dot) {
  const SimpleGraph g = zero_divisor_graph(load_ringtab(file, ctx.limits));
  std::cout << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
  if (auto k = is_complete(g); k && *k > 0) std::cout << "complete graph K" << *k << "\n";
  if (!dot.empty()) {
    write_text_file(dot, export_dot(g));
    std::cout << "wrote " << dot << "\n";
  }
  return 0;
}

int cmd_zdg_iso(const Context& ctx, const std::string& a, const std::string& b) {
  const SimpleGraph g = load_graph(a, ctx.limits);
  const SimpleGraph h = load_graph(b, ctx.limits);
  const auto map = graph_isomorphic(g, h, ctx.limits);
  if (!map) {
    std::cout << "not isomorphic\n";
    return 1;
  }
  std::cout << "isomorphic\n";
  for (std::size_t v = 0; v < map->size(); ++v) std::cout << "  " << g.label(v) << " -> " << h.label((*map)[v]) << "\n";
  return 0;
}

int cmd_identity_check(const Context& ctx, const std::string& ring_file, const std::string& polys, bool sample,
                       std::uint64_t seed) {
  const FiniteRing ring = load_ringtab(ring_file, ctx.limits);
  const std::vector<NcPoly> suite =
      fs::is_regular_file(polys) ? parse_suite(read_text_file(polys)) : std::vector<NcPoly>{parse_poly(polys)};
  IdentityOptions options;
  options.allow_sampling = sample;
  options.seed = seed;
  bool all = true;
  for (const auto& p : suite) {
    const auto res = satisfies_identity(ring, p, ctx.limits, options);
    const char* how = res.sampled ? " [sampled]" : "";
    if (res.holds) {
      std::cout << "PASS " << render(p) << how << "\n";
    } else {
      all = false;
      std::cout << "FAIL " << render(p) << how << ": counterexample " << render_assignment(*res.counterexample)
                << "\n";
    }
  }
  return all ? 0 : 1;
}

int cmd_atlas_build(const Context& ctx, std::size_t n, const std::string& out_dir) {
  ctx.echo_cap(std::cout);
  const auto entries = enumerate_rings(n, ctx.limits);
  std::cout << entries.size() << " classes\n";
  for (const auto& e : entries) std::cout << "  " << e.ring.label() << "\n";
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    const fs::path path = fs::path(out_dir) / ("atlas-" + std::to_string(n) + ".txt");
    save_atlas(entries, path);
    std::cout << "wrote " << path.string() << "\n";
  }
  return 0;
}

int cmd_atlas_query(const Context& ctx, const std::string& graph, std::size_t max_order) {
  ctx.echo_cap(std::cout);
  const SimpleGraph g = fs::is_regular_file(graph) ? parse_dot(read_text_file(graph)) : graph_from_spec(graph);
  const auto found = rings_with_graph(max_order, g, ctx.limits);
  for (const auto& e : found) std::cout << e.ring.label() << " (order " << e.ring.order() << ")\n";
  std::cout << found.size() << " matches\n";
  return 0;
}

int cmd_verify(const Context& ctx, const std::string& scenario, long long p) {
  ctx.echo_cap(std::cout);
  ScenarioParams params;
  params.p = p;
  const auto report = run_scenario(scenario, params, ctx.limits);
  std::cout << "RESULT " << report.name << " " << (report.passed ? "PASS" : "FAIL") << "\n";
  for (const auto& line : report.lines) std::cout << line << "\n";
  return report.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite rings, zero-divisor graphs and polynomial identities"};
  app.require_subcommand(1);
  unsigned workers = 0;
  app.add_option("--workers", workers, "Worker threads for parallel scans (0 = all cores)");

  std::string family, out, file, dot, file_b, polys, graph, scenario;
  std::vector<std::string> params;
  std::size_t n = 0;
  long long p = 2;
  bool sample = false;
  std::uint64_t seed = 0x5eed;

  auto* ring = app.add_subcommand("ring", "Build rings and report their structure");
  ring->require_subcommand(1);
  auto* ring_build = ring->add_subcommand("build", "Build a ring from a named family");
  ring_build->add_option("family", family, "zn, gf, n0, np2, npp, ap, ap0, zpx2, sum, matrix, quotient")->required();
  ring_build->add_option("params", params, "Family parameters");
  ring_build->add_option("--out", out, "Write the ringtab here instead of standard output");
  auto* ring_info = ring->add_subcommand("info", "Print the structure report of a ringtab file");
  ring_info->add_option("file", file)->required();

  auto* zdg = app.add_subcommand("zdg", "Zero-divisor graphs");
  zdg->require_subcommand(1);
  auto* zdg_graph = zdg->add_subcommand("graph", "Vertex and edge counts of the zero-divisor graph");
  zdg_graph->add_option("ring", file)->required();
  zdg_graph->add_option("--dot", dot, "Also write the graph in DOT format");
  auto* zdg_iso = zdg->add_subcommand("iso", "Test two graphs (ringtab or DOT files) for isomorphism");
  zdg_iso->add_option("a", file)->required();
  zdg_iso->add_option("b", file_b)->required();

  auto* identity = app.add_subcommand("identity", "Polynomial identities");
  identity->require_subcommand(1);
  auto* identity_check = identity->add_subcommand("check", "Check a polynomial or suite file on a ring");
  identity_check->add_option("ring", file)->required();
  identity_check->add_option("polynomial", polys, "Polynomial text or a suite file")->required();
  identity_check->add_flag("--sample", sample, "Sample random assignments when the exhaustive check is over budget");
  identity_check->add_option("--seed", seed, "Seed for --sample");

  auto* atlas = app.add_subcommand("atlas", "Rings of small order up to isomorphism");
  atlas->require_subcommand(1);
  auto* atlas_build = atlas->add_subcommand("build", "Enumerate all rings of order n");
  atlas_build->add_option("n", n)->required();
  atlas_build->add_option("--out", out, "Directory for the atlas file");
  auto* atlas_query = atlas->add_subcommand("query", "Rings whose zero-divisor graph is isomorphic to a graph");
  atlas_query->add_option("--graph", graph, "DOT file or K<n> / E<n>")->required();
  atlas_query->add_option("--max-order", n, "Largest ring order to search")->required();

  auto* verify = app.add_subcommand("verify", "Run a verification scenario");
  verify->add_option("scenario", scenario)
      ->required()
      ->check(CLI::IsMember(scenario_names()));
  verify->add_option("--p", p, "Prime for prop5");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Context ctx = make_context();
    ctx.limits.workers = workers;
    if (*ring_build) return cmd_ring_build(ctx, family, params, out);
    if (*ring_info) return cmd_ring_info(ctx, file);
    if (*zdg_graph) return cmd_zdg_graph(ctx, file, dot);
    if (*zdg_iso) return cmd_zdg_iso(ctx, file, file_b);
    if (*identity_check) return cmd_identity_check(ctx, file, polys, sample, seed);
    if (*atlas_build) return cmd_atlas_build(ctx, n, out);
    if (*atlas_query) return cmd_atlas_query(ctx, graph, n);
    if (*verify) return cmd_verify(ctx, scenario, p);
  } catch (const OrderCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const GraphCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
