#include "zdring/graph.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

#include "zdring/errors.hpp"
#include "zdring/structure.hpp"

namespace zdring {

SimpleGraph::SimpleGraph(std::size_t vertex_count, std::vector<std::pair<std::size_t, std::size_t>> edges,
                         std::vector<std::string> labels)
    : n_(vertex_count), adj_(vertex_count * vertex_count, 0), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != n_) throw Error("graph label list has wrong length");
  for (auto [u, v] : edges) {
    if (u >= n_ || v >= n_) throw Error("edge endpoint out of range");
    if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (adj_[u * n_ + v]) continue;
    adj_[u * n_ + v] = adj_[v * n_ + u] = 1;
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
}

std::size_t SimpleGraph::degree(std::size_t v) const noexcept {
  std::size_t d = 0;
  for (std::size_t u = 0; u < n_; ++u) d += adj_[v * n_ + u] != 0;
  return d;
}

std::string SimpleGraph::label(std::size_t v) const {
  return v < labels_.size() ? labels_[v] : std::to_string(v);
}

SimpleGraph complete_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph zero_divisor_graph(const FiniteRing& ring) {
  const std::vector<Element> zd = zero_divisors(ring);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < zd.size(); ++i) {
    labels.push_back(ring.element_name(zd[i]));
    for (std::size_t j = i + 1; j < zd.size(); ++j)
      if (ring.mul(zd[i], zd[j]) == 0 || ring.mul(zd[j], zd[i]) == 0) edges.emplace_back(i, j);
  }
  SimpleGraph g(zd.size(), std::move(edges), std::move(labels));
  g.elements_ = zd;
  return g;
}

std::optional<std::size_t> is_complete(const SimpleGraph& graph) {
  const std::size_t n = graph.vertex_count();
  if (graph.edge_count() == n * (n == 0 ? 0 : n - 1) / 2) return n;
  return std::nullopt;
}

namespace {

using Cells = std::vector<std::vector<std::size_t>>;

// Splits cells by neighbour counts into every cell until stable. New cells
// keep the position of the cell they came from, ordered by count vector.
void refine(const SimpleGraph& g, Cells& cells) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> cell_of(n);
  while (true) {
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (std::size_t v : cells[c]) cell_of[v] = c;
    Cells next;
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<std::size_t>, std::size_t>> keyed;
      for (std::size_t v : cell) {
        std::vector<std::size_t> counts(cells.size(), 0);
        for (std::size_t u = 0; u < n; ++u)
          if (g.adjacent(v, u)) ++counts[cell_of[u]];
        keyed.emplace_back(std::move(counts), v);
      }
      std::sort(keyed.begin(), keyed.end());
      for (std::size_t i = 0; i < keyed.size(); ++i) {
        if (i == 0 || keyed[i].first != keyed[i - 1].first) next.emplace_back();
        next.back().push_back(keyed[i].second);
      }
    }
    const bool stable = next.size() == cells.size();
    cells = std::move(next);
    if (stable) return;
  }
}

bool swap_is_automorphism(const SimpleGraph& g, std::size_t u, std::size_t v) {
  for (std::size_t w = 0; w < g.vertex_count(); ++w) {
    if (w == u || w == v) continue;
    if (g.adjacent(u, w) != g.adjacent(v, w)) return false;
  }
  return true;
}

class Canonizer {
 public:
  explicit Canonizer(const SimpleGraph& g) : g_(g) {}

  std::vector<std::size_t> run() {
    Cells cells;
    if (g_.vertex_count() > 0) {
      cells.emplace_back();
      for (std::size_t v = 0; v < g_.vertex_count(); ++v) cells.back().push_back(v);
    }
    search(std::move(cells));
    return best_order_;
  }

 private:
  std::vector<char> bits(const std::vector<std::size_t>& order) const {
    std::vector<char> out;
    const std::size_t n = order.size();
    out.reserve(n * (n - 1) / 2 + 1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) out.push_back(g_.adjacent(order[i], order[j]) ? 1 : 0);
    return out;
  }

  void search(Cells cells) {
    refine(g_, cells);
    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (cells[c].size() > 1 && (target == cells.size() || cells[c].size() < cells[target].size())) target = c;
    if (target == cells.size()) {
      std::vector<std::size_t> order;
      for (const auto& cell : cells) order.push_back(cell[0]);
      auto key = bits(order);
      if (!have_best_ || key < best_bits_) {
        best_bits_ = std::move(key);
        best_order_ = std::move(order);
        have_best_ = true;
      }
      return;
    }
    std::vector<std::size_t> candidates = cells[target];
    std::sort(candidates.begin(), candidates.end());
    std::vector<std::size_t> tried;
    for (std::size_t v : candidates) {
      // Swapping two such vertices fixes everything individualized so far,
      // so their subtrees produce the same leaves.
      if (std::any_of(tried.begin(), tried.end(), [&](std::size_t u) { return swap_is_automorphism(g_, u, v); }))
        continue;
      tried.push_back(v);
      Cells child;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<std::size_t> rest;
        for (std::size_t u : cells[c])
          if (u != v) rest.push_back(u);
        child.push_back(std::move(rest));
      }
      search(std::move(child));
    }
  }

  const SimpleGraph& g_;
  bool have_best_ = false;
  std::vector<char> best_bits_;
  std::vector<std::size_t> best_order_;
};

void check_graph_cap(const SimpleGraph& g, const Limits& limits) {
  if (g.vertex_count() > limits.graph_cap)
    throw GraphCapExceeded("graph has " + std::to_string(g.vertex_count()) + " vertices, cap is " +
                           std::to_string(limits.graph_cap));
}

}  // namespace

std::vector<std::size_t> canonical_labeling(const SimpleGraph& graph, const Limits& limits) {
  check_graph_cap(graph, limits);
  return Canonizer(graph).run();
}

std::vector<std::uint8_t> canonical_form(const SimpleGraph& graph, const Limits& limits) {
  const auto order = canonical_labeling(graph, limits);
  const std::size_t n = graph.vertex_count();
  std::vector<std::uint8_t> out;
  out.push_back(static_cast<std::uint8_t>((n >> 8) & 0xFF));
  out.push_back(static_cast<std::uint8_t>(n & 0xFF));
  std::uint8_t byte = 0;
  int used = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      byte = static_cast<std::uint8_t>((byte << 1) | (graph.adjacent(order[i], order[j]) ? 1 : 0));
      if (++used == 8) {
        out.push_back(byte);
        byte = 0;
        used = 0;
      }
    }
  if (used > 0) out.push_back(static_cast<std::uint8_t>(byte << (8 - used)));
  return out;
}

std::optional<std::vector<std::size_t>> graph_isomorphic(const SimpleGraph& g, const SimpleGraph& h,
                                                         const Limits& limits) {
  check_graph_cap(g, limits);
  check_graph_cap(h, limits);
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;
  if (canonical_form(g, limits) != canonical_form(h, limits)) return std::nullopt;
  const auto lg = canonical_labeling(g, limits);
  const auto lh = canonical_labeling(h, limits);
  std::vector<std::size_t> mapping(g.vertex_count());
  for (std::size_t i = 0; i < lg.size(); ++i) mapping[lg[i]] = lh[i];
  for (auto [u, v] : g.edges())
    if (!h.adjacent(mapping[u], mapping[v])) throw Error("graph_isomorphic: witness check failed");
  return mapping;
}

namespace {
const std::string kDotMagic = "// zdring-graph v1";
}  // namespace

std::string export_dot(const SimpleGraph& graph) {
  std::ostringstream out;
  out << kDotMagic << "\n" << "graph {\n";
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    std::string escaped;
    for (char c : graph.label(v)) {
      if (c == '"' || c == '\\') escaped.push_back('\\');
      escaped.push_back(c);
    }
    out << "  " << v << " [label=\"" << escaped << "\"];\n";
  }
  for (auto [u, v] : graph.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

SimpleGraph parse_dot(const std::string& text) {
  static const std::regex kHeader(R"(^\s*(strict\s+)?graph\s*("?[\w ]*"?)?\s*\{\s*$)");
  static const std::regex kNode(R"re(^\s*(\d+)\s*(\[\s*label\s*=\s*"((?:[^"\\]|\\.)*)"\s*\])?\s*;?\s*$)re");
  static const std::regex kEdge(R"(^\s*(\d+)\s*--\s*(\d+)\s*;?\s*$)");
  static const std::regex kClose(R"(^\s*\}\s*$)");
  std::istringstream in(text);
  std::string line;
  bool opened = false, closed = false;
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::pair<std::size_t, std::string>> named;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (line.compare(first, 2, "//") == 0) {
      if (line.compare(first, 16, "// zdring-graph ") == 0 && line.substr(first) != kDotMagic)
        throw FormatError("dot line " + std::to_string(line_no) + ": unsupported version '" + line.substr(first + 16) + "'");
      continue;
    }
    std::smatch m;
    if (!opened) {
      if (!std::regex_match(line, m, kHeader)) throw FormatError("dot line " + std::to_string(line_no) + ": expected 'graph {'");
      opened = true;
    } else if (closed) {
      throw FormatError("dot line " + std::to_string(line_no) + ": content after closing brace");
    } else if (std::regex_match(line, m, kClose)) {
      closed = true;
    } else if (std::regex_match(line, m, kEdge)) {
      const std::size_t a = std::stoul(m[1]), b = std::stoul(m[2]);
      edges.emplace_back(a, b);
      n = std::max({n, a + 1, b + 1});
    } else if (std::regex_match(line, m, kNode)) {
      const std::size_t a = std::stoul(m[1]);
      n = std::max(n, a + 1);
      std::string label;
      if (m[3].matched) {
        const std::string raw = m[3];
        for (std::size_t i = 0; i < raw.size(); ++i) {
          if (raw[i] == '\\' && i + 1 < raw.size()) ++i;
          label.push_back(raw[i]);
        }
        named.emplace_back(a, label);
      }
    } else {
      throw FormatError("dot line " + std::to_string(line_no) + ": unrecognized statement");
    }
  }
  if (!opened || !closed) throw FormatError("dot: missing 'graph {' or closing brace");
  std::vector<std::string> labels;
  if (!named.empty()) {
    labels.resize(n);
    for (std::size_t v = 0; v < n; ++v) labels[v] = std::to_string(v);
    for (auto& [v, label] : named) labels[v] = label;
  }
  try {
    return SimpleGraph(n, std::move(edges), std::move(labels));
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(std::string("dot: ") + e.what());
  }
}

SimpleGraph graph_from_spec(const std::string& spec) {
  if (spec.size() >= 2 && (spec[0] == 'K' || spec[0] == 'E') &&
      std::all_of(spec.begin() + 1, spec.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    const std::size_t n = std::stoul(spec.substr(1));
    return spec[0] == 'K' ? complete_graph(n) : SimpleGraph(n, {});
  }
  throw FormatError("graph spec must be K<n> or E<n>, got '" + spec + "'");
}

}  // namespace zdring
