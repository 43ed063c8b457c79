#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zdring/finite_ring.hpp"
#include "zdring/limits.hpp"

namespace zdring {

/// Undirected simple graph on vertices 0..vertex_count-1. Labels are for
/// reporting only; isomorphism and canonical forms ignore them.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  /// Throws Error on self-loops or out-of-range endpoints; duplicate edges
  /// are merged.
  SimpleGraph(std::size_t vertex_count, std::vector<std::pair<std::size_t, std::size_t>> edges,
              std::vector<std::string> labels = {});

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  /// Sorted (u < v) pairs.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
  bool adjacent(std::size_t u, std::size_t v) const noexcept { return adj_[u * n_ + v] != 0; }
  std::size_t degree(std::size_t v) const noexcept;

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(std::size_t v) const;

  /// Ring elements behind the vertices of a zero-divisor graph (empty for
  /// other graphs).
  const std::vector<Element>& elements() const noexcept { return elements_; }

 private:
  friend SimpleGraph zero_divisor_graph(const FiniteRing&);
  std::size_t n_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<char> adj_;
  std::vector<std::string> labels_;
  std::vector<Element> elements_;
};

SimpleGraph complete_graph(std::size_t n);

/// Γ(R): vertices are the nonzero zero divisors (one- or two-sided), in
/// increasing element order; x -- y iff x != y and (xy = 0 or yx = 0).
SimpleGraph zero_divisor_graph(const FiniteRing& ring);

/// n when the graph is K_n (including K_0 and K_1), else absent.
std::optional<std::size_t> is_complete(const SimpleGraph& graph);

/// Canonical labeling: position i of the result is the vertex placed at i.
std::vector<std::size_t> canonical_labeling(const SimpleGraph& graph, const Limits& limits = {});

/// Certificate equal for two graphs iff they are isomorphic: vertex count
/// followed by the packed upper triangle of the canonically relabeled
/// adjacency matrix.
std::vector<std::uint8_t> canonical_form(const SimpleGraph& graph, const Limits& limits = {});

/// An adjacency-preserving bijection g -> h (mapping[v] is the image of v).
std::optional<std::vector<std::size_t>> graph_isomorphic(const SimpleGraph& g, const SimpleGraph& h,
                                                         const Limits& limits = {});

/// DOT text: the version comment `// zdring-graph v1`, `graph {`, one node
/// line per vertex in index order, one edge line per edge in sorted order,
/// `}`.
std::string export_dot(const SimpleGraph& graph);

/// Reads the undirected DOT subset written by export_dot (node lines
/// `<id> [label="..."];`, edge lines `<a> -- <b>;`, `//` comments). The
/// version comment is optional; any version other than v1 is rejected.
/// Throws FormatError.
SimpleGraph parse_dot(const std::string& text);

/// "K<n>" for complete graphs, "E<n>" for edgeless graphs on n vertices.
/// Throws FormatError on anything else.
SimpleGraph graph_from_spec(const std::string& spec);

}  // namespace zdring
