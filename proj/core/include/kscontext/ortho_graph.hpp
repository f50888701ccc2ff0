#pragma once

#include <string>
#include <vector>

#include "kscontext/bitset.hpp"
#include "kscontext/vector_set.hpp"

namespace kscontext {

/// Simple undirected graph with dense bitset adjacency. Vertices of a graph built
/// from a VectorSet are its rays; edges are exactly orthogonal pairs.
class OrthoGraph {
 public:
  OrthoGraph() = default;
  explicit OrthoGraph(int n);

  int size() const { return static_cast<int>(adjacency_.size()); }
  const Bitset& neighbors(int v) const { return adjacency_[v]; }
  bool adjacent(int u, int v) const { return adjacency_[u].test(v); }
  int degree(int v) const { return static_cast<int>(adjacency_[v].count()); }
  std::size_t edge_count() const;

  /// Adds the undirected edge {u, v}; u == v is rejected.
  void add_edge(int u, int v);

  /// Sorted (i < j) edge list.
  std::vector<std::pair<int, int>> edges() const;

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }

  friend bool operator==(const OrthoGraph& a, const OrthoGraph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  std::vector<Bitset> adjacency_;
  std::vector<std::string> labels_;
};

/// A maximum clique: sorted vertex indices.
using Context = std::vector<int>;

OrthoGraph build_graph(const VectorSet& set);

bool is_clique(const OrthoGraph& g, const std::vector<int>& vertices);
bool is_independent(const OrthoGraph& g, const std::vector<int>& vertices);
bool is_triangle_free(const OrthoGraph& g);

/// Maximum clique size (0 for the empty graph).
int clique_number(const OrthoGraph& g);

/// A maximum clique, sorted; ties broken by the search order.
std::vector<int> maximum_clique(const OrthoGraph& g);

OrthoGraph complement(const OrthoGraph& g);

/// All cliques of size clique_number(g), lexicographically sorted.
std::vector<Context> enumerate_contexts(const OrthoGraph& g);

/// Vertices that lie in no context.
std::vector<int> uncovered_vertices(const OrthoGraph& g, const std::vector<Context>& contexts);

struct GraphUnion {
  OrthoGraph graph;
  /// Set when the operands have different clique numbers; only the larger-omega
  /// operand then contributes contexts.
  bool omega_mismatch = false;
};

/// Vertex-disjoint union; vertices of `b` are shifted by a.size().
GraphUnion disjoint_union(const OrthoGraph& a, const OrthoGraph& b);

/// `k` disjoint copies of `g`.
OrthoGraph disjoint_copies(const OrthoGraph& g, int k);

enum class GraphFormat { kDot, kJson };

/// DOT: `graph G { v0 [label="..."]; v0 -- v1; }`. JSON: {"n", "edges", "omega", "contexts"}.
std::string export_graph(const OrthoGraph& g, GraphFormat format);

/// Parses the JSON export. The stored omega and contexts are checked against a
/// recomputation; mismatches throw InputError(kInconsistentGraph).
OrthoGraph parse_graph_json(const std::string& text);

}  // namespace kscontext
