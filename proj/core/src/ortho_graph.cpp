#include "kscontext/ortho_graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "kscontext/error.hpp"

namespace kscontext {

OrthoGraph::OrthoGraph(int n) : adjacency_(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n))) {}

std::size_t OrthoGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adjacency_) twice += row.count();
  return twice / 2;
}

void OrthoGraph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  if (u < 0 || v < 0 || u >= size() || v >= size()) throw std::out_of_range("edge endpoint out of range");
  adjacency_[u].set(v);
  adjacency_[v].set(u);
}

std::vector<std::pair<int, int>> OrthoGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < size(); ++u) {
    adjacency_[u].for_each([&](std::size_t v) {
      if (static_cast<int>(v) > u) out.emplace_back(u, static_cast<int>(v));
    });
  }
  return out;
}

OrthoGraph build_graph(const VectorSet& set) {
  const int n = static_cast<int>(set.rays.size());
  OrthoGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (inner_product(set.rays[u], set.rays[v]).is_zero()) g.add_edge(u, v);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(set.rays.size());
  for (const auto& ray : set.rays) {
    std::string label = "(";
    for (std::size_t k = 0; k < ray.size(); ++k) {
      if (k != 0) label += ',';
      label += ray[k].to_string();
    }
    labels.push_back(label + ")");
  }
  g.set_labels(std::move(labels));
  return g;
}

bool is_clique(const OrthoGraph& g, const std::vector<int>& vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (!g.adjacent(vertices[a], vertices[b])) return false;
    }
  }
  return true;
}

bool is_independent(const OrthoGraph& g, const std::vector<int>& vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (vertices[a] == vertices[b] || g.adjacent(vertices[a], vertices[b])) return false;
    }
  }
  return true;
}

bool is_triangle_free(const OrthoGraph& g) {
  for (auto [u, v] : g.edges()) {
    if (g.neighbors(u).intersects(g.neighbors(v))) return false;
  }
  return true;
}

namespace {

// Vertex ordering by repeatedly removing a minimum-degree vertex; returned in
// reverse removal order so dense cores come first.
std::vector<int> degeneracy_order(const OrthoGraph& g) {
  const int n = g.size();
  std::vector<int> degree(n);
  for (int v = 0; v < n; ++v) degree[v] = g.degree(v);
  std::vector<bool> removed(n, false);
  std::vector<int> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (!removed[v] && (best < 0 || degree[v] < degree[best])) best = v;
    }
    removed[best] = true;
    order.push_back(best);
    g.neighbors(best).for_each([&](std::size_t u) {
      if (!removed[u]) --degree[u];
    });
  }
  std::reverse(order.begin(), order.end());
  return order;
}

// Branch-and-bound clique search with greedy colouring bounds. In "enumerate"
// mode it lists every clique of size `target`; otherwise it raises `best`.
class CliqueSearch {
 public:
  CliqueSearch(const OrthoGraph& g, std::vector<int> order) : g_(g), order_(std::move(order)) {}

  int maximum() {
    enumerate_ = false;
    best_ = 0;
    witness_.clear();
    std::vector<int> current;
    expand(current, Bitset::full(g_.size()));
    return best_;
  }

  const std::vector<int>& witness() const { return witness_; }

  std::vector<Context> all_of_size(int target) {
    enumerate_ = true;
    best_ = target - 1;
    found_.clear();
    std::vector<int> current;
    expand(current, Bitset::full(g_.size()));
    return std::move(found_);
  }

 private:
  // Greedy colouring of `candidates` in the fixed vertex order. Returns vertices
  // sorted by colour with the colour bound for each prefix.
  void colour(const Bitset& candidates, std::vector<int>& verts, std::vector<int>& bounds) const {
    verts.clear();
    bounds.clear();
    std::vector<int> pending;
    for (int v : order_) {
      if (candidates.test(v)) pending.push_back(v);
    }
    int colour = 0;
    while (!pending.empty()) {
      ++colour;
      Bitset used(g_.size());
      std::vector<int> rest;
      for (int v : pending) {
        if (used.test(v)) {
          rest.push_back(v);
        } else {
          verts.push_back(v);
          bounds.push_back(colour);
          used |= g_.neighbors(v);
        }
      }
      pending.swap(rest);
    }
  }

  void expand(std::vector<int>& current, Bitset candidates) {
    std::vector<int> verts, bounds;
    colour(candidates, verts, bounds);
    for (std::size_t k = verts.size(); k-- > 0;) {
      if (static_cast<int>(current.size()) + bounds[k] <= best_) return;
      int v = verts[k];
      current.push_back(v);
      Bitset next = candidates & g_.neighbors(v);
      if (next.any()) {
        expand(current, next);
      } else if (static_cast<int>(current.size()) > best_) {
        if (enumerate_) {
          Context c = current;
          std::sort(c.begin(), c.end());
          found_.push_back(std::move(c));
        } else {
          best_ = static_cast<int>(current.size());
          witness_ = current;
        }
      }
      current.pop_back();
      candidates.reset(v);
    }
  }

  const OrthoGraph& g_;
  std::vector<int> order_;
  std::vector<int> witness_;
  bool enumerate_ = false;
  int best_ = 0;
  std::vector<Context> found_;
};

}  // namespace

int clique_number(const OrthoGraph& g) {
  if (g.size() == 0) return 0;
  return CliqueSearch(g, degeneracy_order(g)).maximum();
}

std::vector<int> maximum_clique(const OrthoGraph& g) {
  if (g.size() == 0) return {};
  CliqueSearch search(g, degeneracy_order(g));
  search.maximum();
  auto clique = search.witness();
  std::sort(clique.begin(), clique.end());
  return clique;
}

OrthoGraph complement(const OrthoGraph& g) {
  OrthoGraph out(g.size());
  for (int u = 0; u < g.size(); ++u) {
    for (int v = u + 1; v < g.size(); ++v) {
      if (!g.adjacent(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

std::vector<Context> enumerate_contexts(const OrthoGraph& g) {
  if (g.size() == 0) return {};
  CliqueSearch search(g, degeneracy_order(g));
  int omega = search.maximum();
  auto contexts = search.all_of_size(omega);
  std::sort(contexts.begin(), contexts.end());
  return contexts;
}

std::vector<int> uncovered_vertices(const OrthoGraph& g, const std::vector<Context>& contexts) {
  std::vector<bool> seen(g.size(), false);
  for (const auto& c : contexts) {
    for (int v : c) seen[v] = true;
  }
  std::vector<int> out;
  for (int v = 0; v < g.size(); ++v) {
    if (!seen[v]) out.push_back(v);
  }
  return out;
}

GraphUnion disjoint_union(const OrthoGraph& a, const OrthoGraph& b) {
  GraphUnion result{OrthoGraph(a.size() + b.size()), false};
  for (auto [u, v] : a.edges()) result.graph.add_edge(u, v);
  for (auto [u, v] : b.edges()) result.graph.add_edge(u + a.size(), v + a.size());
  if (!a.labels().empty() && !b.labels().empty()) {
    auto labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    result.graph.set_labels(std::move(labels));
  }
  result.omega_mismatch = clique_number(a) != clique_number(b);
  return result;
}

OrthoGraph disjoint_copies(const OrthoGraph& g, int k) {
  if (k < 1) throw std::invalid_argument("disjoint_copies: k must be positive");
  OrthoGraph out = g;
  for (int i = 1; i < k; ++i) out = disjoint_union(out, g).graph;
  return out;
}

std::string export_graph(const OrthoGraph& g, GraphFormat format) {
  if (format == GraphFormat::kDot) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.size(); ++v) {
      out << "  v" << v;
      if (!g.labels().empty()) out << " [label=\"" << g.labels()[v] << "\"]";
      out << ";\n";
    }
    for (auto [u, v] : g.edges()) out << "  v" << u << " -- v" << v << ";\n";
    out << "}\n";
    return out.str();
  }
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  nlohmann::json doc;
  doc["n"] = g.size();
  doc["edges"] = std::move(edges);
  doc["omega"] = clique_number(g);
  doc["contexts"] = enumerate_contexts(g);
  return doc.dump();
}

OrthoGraph parse_graph_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(InputErrorKind::kSyntax, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges") || !doc["n"].is_number_integer() ||
      !doc["edges"].is_array()) {
    throw InputError(InputErrorKind::kSchema, "graph needs integer n and array edges");
  }
  const auto n = doc["n"].get<std::int64_t>();
  if (n < 0 || n > 1 << 20) throw InputError(InputErrorKind::kSchema, "graph size out of range");
  OrthoGraph g(static_cast<int>(n));
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw InputError(InputErrorKind::kSchema, "edges must be [i, j] integer pairs");
    }
    auto u = e[0].get<std::int64_t>();
    auto v = e[1].get<std::int64_t>();
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
      throw InputError(InputErrorKind::kSchema, "edge endpoint out of range or self-loop");
    }
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  if (doc.contains("omega")) {
    if (!doc["omega"].is_number_integer() || doc["omega"].get<int>() != clique_number(g)) {
      throw InputError(InputErrorKind::kInconsistentGraph, "stored omega disagrees with the edges");
    }
  }
  if (doc.contains("contexts")) {
    std::vector<Context> stored;
    try {
      stored = doc["contexts"].get<std::vector<Context>>();
    } catch (const nlohmann::json::exception&) {
      throw InputError(InputErrorKind::kSchema, "contexts must be arrays of integers");
    }
    if (stored != enumerate_contexts(g)) {
      throw InputError(InputErrorKind::kInconsistentGraph, "stored contexts disagree with the edges");
    }
  }
  return g;
}

}  // namespace kscontext
