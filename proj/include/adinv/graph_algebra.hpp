#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "adinv/lie_algebra.hpp"
#include "adinv/obstructions.hpp"

namespace adinv {

/// Finite simple graph. Edges are stored as (a, b) with a < b (vertex
/// indices), sorted lexicographically.
class Graph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  Graph() = default;
  /// Throws MalformedInput on loops, duplicate edges, duplicate labels or
  /// out-of-range indices.
  static Graph make(std::vector<std::string> vertices, std::vector<Edge> edges);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool adjacent(std::size_t a, std::size_t b) const;
  std::vector<std::size_t> neighbors(std::size_t v) const;
  std::size_t degree(std::size_t v) const { return neighbors(v).size(); }
  /// Vertices of degree >= 1.
  std::size_t non_isolated_count() const;
  bool in_triangle(std::size_t v) const;
  std::vector<std::vector<std::size_t>> components() const;
  /// Subgraph induced on `keep`, in the given order.
  Graph induced(const std::vector<std::size_t>& keep) const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
};

/// Edge-list text: one edge "a b" per line, "vertex a" declares a vertex,
/// '#' starts a comment. Vertices are numbered by first appearance.
Graph parse_graph_text(std::string_view text);
/// {"vertices": [...], "edges": [[a, b], ...]}
Graph parse_graph_json(std::string_view text);
/// JSON when the first non-blank character is '{', edge list otherwise.
Graph parse_graph(std::string_view text);

std::string to_edge_list(const Graph& g);

/// Vertices relabelled "v1", "v2", ... in concatenation order.
Graph disjoint_union(const std::vector<Graph>& parts);

struct GraphAlgebra {
  Graph graph;
  LieAlgebra algebra;
  // basis: vertices 0..|V|-1, then edge t at index |V| + t
  std::size_t vertex_basis(std::size_t v) const { return v; }
  std::size_t edge_basis(std::size_t t) const { return graph.vertex_count() + t; }
};

/// n_G: [v, w] = v^w for every edge vw, all other brackets zero. Checks
/// C^1 = span(edges) and z = span(isolated vertices, edges).
GraphAlgebra build_graph_algebra(const Graph& g);

struct CentralizerLemmaReport {
  bool identity_holds = false;   // z(v) = z + span(V \ N(v))
  bool in_triangle = false;
  bool second_clause_checked = false;
  bool covering_holds = false;   // V \ N(v) meets every edge
  bool bracket_identity_holds = false;  // [z(v), n_G] = C^1(n_G)
  bool ok() const {
    return identity_holds && (!second_clause_checked || (covering_holds && bracket_identity_holds));
  }
};

CentralizerLemmaReport centralizer_lemma_check(const GraphAlgebra& ga, std::size_t v);

enum class GraphPrediction { Admits, Refutes };

struct GraphClassification {
  GraphPrediction prediction = GraphPrediction::Refutes;
  std::string reason;
  std::size_t isolated = 0;
  std::size_t triangles = 0;  // K3 components
};

/// Admits iff every connected component is a single vertex or a 3-cycle.
GraphClassification classify_graph(const Graph& g);

/// Structured splittings of the generator layer: the two colour classes when
/// the graph is bipartite, isolated vertices joining the first class.
std::vector<Decomposition> graph_decompositions(const GraphAlgebra& ga);

}  // namespace adinv
