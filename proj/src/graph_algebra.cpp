#include "adinv/graph_algebra.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

#include <json.hpp>

namespace adinv {

Graph Graph::make(std::vector<std::string> vertices, std::vector<Edge> edges) {
  std::set<std::string> seen(vertices.begin(), vertices.end());
  if (seen.size() != vertices.size()) throw MalformedInput("duplicate vertex label");
  for (auto& [a, b] : edges) {
    if (a >= vertices.size() || b >= vertices.size()) throw MalformedInput("edge endpoint out of range");
    if (a == b) throw MalformedInput("loop at vertex '" + vertices[a] + "'");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) throw MalformedInput("duplicate edge");
  Graph g;
  g.vertices_ = std::move(vertices);
  g.edges_ = std::move(edges);
  return g;
}

bool Graph::adjacent(std::size_t a, std::size_t b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
}

std::vector<std::size_t> Graph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (const auto& [a, b] : edges_) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Graph::non_isolated_count() const {
  std::vector<bool> touched(vertices_.size(), false);
  for (const auto& [a, b] : edges_) touched[a] = touched[b] = true;
  return static_cast<std::size_t>(std::count(touched.begin(), touched.end(), true));
}

bool Graph::in_triangle(std::size_t v) const {
  const auto nb = neighbors(v);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      if (adjacent(nb[i], nb[j])) return true;
  return false;
}

std::vector<std::vector<std::size_t>> Graph::components() const {
  const std::size_t n = vertices_.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [a, b] : edges_) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp;
    std::queue<std::size_t> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      const auto v = q.front();
      q.pop();
      comp.push_back(v);
      for (auto w : adj[v])
        if (!seen[w]) {
          seen[w] = true;
          q.push(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

Graph Graph::induced(const std::vector<std::size_t>& keep) const {
  std::vector<std::size_t> index(vertices_.size(), vertices_.size());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    index.at(keep[i]) = i;
    labels.push_back(vertices_[keep[i]]);
  }
  std::vector<Edge> edges;
  for (const auto& [a, b] : edges_)
    if (index[a] != vertices_.size() && index[b] != vertices_.size()) edges.emplace_back(index[a], index[b]);
  return make(std::move(labels), std::move(edges));
}

namespace {

struct Builder {
  std::vector<std::string> labels;
  std::map<std::string, std::size_t> index;
  std::vector<Graph::Edge> edges;

  std::size_t vertex(const std::string& s) {
    auto [it, inserted] = index.emplace(s, labels.size());
    if (inserted) labels.push_back(s);
    return it->second;
  }
};

}  // namespace

Graph parse_graph_text(std::string_view text) {
  Builder b;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() == 2 && tok[0] == "vertex") {
      b.vertex(tok[1]);
      continue;
    }
    if (tok.size() != 2) throw MalformedInput("line " + std::to_string(lineno) + ": expected two vertex labels");
    if (tok[0] == tok[1]) throw MalformedInput("line " + std::to_string(lineno) + ": loop at vertex '" + tok[0] + "'");
    const auto x = b.vertex(tok[0]);
    const auto y = b.vertex(tok[1]);
    b.edges.emplace_back(x, y);
  }
  return Graph::make(std::move(b.labels), std::move(b.edges));
}

Graph parse_graph_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedInput(std::string("graph JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw MalformedInput("graph JSON needs \"vertices\" and \"edges\"");
  Builder b;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw MalformedInput("vertex labels must be strings");
    if (b.index.count(v.get<std::string>())) throw MalformedInput("duplicate vertex label");
    b.vertex(v.get<std::string>());
  }
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw MalformedInput("each edge must be a pair of vertex labels");
    const auto x = b.index.find(e[0].get<std::string>()), y = b.index.find(e[1].get<std::string>());
    if (x == b.index.end() || y == b.index.end()) throw MalformedInput("edge refers to an undeclared vertex");
    b.edges.emplace_back(x->second, y->second);
  }
  return Graph::make(std::move(b.labels), std::move(b.edges));
}

Graph parse_graph(std::string_view text) {
  const auto p = text.find_first_not_of(" \t\r\n");
  if (p != std::string_view::npos && text[p] == '{') return parse_graph_json(text);
  return parse_graph_text(text);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) os << "vertex " << g.vertices()[v] << '\n';
  for (const auto& [a, b] : g.edges()) os << g.vertices()[a] << ' ' << g.vertices()[b] << '\n';
  return os.str();
}

Graph disjoint_union(const std::vector<Graph>& parts) {
  std::vector<std::string> labels;
  std::vector<Graph::Edge> edges;
  std::size_t offset = 0;
  for (const auto& p : parts) {
    for (const auto& [a, b] : p.edges()) edges.emplace_back(a + offset, b + offset);
    offset += p.vertex_count();
  }
  for (std::size_t i = 0; i < offset; ++i) labels.push_back("v" + std::to_string(i + 1));
  return Graph::make(std::move(labels), std::move(edges));
}

GraphAlgebra build_graph_algebra(const Graph& g) {
  const std::size_t nv = g.vertex_count();
  std::vector<std::string> labels = g.vertices();
  BracketTable brackets;
  for (std::size_t t = 0; t < g.edge_count(); ++t) {
    const auto [a, b] = g.edges()[t];
    labels.push_back(g.vertices()[a] + "^" + g.vertices()[b]);
    brackets[{a, b}] = {Term{nv + t, Rational(1)}};
  }
  GraphAlgebra ga{g, LieAlgebra::create(nv + g.edge_count(), std::move(labels), std::move(brackets))};

  const std::size_t n = ga.algebra.dim();
  std::vector<std::size_t> edge_idx, central_idx;
  for (std::size_t t = 0; t < g.edge_count(); ++t) edge_idx.push_back(nv + t);
  for (std::size_t v = 0; v < nv; ++v)
    if (g.degree(v) == 0) central_idx.push_back(v);
  central_idx.insert(central_idx.end(), edge_idx.begin(), edge_idx.end());
  if (!(commutator(ga.algebra) == Subspace::coordinate(n, edge_idx)))
    throw std::logic_error("graph algebra: C^1 differs from the edge span");
  if (!(center(ga.algebra) == Subspace::coordinate(n, central_idx)))
    throw std::logic_error("graph algebra: center differs from isolated vertices plus edges");
  return ga;
}

CentralizerLemmaReport centralizer_lemma_check(const GraphAlgebra& ga, std::size_t v) {
  const Graph& g = ga.graph;
  if (v >= g.vertex_count()) throw std::out_of_range("vertex index out of range");
  const std::size_t n = ga.algebra.dim();
  CentralizerLemmaReport rep;

  std::vector<std::size_t> non_neighbors;
  for (std::size_t w = 0; w < g.vertex_count(); ++w)
    if (!g.adjacent(v, w)) non_neighbors.push_back(w);
  const Subspace zv = centralizer(ga.algebra, Subspace::coordinate(n, {ga.vertex_basis(v)}));
  const Subspace expected = span_sum(center(ga.algebra), Subspace::coordinate(n, non_neighbors));
  rep.identity_holds = zv == expected;

  rep.in_triangle = g.in_triangle(v);
  if (!rep.in_triangle) {
    rep.second_clause_checked = true;
    rep.covering_holds = std::all_of(g.edges().begin(), g.edges().end(), [&](const Graph::Edge& e) {
      return !g.adjacent(v, e.first) || !g.adjacent(v, e.second);
    });
    rep.bracket_identity_holds = bracket_span(ga.algebra, zv, Subspace::full(n)) == commutator(ga.algebra);
  }
  return rep;
}

GraphClassification classify_graph(const Graph& g) {
  GraphClassification out;
  bool all_good = true;
  for (const auto& comp : g.components()) {
    if (comp.size() == 1) {
      ++out.isolated;
    } else if (comp.size() == 3 && g.induced(comp).edge_count() == 3) {
      ++out.triangles;
    } else {
      all_good = false;
    }
  }
  if (all_good) {
    out.prediction = GraphPrediction::Admits;
    out.reason = "every component is a 3-cycle or an isolated vertex (" + std::to_string(out.triangles) +
                 " triangles, " + std::to_string(out.isolated) + " isolated)";
    return out;
  }
  out.prediction = GraphPrediction::Refutes;
  const std::size_t v1 = g.non_isolated_count();
  if (g.edge_count() != v1) {
    out.reason = "|E| = " + std::to_string(g.edge_count()) + " differs from |V1| = " + std::to_string(v1);
    return out;
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 0 && !g.in_triangle(v)) {
      out.reason = "vertex '" + g.vertices()[v] + "' has degree >= 1 and lies in no 3-cycle";
      return out;
    }
  }
  out.reason = "a component is neither a 3-cycle nor an isolated vertex";
  return out;
}

std::vector<Decomposition> graph_decompositions(const GraphAlgebra& ga) {
  const Graph& g = ga.graph;
  const std::size_t nv = g.vertex_count(), n = ga.algebra.dim();
  std::vector<int> colour(nv, -1);
  for (const auto& comp : g.components()) {
    colour[comp.front()] = 0;
    std::queue<std::size_t> q;
    q.push(comp.front());
    while (!q.empty()) {
      const auto v = q.front();
      q.pop();
      for (auto w : g.neighbors(v)) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          q.push(w);
        } else if (colour[w] == colour[v]) {
          return {};
        }
      }
    }
  }
  std::vector<std::size_t> a, b;
  for (std::size_t v = 0; v < nv; ++v) (colour[v] == 0 ? a : b).push_back(ga.vertex_basis(v));
  if (a.empty() || b.empty()) return {};
  return {Decomposition{{Subspace::coordinate(n, a), Subspace::coordinate(n, b)}, "bipartition-classes"}};
}

}  // namespace adinv
