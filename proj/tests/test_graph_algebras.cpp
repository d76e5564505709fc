#include <doctest.h>

#include <algorithm>
#include <map>

#include "adinv/graph_algebra.hpp"
#include "adinv/graph_enum.hpp"
#include "helpers.hpp"

using namespace adinv;
using namespace testing;

TEST_CASE("edge-list and JSON parsing") {
  const Graph p3 = parse_graph("a b\nb c\n");
  CHECK(p3.vertex_count() == 3);
  CHECK(p3.edge_count() == 2);
  CHECK(p3.vertices() == std::vector<std::string>{"a", "b", "c"});

  const Graph c3 = parse_graph(R"({"vertices":["v1","v2","v3"],"edges":[["v1","v2"],["v2","v3"],["v3","v1"]]})");
  CHECK(c3.edge_count() == 3);
  CHECK(c3 == cycle(3));

  const Graph iso = parse_graph("# two vertices\nvertex x\nvertex y\n");
  CHECK(iso.vertex_count() == 2);
  CHECK(iso.edge_count() == 0);

  CHECK_THROWS_AS(parse_graph("a a"), MalformedInput);
  CHECK_THROWS_AS(parse_graph("a b\nb a\n"), MalformedInput);
  CHECK_THROWS_AS(parse_graph("a b c\n"), MalformedInput);
  try {
    parse_graph("a b\nx\n");
    FAIL("expected a parse error");
  } catch (const MalformedInput& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_graph(R"({"vertices":["a"],"edges":[["a","b"]]})"), MalformedInput);
  CHECK(parse_graph(to_edge_list(cycle(5))) == cycle(5));
}

TEST_CASE("graph algebras of small graphs") {
  const GraphAlgebra k2 = build_graph_algebra(path(2));
  CHECK(k2.algebra == h3());

  const GraphAlgebra c3 = build_graph_algebra(cycle(3));
  CHECK(c3.algebra.dim() == 6);
  CHECK(center(c3.algebra).dim() == 3);
  const auto iso = match_free_nilpotent(c3.algebra, {unit_vec(6, 0), unit_vec(6, 1), unit_vec(6, 2)}, 3, 2);
  REQUIRE(iso.has_value());
  CHECK(verify_free_isomorphism(c3.algebra, *iso, 3, 2));

  const GraphAlgebra c4 = build_graph_algebra(cycle(4));
  CHECK(c4.algebra.dim() == 8);
  CHECK(center(c4.algebra).dim() == 4);

  const GraphAlgebra with_iso = build_graph_algebra(disjoint_union({path(2), graph_from(1, {})}));
  CHECK(center(with_iso.algebra).dim() == 2);
  CHECK(commutator(with_iso.algebra).dim() == 1);
}

TEST_CASE("centralizer identity for vertices") {
  const GraphAlgebra c3 = build_graph_algebra(cycle(3));
  for (std::size_t v = 0; v < 3; ++v) {
    const auto r = centralizer_lemma_check(c3, v);
    CHECK(r.identity_holds);
    CHECK(r.in_triangle);
    CHECK_FALSE(r.second_clause_checked);
    CHECK(r.ok());
  }
  const GraphAlgebra p3 = build_graph_algebra(path(3));
  const auto end = centralizer_lemma_check(p3, 0);
  CHECK(end.identity_holds);
  CHECK(end.second_clause_checked);
  CHECK(end.covering_holds);
  CHECK(end.bracket_identity_holds);
  const auto mid = centralizer_lemma_check(p3, 1);
  CHECK(mid.identity_holds);
  CHECK(centralizer(p3.algebra, Subspace::coordinate(5, {1})) == Subspace::coordinate(5, {1, 3, 4}));

  const GraphAlgebra lone = build_graph_algebra(disjoint_union({path(2), graph_from(1, {})}));
  CHECK(centralizer(lone.algebra, Subspace::coordinate(4, {2})) == Subspace::full(4));
  CHECK(centralizer_lemma_check(lone, 2).ok());
}

TEST_CASE("classification prediction") {
  const Graph admits = disjoint_union({cycle(3), cycle(3), graph_from(1, {})});
  const auto a = classify_graph(admits);
  CHECK(a.prediction == GraphPrediction::Admits);
  CHECK(a.triangles == 2);
  CHECK(a.isolated == 1);
  CHECK(classify_graph(cycle(4)).prediction == GraphPrediction::Refutes);
  CHECK(classify_graph(cycle(4)).reason.find("3-cycle") != std::string::npos);
  CHECK(classify_graph(path(3)).prediction == GraphPrediction::Refutes);
  CHECK(classify_graph(graph_from(2, {})).prediction == GraphPrediction::Admits);
}

TEST_CASE("bipartite splittings") {
  const auto d = graph_decompositions(build_graph_algebra(cycle(4)));
  REQUIRE(d.size() == 1);
  CHECK(d.front().parts.size() == 2);
  CHECK(d.front().parts[0].dim() == 2);
  CHECK(graph_decompositions(build_graph_algebra(cycle(3))).empty());
}

TEST_CASE("graph enumeration counts") {
  const auto connected = connected_graphs(6);
  std::map<std::size_t, std::size_t> by_size;
  for (const auto& g : connected) {
    ++by_size[g.vertex_count()];
    CHECK(g.components().size() == 1);
  }
  CHECK(by_size == std::map<std::size_t, std::size_t>{{1, 1}, {2, 1}, {3, 2}, {4, 6}, {5, 21}, {6, 112}});
  const auto unions = disjoint_unions(connected, 8);
  CHECK(unions.size() == 632);
  std::vector<std::uint32_t> codes;
  for (const auto& g : connected_graphs(5))
    if (g.vertex_count() == 5) codes.push_back(canonical_code(g));
  std::sort(codes.begin(), codes.end());
  CHECK(std::adjacent_find(codes.begin(), codes.end()) == codes.end());
  // relabelling does not change the canonical code
  CHECK(canonical_code(graph_from(4, {{0, 1}, {1, 2}, {2, 3}})) == canonical_code(graph_from(4, {{2, 0}, {0, 3}, {3, 1}})));
}
