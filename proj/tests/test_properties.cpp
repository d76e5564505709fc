#include <doctest.h>

#include "adinv/analysis.hpp"
#include "adinv/parabolic.hpp"
#include "adinv/serialize.hpp"
#include "helpers.hpp"

using namespace adinv;
using namespace testing;

namespace {
std::vector<std::pair<std::string, LieAlgebra>> witnessed_algebras() {
  return {{"abelian3", LieAlgebra::abelian(3)},
          {"n32", free_nilpotent(3, 2)},
          {"n23", free_nilpotent(2, 3)},
          {"R+n32", direct_sum({LieAlgebra::abelian(1), free_nilpotent(3, 2)})},
          {"C3+C3", build_graph_algebra(disjoint_union({cycle(3), cycle(3)})).algebra},
          {"B3:g3", ParabolicNilradical::build(ParabolicSpec::parse("B3:g3")).algebra()}};
}
}  // namespace

TEST_CASE("orthogonality relations on random subspaces") {
  SplitMix64 rng(2024);
  for (const auto& [name, g] : witnessed_algebras()) {
    CAPTURE(name);
    const auto v = decide_nondegenerate(invariant_form_space(g), DecisionPolicy{});
    REQUIRE(v.kind == NondegeneracyKind::Admits);
    const MatrixQ& w = *v.witness;
    CHECK(check_orthogonality_relations(g, w, Subspace::full(g.dim())).ok);
    for (int t = 0; t < 20; ++t) {
      const Subspace sub = random_subspace(rng, g.dim(), 1 + rng.uniform(0, g.dim() - 1));
      const auto r = check_orthogonality_relations(g, w, sub);
      CHECK(r.ok);
      for (const auto& lvl : r.levels) CHECK(lvl.complement_equal);
    }
  }
}

TEST_CASE("generated algebras survive a JSON round trip") {
  SplitMix64 rng(8);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 2 + rng.uniform(0, 5);
    std::vector<Graph::Edge> edges;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (rng.uniform(0, 1)) edges.push_back({a, b});
    const LieAlgebra g = build_graph_algebra(graph_from(n, edges)).algebra;
    CHECK(algebra_from_json(Json::parse(algebra_to_json(g).dump())) == g);
  }
}

TEST_CASE("analysis never pairs a certificate with Admits") {
  RunConfig cfg;
  for (const auto& [name, g] : witnessed_algebras()) {
    const Analysis a = analyze(g, cfg);
    CAPTURE(name);
    CHECK(a.kind == VerdictKind::Admits);
    CHECK(a.certificates.empty());
    CHECK(a.consistent);
  }
  for (std::size_t p : {2, 4, 5}) {
    const Analysis a = analyze(free_nilpotent(p, 2), cfg);
    CHECK(a.kind == VerdictKind::Refuted);
    CHECK_FALSE(a.certificates.empty());
    CHECK(a.consistent);
  }
}

TEST_CASE("verdicts depend only on the configuration") {
  RunConfig cfg;
  cfg.seed = 77;
  const LieAlgebra g = build_graph_algebra(cycle(3)).algebra;
  const Json a = analysis_to_json(analyze(g, cfg), cfg), b = analysis_to_json(analyze(g, cfg), cfg);
  CHECK(a.dump() == b.dump());
}

TEST_CASE("single-root nilradicals satisfy Jacobi and the grading identities") {
  for (const char* type : {"A4", "B4", "C4", "D5", "G2", "F4"}) {
    auto rs = std::make_shared<const RootSystem>(RootSystem::build(CartanType::parse(type)));
    for (std::size_t a = 0; a < rs->rank(); ++a) {
      const auto pn = ParabolicNilradical::build(rs, {a});
      CAPTURE(pn.name());
      CHECK_FALSE(validate(pn.algebra().dim(), pn.algebra().brackets()).has_value());
      CHECK(verify_lcs_grading(pn).ok());
    }
  }
}
