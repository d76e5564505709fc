#include <doctest.h>

#include "adinv/parabolic.hpp"
#include "helpers.hpp"

using namespace adinv;
using namespace testing;

namespace {
ParabolicNilradical nil(const char* spec) { return ParabolicNilradical::build(ParabolicSpec::parse(spec)); }

std::size_t top_lower_dim(const ParabolicNilradical& pn) {
  return central_series(pn.algebra()).lower(pn.k() - 1).dim();
}
}  // namespace

TEST_CASE("parabolic descriptor parsing") {
  const auto s = ParabolicSpec::parse("E6:g2,g4");
  CHECK(s.type.name() == "E6");
  CHECK(s.pi0 == std::vector<std::size_t>{1, 3});
  CHECK(s.name() == "E6:g2,g4");
  for (const char* bad : {"E6", "E6:", "E6:g7", "E6:g0", "E6:x2", "Q3:g1", "A3:g1,g1"})
    CHECK_THROWS_AS(ParabolicSpec::parse(bad), MalformedInput);
}

TEST_CASE("nilradical dimensions and gradings") {
  const auto g2 = nil("G2:g1");
  CHECK(g2.algebra().dim() == 5);
  CHECK(g2.layer_dims() == std::vector<std::size_t>{2, 1, 2});
  CHECK(g2.k() == 3);
  CHECK(nilpotency_class(g2.algebra()) == std::optional<std::size_t>(3));
  CHECK(central_series(g2.algebra()).descending_dims() == std::vector<std::size_t>{5, 3, 2, 0});

  const auto b3 = nil("B3:g3");
  CHECK(b3.algebra().dim() == 6);
  CHECK(b3.layer_dims() == std::vector<std::size_t>{3, 3});

  const auto a3 = nil("A3:g1");
  CHECK(a3.algebra().dim() == 3);
  CHECK(a3.algebra().is_abelian());
  CHECK(a3.k() == 1);
  CHECK(commutator(a3.algebra()).dim() == 0);

  for (const char* spec : {"G2:g1", "G2:g2", "B3:g3", "A3:g1", "C4:g2", "D5:g3", "F4:g1", "E6:g4", "B4:g1,g3"}) {
    CAPTURE(spec);
    const auto r = verify_lcs_grading(nil(spec));
    CHECK(r.multiplicative);
    CHECK(r.series_matches);
    CHECK(r.center_matches);
    CHECK(r.generated);
  }
}

TEST_CASE("E6 dimension table for the top lower-central term") {
  CHECK(top_lower_dim(nil("E6:g2")) == 1);
  CHECK(top_lower_dim(nil("E6:g4")) == 2);
  CHECK(top_lower_dim(nil("E6:g3")) == 5);
}

TEST_CASE("E6 diagram symmetry: g3 and g5 give isomorphic nilradicals") {
  // The automorphism of the E6 diagram swaps gamma_1 <-> gamma_6 and
  // gamma_3 <-> gamma_5, so the top layers have equal size (5, not 4).
  const auto g3 = nil("E6:g3"), g5 = nil("E6:g5");
  CHECK(g3.layer_dims() == g5.layer_dims());
  CHECK(top_lower_dim(g5) == top_lower_dim(g3));
  CHECK(top_lower_dim(g5) == 5);
  const auto& rs = g5.roots();
  std::size_t two3 = 0, two5 = 0;
  for (const auto& r : rs.positive()) {
    two3 += r[2] == 2;
    two5 += r[4] == 2;
  }
  CHECK(two3 == two5);
}

TEST_CASE("root decompositions") {
  const auto a3 = nil("A3:g1,g3");
  const auto& rs = a3.roots();
  const std::size_t top = rs.gamma_max_index();
  CHECK(a3.order(top) == 2);
  const auto c = decompose_root(a3, top, 0);
  CHECK(c.t() == 1);
  CHECK(rs.root(c.delta) == RootCoords{0, 1, 1});
  CHECK(rs.root(c.betas.front()) == RootCoords{1, 0, 0});
  CHECK(verify_decomposition(a3, c).empty());

  const auto c3 = nil("C3:g1,g2");
  CHECK(c3.roots().epsilon_label(c3.roots().gamma_max()) == "2e1");
  const auto d = decompose_root(c3, c3.roots().gamma_max_index(), 1);
  CHECK(d.t() <= 2);
  CHECK(verify_decomposition(c3, d).empty());

  CHECK_THROWS_AS(decompose_root(nil("A3:g1"), 0, 0), PreconditionError);

  DecompCertificate broken = c;
  broken.delta = c.betas.front();
  CHECK_FALSE(verify_decomposition(a3, broken).empty());
}

TEST_CASE("every top-layer root decomposes for two-root cases of rank at most 4") {
  for (const char* type : {"A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4"}) {
    auto rs = std::make_shared<const RootSystem>(RootSystem::build(CartanType::parse(type)));
    const std::size_t n = rs->rank();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        const auto pn = ParabolicNilradical::build(rs, {a, b});
        CAPTURE(pn.name());
        for (std::size_t g = 0; g < rs->positive_count(); ++g) {
          if (pn.order(g) != static_cast<int>(pn.k())) continue;
          for (auto alpha : pn.pi0()) {
            const auto c = decompose_root(pn, g, alpha);
            CHECK(verify_decomposition(pn, c).empty());
            CHECK(c.t() <= static_cast<std::size_t>(rs->root(g)[alpha]));
          }
        }
      }
  }
}

TEST_CASE("classification") {
  const auto b3 = RootSystem::build(CartanType::parse("B3"));
  CHECK(classify_nilradical(b3, {2}).prediction == NilradicalPrediction::N32);
  const auto g2 = RootSystem::build(CartanType::parse("G2"));
  CHECK(classify_nilradical(g2, {0}).prediction == NilradicalPrediction::N23);
  const auto g2b = classify_nilradical(g2, {1});
  CHECK(g2b.prediction == NilradicalPrediction::Refutes);
  CHECK(center(nil("G2:g2").algebra()).dim() == 1);
  const auto e6 = RootSystem::build(CartanType::parse("E6"));
  const auto e = classify_nilradical(e6, {4});
  CHECK(e.prediction == NilradicalPrediction::Refutes);
  CHECK(e.argument == "dim-count");
  const auto e6g5 = nil("E6:g5");
  CHECK(e6g5.algebra().dim() - commutator(e6g5.algebra()).dim() > top_lower_dim(e6g5));
  const auto a3 = RootSystem::build(CartanType::parse("A3"));
  CHECK(classify_nilradical(a3, {0}).prediction == NilradicalPrediction::Abelian);
  CHECK(classify_nilradical(a3, {1}).prediction == NilradicalPrediction::Abelian);
  CHECK(classify_nilradical(a3, {0, 1}).argument == "multiple-roots");
}

TEST_CASE("structured matches behind the positive cases") {
  const auto b3 = nil("B3:g3");
  const auto iso = match_free_layers(b3, 3, 2);
  REQUIRE(iso.has_value());
  CHECK(verify_free_isomorphism(b3.algebra(), *iso, 3, 2));
  const auto g2 = nil("G2:g1");
  const auto iso2 = match_free_layers(g2, 2, 3);
  REQUIRE(iso2.has_value());
  CHECK(verify_free_isomorphism(g2.algebra(), *iso2, 2, 3));
  // B_n with the last root gives the free 2-step algebra on n generators
  CHECK(match_free_layers(nil("B4:g4"), 4, 2).has_value());
  CHECK_FALSE(match_free_layers(nil("A3:g2"), 2, 2).has_value());
}
