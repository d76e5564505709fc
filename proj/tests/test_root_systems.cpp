#include <doctest.h>

#include <cstdlib>

#include "adinv/classical_realization.hpp"
#include "adinv/root_system.hpp"
#include "helpers.hpp"

using namespace adinv;
using namespace testing;

namespace {
std::vector<CartanType> supported_types(std::size_t max_classical) {
  std::vector<CartanType> out;
  for (std::size_t n = 1; n <= max_classical; ++n) out.push_back(CartanType::make(Family::A, n));
  for (std::size_t n = 2; n <= max_classical; ++n) out.push_back(CartanType::make(Family::B, n));
  for (std::size_t n = 3; n <= max_classical; ++n) out.push_back(CartanType::make(Family::C, n));
  for (std::size_t n = 4; n <= max_classical; ++n) out.push_back(CartanType::make(Family::D, n));
  for (std::size_t n = 6; n <= 8; ++n) out.push_back(CartanType::make(Family::E, n));
  out.push_back(CartanType::make(Family::F, 4));
  out.push_back(CartanType::make(Family::G, 2));
  return out;
}

RootCoords unit_coords(std::size_t n, std::size_t i) {
  RootCoords c(n, 0);
  c[i] = 1;
  return c;
}

RootCoords add(RootCoords a, const RootCoords& b, int s = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
  return a;
}
}  // namespace

TEST_CASE("Cartan type parsing") {
  CHECK(CartanType::parse("E6").name() == "E6");
  CHECK(CartanType::parse("b3") == CartanType::make(Family::B, 3));
  for (const char* bad : {"B1", "C2", "D3", "E5", "E9", "F3", "G3", "X3", "A0", "A", "A17", ""})
    CHECK_THROWS_AS(CartanType::parse(bad), MalformedInput);
}

TEST_CASE("small root systems") {
  const RootSystem a2 = RootSystem::build(CartanType::parse("A2"));
  CHECK(a2.positive() == std::vector<RootCoords>{{1, 0}, {0, 1}, {1, 1}});
  CHECK(a2.gamma_max() == RootCoords{1, 1});

  const RootSystem e6 = RootSystem::build(CartanType::parse("E6"));
  CHECK(e6.gamma_max() == RootCoords{1, 2, 2, 3, 2, 1});
  CHECK(e6.positive_count() == 36);
}

TEST_CASE("goldens for every supported type") {
  for (const auto& t : supported_types(8)) {
    CAPTURE(t.name());
    const RootSystem rs = RootSystem::build(t);
    CHECK(rs.positive_count() == expected_positive_count(t));
    CHECK(rs.gamma_max() == expected_gamma_max(t));
    for (std::size_t i = 0; i < t.rank; ++i) CHECK(rs.root(i) == unit_coords(t.rank, i));
    for (std::size_t i = 0; i + 1 < rs.positive_count(); ++i)
      CHECK(RootSystem::height(rs.root(i)) <= RootSystem::height(rs.root(i + 1)));
  }
  CHECK(expected_positive_count(CartanType::parse("E8")) == 120);
  CHECK(expected_positive_count(CartanType::parse("B4")) == 16);
}

TEST_CASE("root strings") {
  const RootSystem a2 = RootSystem::build(CartanType::parse("A2"));
  const auto s = a2.root_string({1, 0}, {0, 1});
  CHECK(s.p == 0);
  CHECK(s.q == 1);

  const RootSystem e6 = RootSystem::build(CartanType::parse("E6"));
  const auto m = e6.root_string(e6.gamma_max(), e6.root(1));
  CHECK(m.p == -1);
  CHECK(m.q == 0);

  const RootSystem g2 = RootSystem::build(CartanType::parse("G2"));
  const auto g = g2.root_string(g2.root(1), g2.root(0));
  CHECK(g.p == 0);
  CHECK(g.q == 3);
  CHECK_THROWS_AS(g2.root_string({1, 0}, {2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(g2.root_string({5, 5}, {1, 0}), std::invalid_argument);
}

TEST_CASE("sign lemma for root sums and differences") {
  const RootSystem e6 = RootSystem::build(CartanType::parse("E6"));
  const auto r = e6.lemma_subsroot(e6.gamma_max(), 1);
  CHECK(r.first_clause_applies);
  CHECK(r.pairing > 0);
  CHECK(e6.cartan_pairing(e6.gamma_max(), e6.root(1)) == 1);
  for (std::size_t i = 0; i < 6; ++i)
    if (i != 1) CHECK(e6.cartan_pairing(e6.gamma_max(), e6.root(i)) == 0);
  CHECK(r.minus_is_positive_root);
  CHECK(r.ok());

  const RootSystem a2 = RootSystem::build(CartanType::parse("A2"));
  const auto a = a2.lemma_subsroot({1, 0}, 1);
  CHECK(a.pairing < 0);
  CHECK(a.second_clause_applies);
  CHECK(a.plus_is_root);
  CHECK(a.ok());

  for (const auto& t : supported_types(5)) {
    const RootSystem rs = RootSystem::build(t);
    for (std::size_t g = 0; g < rs.positive_count(); ++g)
      for (std::size_t a = 0; a < t.rank; ++a)
        if (g != a) CHECK(rs.lemma_subsroot(rs.root(g), a).ok());
  }
}

TEST_CASE("Chevalley constants") {
  const RootSystem a2 = RootSystem::build(CartanType::parse("A2"));
  CHECK(std::abs(a2.chevalley(0, 1)) == 1);
  CHECK(a2.chevalley(0, 1) == -a2.chevalley(1, 0));
  CHECK(a2.chevalley(0, 2) == 0);

  const RootSystem g2 = RootSystem::build(CartanType::parse("G2"));
  const auto sum = g2.index_of({1, 1});
  REQUIRE(sum.has_value());
  CHECK(std::abs(g2.chevalley(0, *sum)) == 2);

  const RootSystem b3 = RootSystem::build(CartanType::parse("B3"));
  const LieAlgebra n = b3.positive_part();
  CHECK(n.dim() == 9);
  CHECK_FALSE(validate(n.dim(), n.brackets()).has_value());
}

TEST_CASE("|N| = p + 1 and antisymmetry on every pair") {
  for (const auto& t : supported_types(5)) {
    CAPTURE(t.name());
    const RootSystem rs = RootSystem::build(t);
    for (std::size_t a = 0; a < rs.positive_count(); ++a)
      for (std::size_t b = 0; b < rs.positive_count(); ++b) {
        const RootCoords s = add(rs.root(a), rs.root(b));
        if (!rs.is_root(s)) {
          CHECK(rs.chevalley(a, b) == 0);
          continue;
        }
        const auto str = rs.root_string(rs.root(b), rs.root(a));
        CHECK(std::abs(rs.chevalley(a, b)) == 1 - str.p);
        CHECK(rs.chevalley(a, b) == -rs.chevalley(b, a));
        // N_{-a,-b} = -N_{a,b}
        CHECK(rs.chevalley_general(add(RootCoords(t.rank, 0), rs.root(a), -1), add(RootCoords(t.rank, 0), rs.root(b), -1)) ==
              -rs.chevalley(a, b));
      }
    const LieAlgebra n = rs.positive_part();
    CHECK_FALSE(validate(n.dim(), n.brackets()).has_value());
  }
}

TEST_CASE("classical matrix realisations agree after rescaling") {
  for (const auto& t : supported_types(6)) {
    if (!t.classical()) continue;
    CAPTURE(t.name());
    const RootSystem rs = RootSystem::build(t);
    const auto check = cross_check_realization(rs);
    CHECK_MESSAGE(check.ok, check.detail);
    CHECK(classical_root_matrices(rs).size() == rs.positive_count());
  }
}

TEST_CASE("epsilon coordinates") {
  const RootSystem c3 = RootSystem::build(CartanType::parse("C3"));
  CHECK(c3.epsilon_label(c3.gamma_max()) == "2e1");
  const RootSystem b3 = RootSystem::build(CartanType::parse("B3"));
  CHECK(b3.epsilon_label(b3.root(2)) == "e3");
  for (const auto& r : b3.positive()) CHECK(b3.from_epsilon(b3.epsilon_coords(r)) == r);
  CHECK(b3.simple_label(b3.gamma_max()) == "g1+2g2+2g3");
}
