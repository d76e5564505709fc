#include <doctest.h>

#include "helpers.hpp"

using namespace adinv;
using namespace testing;

TEST_CASE("validate accepts Lie algebras") {
  CHECK_FALSE(validate(5, {}).has_value());
  CHECK_FALSE(validate(3, unit_brackets({{1, 2, 3}})).has_value());
  // [e1,e3] = e2 on top of h3 still satisfies Jacobi (a solvable algebra).
  CHECK_FALSE(validate(3, unit_brackets({{1, 2, 3}, {1, 3, 2}})).has_value());
}

TEST_CASE("validate reports the first Jacobi violation") {
  // [e1,e2]=e3, [e1,e3]=e1: Jacobiator on (1,2,3) is -e3.
  const auto v = validate(3, unit_brackets({{1, 2, 3}, {1, 3, 1}}));
  REQUIRE(v.has_value());
  CHECK(v->i == 0);
  CHECK(v->j == 1);
  CHECK(v->k == 2);
  CHECK(v->jacobiator == Vec{0, 0, -1});
  CHECK_THROWS_AS(LieAlgebra::create(3, {}, unit_brackets({{1, 2, 3}, {1, 3, 1}})), JacobiError);
  CHECK_THROWS_AS(LieAlgebra::create(2, {}, unit_brackets({{1, 2, 3}})), MalformedInput);
}

TEST_CASE("bracket evaluation") {
  const LieAlgebra g = h3();
  CHECK(g.bracket(unit_vec(3, 0), unit_vec(3, 1)) == unit_vec(3, 2));
  CHECK(g.bracket(unit_vec(3, 1), unit_vec(3, 0)) == Vec{0, 0, -1});
  SplitMix64 rng(1);
  for (int t = 0; t < 10; ++t) {
    const Vec x = random_vec(rng, 3);
    CHECK(is_zero(g.bracket(x, x)));
  }
  // n_{3,2} as the triangle graph algebra: e4 = a^b, e5 = a^c, e6 = b^c.
  const LieAlgebra n = build_graph_algebra(cycle(3)).algebra;
  CHECK(n.bracket(Vec{1, 1, 0, 0, 0, 0}, Vec{0, 1, 1, 0, 0, 0}) == Vec{0, 0, 0, 1, 1, 1});
}

TEST_CASE("relative central series") {
  const auto r = central_series(h3());
  CHECK(r.descending_dims() == std::vector<std::size_t>{3, 1, 0});
  CHECK(r.ascending_dims() == std::vector<std::size_t>{0, 1, 3});

  const auto n23 = central_series(free_nilpotent(2, 3));
  CHECK(n23.descending_dims() == std::vector<std::size_t>{5, 3, 2, 0});
}

TEST_CASE("eight-dimensional example: the identity holds for g and fails for V = span{e1,e2}") {
  const LieAlgebra g = eight_dim_example();
  const auto v = relative_series(g, Subspace::coordinate(8, {0, 1}));
  CHECK(v.lower(1).dim() == 3);
  CHECK(v.upper(1).dim() == 4);
  CHECK(v.lower(1).dim() + v.upper(1).dim() == 7);
  const auto full = central_series(g);
  CHECK(full.lower(1).dim() + full.upper(1).dim() == 8);
}

TEST_CASE("centralizers") {
  const LieAlgebra ab = LieAlgebra::abelian(4);
  CHECK(centralizer(ab, Subspace::coordinate(4, {1, 2})) == Subspace::full(4));
  CHECK(centralizer(h3(), Subspace::coordinate(3, {0})) == Subspace::coordinate(3, {0, 2}));
  CHECK(center(h3()) == Subspace::coordinate(3, {2}));
  CHECK(commutator(h3()) == Subspace::coordinate(3, {2}));
  CHECK(is_ideal(h3(), Subspace::coordinate(3, {2})));
  CHECK_FALSE(is_ideal(h3(), Subspace::coordinate(3, {0})));
}

TEST_CASE("direct sums") {
  const LieAlgebra s = direct_sum({LieAlgebra::abelian(2), h3()});
  CHECK(s.dim() == 5);
  CHECK(center(s).dim() == 3);
  const LieAlgebra n = free_nilpotent(3, 2);
  const LieAlgebra nn = direct_sum({n, n});
  CHECK(nn.dim() == 12);
  CHECK(commutator(nn).dim() == 6);
  CHECK(direct_sum({LieAlgebra::abelian(0), h3()}) == h3());
}

TEST_CASE("free nilpotent algebras") {
  const auto n32 = free_nilpotent_hall(3, 2);
  CHECK(n32.algebra.dim() == 6);
  CHECK(n32.graded_dims == std::vector<std::size_t>{3, 3});
  CHECK(free_nilpotent(2, 2).dim() == 3);
  CHECK(match_free_nilpotent(h3(), {unit_vec(3, 0), unit_vec(3, 1)}, 2, 2).has_value());
  const auto n23 = free_nilpotent_hall(2, 3);
  CHECK(n23.algebra.dim() == 5);
  CHECK(n23.graded_dims == std::vector<std::size_t>{2, 1, 2});
  CHECK(nilpotency_class(n23.algebra) == std::optional<std::size_t>(3));
}

namespace {
long mobius(long n) {
  long result = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

std::size_t witt(std::size_t p, std::size_t d) {
  long sum = 0;
  for (std::size_t e = 1; e <= d; ++e) {
    if (d % e) continue;
    long power = 1;
    for (std::size_t i = 0; i < d / e; ++i) power *= static_cast<long>(p);
    sum += mobius(static_cast<long>(e)) * power;
  }
  return static_cast<std::size_t>(sum / static_cast<long>(d));
}
}  // namespace

TEST_CASE("Hall basis graded dimensions follow the Witt formula") {
  for (std::size_t p = 1; p <= 4; ++p)
    for (std::size_t k = 1; k <= (p <= 2 ? 6u : 4u); ++k) {
      CAPTURE(p);
      CAPTURE(k);
      const auto f = free_nilpotent_hall(p, k);
      REQUIRE(f.graded_dims.size() == k);
      for (std::size_t d = 1; d <= k; ++d) CHECK(f.graded_dims[d - 1] == witt(p, d));
      const auto series = central_series(f.algebra);
      if (p >= 2) CHECK(nilpotency_class(f.algebra) == std::optional<std::size_t>(k));
      CHECK(series.descending.front().dim() == f.algebra.dim());
    }
}

TEST_CASE("free isomorphism round trip") {
  const LieAlgebra tri = build_graph_algebra(cycle(3)).algebra;
  const auto iso = match_free_nilpotent(tri, {unit_vec(6, 0), unit_vec(6, 1), unit_vec(6, 2)}, 3, 2);
  REQUIRE(iso.has_value());
  CHECK(verify_free_isomorphism(tri, *iso, 3, 2));
  // the square graph algebra has the wrong dimension
  const LieAlgebra sq = build_graph_algebra(cycle(4)).algebra;
  CHECK_FALSE(match_free_nilpotent(sq, {unit_vec(8, 0), unit_vec(8, 1), unit_vec(8, 2)}, 3, 2).has_value());
}
