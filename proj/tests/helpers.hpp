#pragma once

#include <initializer_list>
#include <tuple>

#include "adinv/free_nilpotent.hpp"
#include "adinv/graph_algebra.hpp"
#include "adinv/lie_algebra.hpp"
#include "adinv/rng.hpp"

namespace testing {

using namespace adinv;

/// Brackets given as 1-based (i, j, k): [e_i, e_j] = e_k.
inline BracketTable unit_brackets(std::initializer_list<std::tuple<int, int, int>> list) {
  BracketTable t;
  for (auto [i, j, k] : list) t[{std::size_t(i - 1), std::size_t(j - 1)}].push_back({std::size_t(k - 1), Rational(1)});
  return t;
}

inline LieAlgebra algebra(std::size_t dim, std::initializer_list<std::tuple<int, int, int>> list) {
  return LieAlgebra::create(dim, {}, unit_brackets(list));
}

inline LieAlgebra h3() { return algebra(3, {{1, 2, 3}}); }

/// [e1,e2]=e7, [e2,e3]=e8, [e3,e4]=e5, [e1,e4]=e6.
inline LieAlgebra eight_dim_example() { return algebra(8, {{1, 2, 7}, {2, 3, 8}, {3, 4, 5}, {1, 4, 6}}); }

inline Graph graph_from(std::size_t n, std::vector<Graph::Edge> edges) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i + 1));
  return Graph::make(names, std::move(edges));
}

inline Graph cycle(std::size_t n) {
  std::vector<Graph::Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return graph_from(n, e);
}

inline Graph path(std::size_t n) {
  std::vector<Graph::Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return graph_from(n, e);
}

inline Vec random_vec(SplitMix64& rng, std::size_t n, int range = 5) {
  Vec v(n);
  for (auto& x : v) x = Rational(static_cast<long>(rng.uniform(0, 2 * range)) - range);
  return v;
}

inline Subspace random_subspace(SplitMix64& rng, std::size_t n, std::size_t spanning) {
  std::vector<Vec> vs;
  for (std::size_t i = 0; i < spanning; ++i) vs.push_back(random_vec(rng, n));
  return Subspace::span(n, vs);
}

inline MatrixQ random_matrix(SplitMix64& rng, std::size_t r, std::size_t c, int range = 9) {
  MatrixQ m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(static_cast<long>(rng.uniform(0, 2 * range)) - range);
  return m;
}

}  // namespace testing
