#pragma once

#include <vector>

#include "adinv/graph_algebra.hpp"

namespace adinv {

/// Connected simple graphs on 1..max_vertices vertices, one per isomorphism
/// class, ordered by vertex count then canonical code. max_vertices <= 7.
std::vector<Graph> connected_graphs(std::size_t max_vertices);

/// Disjoint unions of at least two members of `components` (a multiset,
/// indices non-decreasing) with at most max_vertices vertices in total.
std::vector<Graph> disjoint_unions(const std::vector<Graph>& components, std::size_t max_vertices);

/// Smallest adjacency bitmask over all vertex permutations (<= 7 vertices).
std::uint32_t canonical_code(const Graph& g);

}  // namespace adinv
