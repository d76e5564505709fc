#include "adinv/graph_enum.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace adinv {

namespace {

// bit position of the pair (a, b), a < b, among the n(n-1)/2 pairs
std::size_t pair_bit(std::size_t n, std::size_t a, std::size_t b) {
  if (a > b) std::swap(a, b);
  return a * n - a * (a + 1) / 2 + (b - a - 1);
}

std::uint32_t canonical_mask(std::size_t n, std::uint32_t mask) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint32_t best = ~std::uint32_t{0};
  do {
    std::uint32_t m = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (mask >> pair_bit(n, a, b) & 1) m |= std::uint32_t{1} << pair_bit(n, perm[a], perm[b]);
    best = std::min(best, m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool connected(std::size_t n, std::uint32_t mask) {
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::size_t a = 0; a < n; ++a) {
      if (!(frontier >> a & 1)) continue;
      for (std::size_t b = 0; b < n; ++b)
        if (a != b && (mask >> pair_bit(n, a, b) & 1) && !(seen >> b & 1)) next |= 1u << b;
    }
    seen |= next;
    frontier = next;
  }
  return seen == (1u << n) - 1;
}

Graph from_mask(std::size_t n, std::uint32_t mask) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i + 1));
  std::vector<Graph::Edge> edges;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (mask >> pair_bit(n, a, b) & 1) edges.emplace_back(a, b);
  return Graph::make(std::move(labels), std::move(edges));
}

}  // namespace

std::uint32_t canonical_code(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 7) throw std::invalid_argument("canonical_code supports at most 7 vertices");
  std::uint32_t mask = 0;
  for (const auto& [a, b] : g.edges()) mask |= std::uint32_t{1} << pair_bit(n, a, b);
  return canonical_mask(n, mask);
}

std::vector<Graph> connected_graphs(std::size_t max_vertices) {
  if (max_vertices > 7) throw std::invalid_argument("connected_graphs supports at most 7 vertices");
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    std::set<std::uint32_t> codes;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs); ++mask) {
      // a connected graph needs at least n-1 edges
      if (static_cast<std::size_t>(__builtin_popcount(mask)) + 1 < n) continue;
      if (!connected(n, mask)) continue;
      codes.insert(canonical_mask(n, mask));
    }
    for (auto c : codes) out.push_back(from_mask(n, c));
  }
  return out;
}

std::vector<Graph> disjoint_unions(const std::vector<Graph>& components, std::size_t max_vertices) {
  std::vector<Graph> out;
  std::vector<std::size_t> chosen;
  // depth-first over non-decreasing index sequences
  auto rec = [&](auto&& self, std::size_t start, std::size_t used) -> void {
    if (chosen.size() >= 2) {
      std::vector<Graph> parts;
      for (auto i : chosen) parts.push_back(components[i]);
      out.push_back(disjoint_union(parts));
    }
    for (std::size_t i = start; i < components.size(); ++i) {
      const std::size_t v = components[i].vertex_count();
      if (used + v > max_vertices) continue;
      chosen.push_back(i);
      self(self, i, used + v);
      chosen.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace adinv
