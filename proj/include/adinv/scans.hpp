#pragma once

#include <string>
#include <vector>

#include "adinv/analysis.hpp"
#include "adinv/graph_algebra.hpp"
#include "adinv/parabolic.hpp"

namespace adinv {

struct GraphCase {
  Graph graph;
  std::string descriptor;  // "v1-v2,v2-v3" plus isolated count
  std::size_t vertices = 0, edges = 0;
  GraphClassification predicted;
  Analysis analysis;
  bool dims_ok = false;  // dim = |V|+|E|, dim C^1 = |E|, dim z = |V0|+|E|
  bool agree = false;
};

struct GraphScan {
  std::size_t connected = 0;
  std::size_t unions = 0;
  std::vector<GraphCase> cases;
  std::size_t disagreements() const;
  std::size_t inconsistent() const;
};

std::string graph_descriptor(const Graph& g);
GraphCase analyze_graph_case(const Graph& g, const RunConfig& cfg);

/// Connected graphs on <= max_vertices vertices plus all disjoint unions of
/// two or more of them on <= max_union_vertices vertices.
GraphScan scan_graphs(std::size_t max_vertices, std::size_t max_union_vertices, const RunConfig& cfg);

struct ParabolicCase {
  std::string spec;
  std::size_t dim = 0, k = 0;
  std::vector<std::size_t> layer_dims;
  NilradicalClassification predicted;
  Analysis analysis;
  bool grading_ok = false;
  /// Type-specific check behind the prediction (free isomorphism, Theta,
  /// Heisenberg-Reiter, dimension certificate).
  bool structural_ok = false;
  std::string structural;
  bool agree = false;
};

struct ParabolicScan {
  std::vector<ParabolicCase> cases;
  std::size_t disagreements() const;
  std::size_t inconsistent() const;
};

ParabolicCase analyze_parabolic_case(const ParabolicNilradical& pn, const RunConfig& cfg, bool obstructions_only);

/// Entries are families ("A", "E": every rank up to max_rank) or exact types
/// ("E6", "G2"). Each type contributes every single-root Pi_0 plus a sample of
/// two-root Pi_0: all pairs up to rank 4, otherwise {1,2}, {1,n}, {n-1,n}.
std::vector<ParabolicSpec> parabolic_cases(const std::vector<std::string>& types, std::size_t max_rank);

ParabolicScan scan_parabolics(const std::vector<ParabolicSpec>& specs, const RunConfig& cfg);

}  // namespace adinv
