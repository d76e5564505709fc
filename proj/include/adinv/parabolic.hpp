#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adinv/obstructions.hpp"
#include "adinv/root_system.hpp"

namespace adinv {

/// Cartan type plus Pi_0 as sorted 0-based simple-root indices.
struct ParabolicSpec {
  CartanType type;
  std::vector<std::size_t> pi0;

  /// "B3:g3", "E6:g2,g4" (1-based simple-root indices).
  static ParabolicSpec parse(std::string_view text);
  std::string name() const;
};

class ParabolicNilradical {
 public:
  /// Throws MalformedInput for an empty or out-of-range Pi_0.
  static ParabolicNilradical build(std::shared_ptr<const RootSystem> rs, std::vector<std::size_t> pi0);
  static ParabolicNilradical build(const ParabolicSpec& spec);

  const RootSystem& roots() const { return *rs_; }
  std::shared_ptr<const RootSystem> root_system() const { return rs_; }
  const std::vector<std::size_t>& pi0() const { return pi0_; }
  /// Positive-root index of each basis vector, in positive-root order.
  const std::vector<std::size_t>& basis_roots() const { return basis_roots_; }
  std::optional<std::size_t> basis_of(std::size_t root_index) const;
  /// o(gamma) = sum of coord_alpha(gamma) over alpha in Pi_0.
  int order(std::size_t root_index) const;
  std::size_t k() const { return k_; }
  const LieAlgebra& algebra() const { return algebra_; }
  /// g_(i) for i = 0..k (g_(0) is the zero subspace).
  const Subspace& layer(std::size_t i) const { return layers_.at(i); }
  std::vector<std::size_t> layer_dims() const;  // i = 1..k
  std::string name() const;

 private:
  std::shared_ptr<const RootSystem> rs_;
  std::vector<std::size_t> pi0_;
  std::vector<std::size_t> basis_roots_;
  std::vector<std::size_t> basis_of_root_;
  std::size_t k_ = 0;
  LieAlgebra algebra_;
  std::vector<Subspace> layers_;
};

struct GradingReport {
  bool multiplicative = false;  // [g_(i), g_(j)] in g_(i+j)
  bool series_matches = false;  // C^j(n) = sum_{i > j} g_(i)
  bool center_matches = false;  // z = g_(k)
  bool generated = false;       // [g_(1), g_(i-1)] = g_(i), i >= 2
  std::vector<std::size_t> series_dims;
  std::vector<std::size_t> layer_dims;
  bool ok() const { return multiplicative && series_matches && center_matches && generated; }
};

GradingReport verify_lcs_grading(const ParabolicNilradical& pn);

/// gamma = delta + beta_t + ... + beta_1 (root indices into the positive roots).
struct DecompCertificate {
  std::size_t gamma = 0;
  std::size_t alpha = 0;  // simple-root index in Pi_0
  std::size_t delta = 0;
  std::vector<std::size_t> betas;  // beta_t, ..., beta_1
  std::size_t t() const { return betas.size(); }
};

/// Breadth-first search over subtractions of roots with coord_alpha != 0,
/// preferring a remainder with coord_alpha = 0 at every depth. Throws
/// PreconditionError when |Pi_0| < 2, o(gamma) != k or alpha not in Pi_0, and
/// std::logic_error when no decomposition exists.
DecompCertificate decompose_root(const ParabolicNilradical& pn, std::size_t gamma, std::size_t alpha);

/// Empty string when every invariant holds (sums, coordinates, partial sums
/// are roots of the nilradical, t <= coord_alpha(gamma)).
std::string verify_decomposition(const ParabolicNilradical& pn, const DecompCertificate& c);

enum class NilradicalPrediction { Abelian, N23, N32, Refutes };

struct NilradicalClassification {
  NilradicalPrediction prediction = NilradicalPrediction::Refutes;
  /// multiple-roots, abelian, free-3-2, free-2-3, theta, heisenberg-reiter,
  /// dim-series, dim-count, free-2-step
  std::string argument;
  std::string reason;
};

std::string to_string(NilradicalPrediction p);

NilradicalClassification classify_nilradical(const RootSystem& rs, const std::vector<std::size_t>& pi0);

/// Generator layer g_(1) split by epsilon shape (classical types: e_i - e_j,
/// e_i + e_j, e_i) or, for |Pi_0| >= 2, by the Pi_0 root a vector involves.
std::vector<Decomposition> nilradical_decompositions(const ParabolicNilradical& pn);

/// V_1 = span X_{e_i - e_j}, V_2 = span X_{e_i + e_j} (i <= l < j) for types C
/// and D with a single root; nullopt otherwise.
std::optional<std::pair<Subspace, Subspace>> heisenberg_reiter_split(const ParabolicNilradical& pn);

/// Basis change onto free_nilpotent(p, k) sending the free generators to the
/// root vectors of g_(1); nullopt when the bracket tables do not match.
std::optional<MatrixQ> match_free_layers(const ParabolicNilradical& pn, std::size_t p, std::size_t k);

}  // namespace adinv
