#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "adinv/lie_algebra.hpp"

namespace adinv {

/// Basis of the space of symmetric bilinear forms satisfying
/// <[X,Y],Z> + <Y,[X,Z]> = 0. Each member is a symmetric dim x dim matrix.
struct FormSpace {
  std::size_t algebra_dim = 0;
  std::vector<MatrixQ> basis;
  std::size_t dim() const { return basis.size(); }
};

/// Position of the unknown B(a,b), a <= b, in the packed upper triangle.
std::size_t symmetric_index(std::size_t n, std::size_t a, std::size_t b);

/// Linear system over the n(n+1)/2 packed unknowns of a symmetric form. With
/// `all_triples` false only triples (i,j,l) with i < j are assembled; the
/// solution set is the same.
MatrixQ invariance_system(const LieAlgebra& g, bool all_triples = false);

FormSpace invariant_form_space(const LieAlgebra& g);

/// Nullspace of the form's matrix.
Subspace radical(const MatrixQ& form);

/// f-orthogonal complement of w: {Y : <X,Y> = 0 for all X in w}.
Subspace orthogonal_complement(const MatrixQ& form, const Subspace& w);

struct InvarianceFailure {
  std::size_t i, j, l;  // 0-based triple with <[e_i,e_j],e_l> + <e_j,[e_i,e_l]> != 0
  Rational value;
};
struct RadicalFailure {
  Vec vector;
};
struct NotSymmetric {};
using FormFailure = std::variant<NotSymmetric, InvarianceFailure, RadicalFailure>;

/// nullopt when the form is symmetric, invariant on every basis triple, and
/// nondegenerate. Throws std::invalid_argument on size mismatch.
std::optional<FormFailure> verify_form(const LieAlgebra& g, const MatrixQ& form);

/// First invariance violation only (degenerate forms allowed).
std::optional<InvarianceFailure> invariance_violation(const LieAlgebra& g, const MatrixQ& form);

class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct OrthogonalityLevel {
  std::size_t j;
  std::size_t dim_lower;  // dim C^j(V)
  std::size_t dim_upper;  // dim C_j(V)
  bool complement_equal;  // C^j(V)^perp == C_j(V)
  bool dimension_identity;
};

struct OrthogonalityReport {
  std::vector<OrthogonalityLevel> levels;
  bool ok = true;
};

/// Checks C^j(V)^perp = C_j(V) and the dimension identity for every j >= 1 up
/// to stabilisation of both series. Throws PreconditionError unless the form
/// passes verify_form.
OrthogonalityReport check_orthogonality_relations(const LieAlgebra& g, const MatrixQ& form, const Subspace& v);

struct DecisionPolicy {
  std::uint64_t seed = 20240601;
  std::size_t witness_attempts = 16;
  std::size_t mc_trials = 40;
  std::uint64_t mc_range = 65536;
  std::size_t symbolic_max_dim = 12;
  std::size_t symbolic_max_formspace_dim = 8;
};

enum class NondegeneracyKind { Admits, RefutedSymbolic, RefutedMonteCarlo };

struct NondegeneracyVerdict {
  NondegeneracyKind kind = NondegeneracyKind::RefutedSymbolic;
  std::optional<MatrixQ> witness;       // Admits
  std::string method;                   // how the decision was reached
  std::optional<Vec> radical_vector;    // common-radical refutations
  std::size_t trials = 0;               // Monte Carlo
  std::uint64_t range = 0;              // Monte Carlo
  Rational bound = 0;                   // (n/S)^k for Monte Carlo
  std::string notes;
};

/// Searches the pencil sum t_i B_i for a nondegenerate member. Admits carries
/// an exactly verified witness; RefutedSymbolic means det of the pencil is the
/// zero polynomial; RefutedMonteCarlo reports the Schwartz-Zippel bound.
NondegeneracyVerdict decide_nondegenerate(const FormSpace& space, const DecisionPolicy& policy);

/// Scales so the first nonzero entry in row-major order is 1.
MatrixQ normalize_witness(const MatrixQ& form);

/// Vectors orthogonal to everything under every form of the space.
Subspace common_radical(const FormSpace& space);

struct Signature {
  std::size_t positive = 0, negative = 0, zero = 0;
};
Signature signature(const MatrixQ& symmetric);

}  // namespace adinv
