#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adinv/linalg.hpp"

namespace adinv {

/// One term c * e_k of a bracket expansion (0-based k).
struct Term {
  std::size_t k;
  Rational c;
  bool operator==(const Term&) const = default;
};

/// [e_i, e_j] for i < j (0-based). Pairs absent from the map bracket to zero.
using BracketTable = std::map<std::pair<std::size_t, std::size_t>, std::vector<Term>>;

struct JacobiViolation {
  std::size_t i, j, k;  // 0-based, i < j < k
  Vec jacobiator;       // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
};

/// Thrown by LieAlgebra::create when the table fails the Jacobi identity.
class JacobiError : public MalformedInput {
 public:
  explicit JacobiError(JacobiViolation v);
  const JacobiViolation& violation() const { return violation_; }

 private:
  JacobiViolation violation_;
};

/// Finite-dimensional Lie algebra given by rational structure constants on a
/// labelled basis. Only [e_i, e_j] with i < j is stored; antisymmetry is
/// implied. Instances are immutable and always satisfy Jacobi.
class LieAlgebra {
 public:
  LieAlgebra() = default;

  /// Validates indices and Jacobi; throws MalformedInput / JacobiError.
  static LieAlgebra create(std::size_t dim, std::vector<std::string> labels, BracketTable brackets);
  static LieAlgebra abelian(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const BracketTable& brackets() const { return brackets_; }

  /// [e_i, e_j] for any i, j.
  const std::vector<Term>& basis_bracket(std::size_t i, std::size_t j) const {
    return table_[i * dim_ + j];
  }
  Vec bracket(const Vec& x, const Vec& y) const;
  Vec bracket_basis_vec(std::size_t i, const Vec& y) const;

  /// Matrix of ad_x (column m is [x, e_m]).
  MatrixQ ad(const Vec& x) const;

  bool is_abelian() const { return brackets_.empty(); }

  bool operator==(const LieAlgebra& other) const {
    return dim_ == other.dim_ && brackets_ == other.brackets_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  BracketTable brackets_;
  std::vector<std::vector<Term>> table_;
};

/// ok (nullopt) iff Jacobi holds on every basis triple; otherwise the first
/// violating triple in lexicographic order. Throws MalformedInput on bad indices.
std::optional<JacobiViolation> validate(std::size_t dim, const BracketTable& brackets);

/// Descending C^j(V) = [g, C^{j-1}(V)] and ascending C_j(V) series.
struct SeriesReport {
  std::vector<Subspace> descending;  // C^0(V) = V, C^1(V), ...
  std::vector<Subspace> ascending;   // C_0(V) = 0, C_1(V) = z(V), ...
  /// First index after which the descending terms repeat (C^j = C^{j+1}).
  std::size_t descending_stable = 0;
  std::size_t ascending_stable = 0;
  bool descending_stabilized = true;
  bool ascending_stabilized = true;

  std::vector<std::size_t> descending_dims() const;
  std::vector<std::size_t> ascending_dims() const;
  /// Term j, repeating the stable value past the computed range.
  const Subspace& lower(std::size_t j) const;
  const Subspace& upper(std::size_t j) const;
};

SeriesReport relative_series(const LieAlgebra& g, const Subspace& v);
inline SeriesReport central_series(const LieAlgebra& g) {
  return relative_series(g, Subspace::full(g.dim()));
}

/// [A, B] as a subspace.
Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b);
/// z(V) = {X : [X, V] = 0}.
Subspace centralizer(const LieAlgebra& g, const Subspace& v);
Subspace center(const LieAlgebra& g);
Subspace commutator(const LieAlgebra& g);
bool is_ideal(const LieAlgebra& g, const Subspace& v);

/// k with C^k(g) = 0 and C^{k-1}(g) != 0; nullopt if g is not nilpotent.
std::optional<std::size_t> nilpotency_class(const LieAlgebra& g);

/// Block-diagonal direct sum; labels are kept, basis concatenated in order.
LieAlgebra direct_sum(const std::vector<LieAlgebra>& parts);

/// Structure constants with the basis vectors in `keep` (ascending indices)
/// retained and every other basis vector set to zero. Only meaningful when the
/// dropped span is an ideal spanned by basis vectors.
LieAlgebra quotient_by_coordinates(const LieAlgebra& g, const std::vector<std::size_t>& keep);

}  // namespace adinv
