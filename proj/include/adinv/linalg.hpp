#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "adinv/rational.hpp"

namespace adinv {

/// Dense row-major matrix of rationals with fixed shape.
class MatrixQ {
 public:
  MatrixQ() = default;
  MatrixQ(std::size_t rows, std::size_t cols);

  static MatrixQ identity(std::size_t n);
  /// Every row must have length `cols`.
  static MatrixQ from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row_view(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Vec row(std::size_t r) const;
  std::vector<Vec> row_list() const;

  MatrixQ transpose() const;
  MatrixQ operator*(const MatrixQ& other) const;
  Vec apply(const Vec& v) const;
  /// Row vector times matrix: v^T M.
  Vec apply_left(const Vec& v) const;

  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_zero() const;

  bool operator==(const MatrixQ& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

MatrixQ operator*(const Rational& s, const MatrixQ& m);
MatrixQ operator+(const MatrixQ& a, const MatrixQ& b);

struct RrefResult {
  MatrixQ matrix;  // same shape as the input, zero rows at the bottom
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Unique reduced row echelon form.
RrefResult rref(const MatrixQ& m);

/// Sparse row: strictly increasing column indices, nonzero values.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

SparseRow to_sparse(std::span<const Rational> dense);

/// Incremental Gaussian elimination on sparse rows over a fixed column count.
/// Rows are reduced against the stored pivots on insertion; `reduced_rows`
/// finishes the back substitution and returns the RREF of everything added.
class SparseEliminator {
 public:
  explicit SparseEliminator(std::size_t cols) : cols_(cols) {}

  /// Returns true when the row increased the rank.
  bool add_row(SparseRow row);
  bool add_dense(std::span<const Rational> row) { return add_row(to_sparse(row)); }

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return pivots_.size(); }
  bool full() const { return pivots_.size() == cols_; }

  /// Reduces a row against the current pivots (semi-reduction on leading entries).
  SparseRow reduce(SparseRow row) const;

  /// Fully reduced pivot rows, ordered by pivot column, pivots normalized to 1.
  std::vector<SparseRow> reduced_rows() const;

  /// Basis of the solution set of {row . x = 0 for every added row}.
  std::vector<Vec> kernel_basis() const;

 private:
  std::size_t cols_;
  std::map<std::size_t, SparseRow> pivots_;  // pivot column -> row with leading 1 there
};

/// A subspace of Q^n stored as the RREF of a basis (no zero rows). Equality
/// of subspaces is structural equality of that matrix.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace span(std::size_t ambient, const std::vector<SparseRow>& vectors);
  static Subspace coordinate(std::size_t ambient, const std::vector<std::size_t>& indices);
  static Subspace from_eliminator(const SparseEliminator& e);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const MatrixQ& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Vec> vectors() const { return basis_.row_list(); }

  /// Residual of v after eliminating the pivot coordinates; zero iff v is in the subspace.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  /// Basis of the annihilator {y : b . y = 0 for every basis row b}.
  std::vector<Vec> annihilator() const;

  bool operator==(const Subspace& other) const = default;

 private:
  Subspace(std::size_t ambient, MatrixQ basis, std::vector<std::size_t> pivots);

  std::size_t ambient_ = 0;
  MatrixQ basis_;
  std::vector<std::size_t> pivots_;
};

/// {x : m x = 0}; dim = cols - rank.
Subspace nullspace(const MatrixQ& m);

/// Lattice operations; ambient dimensions must agree.
Subspace span_sum(const Subspace& a, const Subspace& b);
Subspace span_intersect(const Subspace& a, const Subspace& b);
bool contains(const Subspace& a, const Subspace& b);

std::size_t rank(const MatrixQ& m);
/// Exact determinant via fraction-free elimination; square input only.
Rational determinant(const MatrixQ& m);

}  // namespace adinv
