#include "adinv/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace adinv {

MatrixQ::MatrixQ(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

MatrixQ MatrixQ::identity(std::size_t n) {
  MatrixQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

MatrixQ MatrixQ::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  MatrixQ m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vec MatrixQ::row(std::size_t r) const {
  auto v = row_view(r);
  return Vec(v.begin(), v.end());
}

std::vector<Vec> MatrixQ::row_list() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

MatrixQ MatrixQ::transpose() const {
  MatrixQ t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

MatrixQ MatrixQ::operator*(const MatrixQ& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix shape mismatch");
  MatrixQ out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) {
        if (other(k, c) != 0) out(r, c) += a * other(k, c);
      }
    }
  }
  return out;
}

Vec MatrixQ::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  Vec out = zero_vec(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (v[c] != 0 && (*this)(r, c) != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

Vec MatrixQ::apply_left(const Vec& v) const {
  if (v.size() != rows_) throw std::invalid_argument("vector length mismatch");
  Vec out = zero_vec(cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (v[r] == 0) continue;
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != 0) out[c] += v[r] * (*this)(r, c);
  }
  return out;
}

bool MatrixQ::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

bool MatrixQ::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
}

MatrixQ operator*(const Rational& s, const MatrixQ& m) {
  MatrixQ out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = s * m(r, c);
  return out;
}

MatrixQ operator+(const MatrixQ& a, const MatrixQ& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch");
  MatrixQ out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) + b(r, c);
  return out;
}

SparseRow to_sparse(std::span<const Rational> dense) {
  SparseRow row;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) row.emplace_back(i, dense[i]);
  return row;
}

namespace {

// a += s * b
void axpy(SparseRow& a, const Rational& s, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(std::move(a[i++]));
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, s * b[j].second);
      ++j;
    } else {
      Rational v = a[i].second + s * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  a = std::move(out);
}

}  // namespace

SparseRow SparseEliminator::reduce(SparseRow row) const {
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) break;
    Rational coef = -row.front().second;
    axpy(row, coef, it->second);
  }
  return row;
}

bool SparseEliminator::add_row(SparseRow row) {
  if (full()) return false;
  for (const auto& [c, x] : row)
    if (c >= cols_) throw std::invalid_argument("column index out of range");
  row = reduce(std::move(row));
  if (row.empty()) return false;
  Rational inv = 1 / row.front().second;
  for (auto& entry : row) entry.second *= inv;
  const std::size_t lead = row.front().first;
  pivots_.emplace(lead, std::move(row));
  return true;
}

std::vector<SparseRow> SparseEliminator::reduced_rows() const {
  std::map<std::size_t, SparseRow> done;
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    SparseRow row = it->second;
    for (std::size_t idx = 1; idx < row.size();) {
      const std::size_t col = row[idx].first;
      auto p = done.find(col);
      if (p == done.end()) {
        ++idx;
        continue;
      }
      Rational coef = -row[idx].second;
      axpy(row, coef, p->second);
      // the entry at `col` is gone; keep scanning from the same position
    }
    done.emplace(it->first, std::move(row));
  }
  std::vector<SparseRow> out;
  out.reserve(done.size());
  for (auto& [c, row] : done) out.push_back(std::move(row));
  return out;
}

std::vector<Vec> SparseEliminator::kernel_basis() const {
  const auto rows = reduced_rows();
  std::vector<std::size_t> free_index(cols_, cols_);
  std::vector<std::size_t> free_cols;
  std::vector<bool> is_pivot(cols_, false);
  for (const auto& r : rows) is_pivot[r.front().first] = true;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (!is_pivot[c]) {
      free_index[c] = free_cols.size();
      free_cols.push_back(c);
    }
  }
  std::vector<Vec> basis(free_cols.size(), zero_vec(cols_));
  for (std::size_t f = 0; f < free_cols.size(); ++f) basis[f][free_cols[f]] = 1;
  for (const auto& r : rows) {
    const std::size_t p = r.front().first;
    for (std::size_t k = 1; k < r.size(); ++k) {
      const std::size_t f = free_index[r[k].first];
      basis[f][p] = -r[k].second;
    }
  }
  return basis;
}

Subspace::Subspace(std::size_t ambient, MatrixQ basis, std::vector<std::size_t> pivots)
    : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

Subspace Subspace::zero(std::size_t ambient) { return Subspace(ambient, MatrixQ(0, ambient), {}); }

Subspace Subspace::full(std::size_t ambient) {
  std::vector<std::size_t> piv(ambient);
  for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
  return Subspace(ambient, MatrixQ::identity(ambient), piv);
}

Subspace Subspace::from_eliminator(const SparseEliminator& e) {
  const auto rows = e.reduced_rows();
  MatrixQ basis(rows.size(), e.cols());
  std::vector<std::size_t> piv;
  piv.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    piv.push_back(rows[r].front().first);
    for (const auto& [c, x] : rows[r]) basis(r, c) = x;
  }
  return Subspace(e.cols(), std::move(basis), std::move(piv));
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
  SparseEliminator e(ambient);
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw std::invalid_argument("vector length mismatch");
    e.add_dense(v);
    if (e.full()) break;
  }
  return from_eliminator(e);
}

Subspace Subspace::span(std::size_t ambient, const std::vector<SparseRow>& vectors) {
  SparseEliminator e(ambient);
  for (const auto& v : vectors) {
    e.add_row(v);
    if (e.full()) break;
  }
  return from_eliminator(e);
}

Subspace Subspace::coordinate(std::size_t ambient, const std::vector<std::size_t>& indices) {
  std::vector<Vec> vs;
  for (auto i : indices) vs.push_back(unit_vec(ambient, i));
  return span(ambient, vs);
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("vector length mismatch");
  Vec r = v;
  for (std::size_t row = 0; row < pivots_.size(); ++row) {
    const Rational coef = r[pivots_[row]];
    if (coef == 0) continue;
    for (std::size_t c = pivots_[row]; c < ambient_; ++c) {
      const Rational& b = basis_(row, c);
      if (b != 0) r[c] -= coef * b;
    }
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("ambient dimension mismatch");
  if (other.dim() > dim()) return false;
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

std::vector<Vec> Subspace::annihilator() const {
  SparseEliminator e(ambient_);
  for (std::size_t r = 0; r < dim(); ++r) e.add_dense(basis_.row_view(r));
  return e.kernel_basis();
}

Subspace nullspace(const MatrixQ& m) {
  SparseEliminator e(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    e.add_dense(m.row_view(r));
    if (e.full()) break;
  }
  return Subspace::span(m.cols(), e.kernel_basis());
}

RrefResult rref(const MatrixQ& m) {
  SparseEliminator e(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) e.add_dense(m.row_view(r));
  const auto rows = e.reduced_rows();
  RrefResult out{MatrixQ(m.rows(), m.cols()), rows.size(), {}};
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out.pivots.push_back(rows[r].front().first);
    for (const auto& [c, x] : rows[r]) out.matrix(r, c) = x;
  }
  return out;
}

namespace {

// rows scaled to integers
std::vector<std::vector<mpz_class>> integer_rows(const MatrixQ& m) {
  std::vector<std::vector<mpz_class>> out(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
  }
  return out;
}

constexpr std::uint64_t kPrime = 2305843009213693951ULL;  // 2^61 - 1

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mulmod(a, a))
    if (e & 1) r = mulmod(r, a);
  return r;
}

std::size_t rank_mod_p(const std::vector<std::vector<mpz_class>>& rows, std::size_t cols) {
  std::vector<std::vector<std::uint64_t>> a(rows.size(), std::vector<std::uint64_t>(cols));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = mpz_fdiv_ui(rows[r][c].get_mpz_t(), kPrime);
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < a.size(); ++c) {
    std::size_t piv = rk;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rk]);
    const std::uint64_t inv = powmod(a[rk][c], kPrime - 2);
    for (std::size_t r = rk + 1; r < a.size(); ++r) {
      if (a[r][c] == 0) continue;
      const std::uint64_t f = mulmod(a[r][c], inv);
      for (std::size_t j = c; j < cols; ++j) a[r][j] = (a[r][j] + kPrime - mulmod(f, a[rk][j])) % kPrime;
    }
    ++rk;
  }
  return rk;
}

// fraction-free (Bareiss) elimination with column skipping; divisions are exact
std::size_t rank_bareiss(std::vector<std::vector<mpz_class>> a, std::size_t cols) {
  std::size_t rk = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && rk < a.size(); ++c) {
    std::size_t piv = rk;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rk]);
    for (std::size_t r = rk + 1; r < a.size(); ++r) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[r][j] = a[rk][c] * a[r][j] - a[r][c] * a[rk][j];
        mpz_divexact(a[r][j].get_mpz_t(), a[r][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][c] = 0;
    }
    prev = a[rk][c];
    ++rk;
  }
  return rk;
}

}  // namespace

std::size_t rank(const MatrixQ& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  const auto rows = integer_rows(m);
  // rank over Q is at least the rank modulo a prime
  const std::size_t bound = std::min(m.rows(), m.cols());
  if (rank_mod_p(rows, m.cols()) == bound) return bound;
  return rank_bareiss(rows, m.cols());
}

Subspace span_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
  auto vs = a.vectors();
  auto wb = b.vectors();
  vs.insert(vs.end(), wb.begin(), wb.end());
  return Subspace::span(a.ambient_dim(), vs);
}

Subspace span_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
  const std::size_t n = a.ambient_dim();
  // Zassenhaus: rows (u | u) for u in a, (w | 0) for w in b; rows with a zero
  // left block after reduction span the intersection in their right block.
  SparseEliminator e(2 * n);
  for (std::size_t r = 0; r < a.dim(); ++r) {
    SparseRow row;
    const auto u = a.basis().row_view(r);
    for (std::size_t c = 0; c < n; ++c)
      if (u[c] != 0) row.emplace_back(c, u[c]);
    for (std::size_t c = 0; c < n; ++c)
      if (u[c] != 0) row.emplace_back(n + c, u[c]);
    e.add_row(std::move(row));
  }
  for (std::size_t r = 0; r < b.dim(); ++r) e.add_row(to_sparse(b.basis().row_view(r)));
  std::vector<SparseRow> inter;
  for (auto& row : e.reduced_rows()) {
    if (row.front().first < n) continue;
    SparseRow shifted;
    for (auto& [c, x] : row) shifted.emplace_back(c - n, x);
    inter.push_back(std::move(shifted));
  }
  return Subspace::span(n, inter);
}

bool contains(const Subspace& a, const Subspace& b) { return a.contains(b); }

Rational determinant(const MatrixQ& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  MatrixQ a = m;
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t c = col; c < n; ++c) std::swap(a(piv, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    const Rational inv = 1 / a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      const Rational f = a(r, col) * inv;
      for (std::size_t c = col; c < n; ++c)
        if (a(col, c) != 0) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

}  // namespace adinv
