#include "adinv/lie_algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace adinv {

namespace {

std::string describe(const JacobiViolation& v) {
  std::ostringstream os;
  os << "Jacobi identity fails at basis triple (" << v.i + 1 << "," << v.j + 1 << "," << v.k + 1 << ")";
  return os.str();
}

std::vector<std::vector<Term>> build_table(std::size_t dim, const BracketTable& brackets) {
  std::vector<std::vector<Term>> table(dim * dim);
  for (const auto& [key, terms] : brackets) {
    const auto [i, j] = key;
    table[i * dim + j] = terms;
    auto& neg = table[j * dim + i];
    for (const auto& t : terms) neg.push_back({t.k, -t.c});
  }
  return table;
}

void check_indices(std::size_t dim, const BracketTable& brackets) {
  for (const auto& [key, terms] : brackets) {
    const auto [i, j] = key;
    if (i >= dim || j >= dim) throw MalformedInput("bracket index out of range");
    if (i >= j) throw MalformedInput("bracket keys must satisfy i < j");
    for (std::size_t t = 0; t < terms.size(); ++t) {
      if (terms[t].k >= dim) throw MalformedInput("bracket term index out of range");
      if (terms[t].c == 0) throw MalformedInput("bracket term with zero coefficient");
      if (t > 0 && terms[t - 1].k >= terms[t].k) throw MalformedInput("bracket terms must have increasing indices");
    }
  }
}

// acc += c * [e_a, e_b]
void add_bracket(Vec& acc, const std::vector<std::vector<Term>>& table, std::size_t dim, std::size_t a,
                 std::size_t b, const Rational& c) {
  for (const auto& t : table[a * dim + b]) acc[t.k] += c * t.c;
}

}  // namespace

JacobiError::JacobiError(JacobiViolation v) : MalformedInput(describe(v)), violation_(std::move(v)) {}

std::optional<JacobiViolation> validate(std::size_t dim, const BracketTable& brackets) {
  check_indices(dim, brackets);
  const auto table = build_table(dim, brackets);
  // [[e_i,e_j],e_k] = sum_m c^m_ij [e_m,e_k]
  auto term = [&](Vec& acc, std::size_t a, std::size_t b, std::size_t c) {
    for (const auto& t : table[a * dim + b]) add_bracket(acc, table, dim, t.k, c, t.c);
  };
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      for (std::size_t k = j + 1; k < dim; ++k) {
        if (table[i * dim + j].empty() && table[j * dim + k].empty() && table[k * dim + i].empty()) continue;
        Vec acc = zero_vec(dim);
        term(acc, i, j, k);
        term(acc, j, k, i);
        term(acc, k, i, j);
        if (!is_zero(acc)) return JacobiViolation{i, j, k, std::move(acc)};
      }
  return std::nullopt;
}

LieAlgebra LieAlgebra::create(std::size_t dim, std::vector<std::string> labels, BracketTable brackets) {
  if (labels.empty()) {
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i + 1));
  }
  if (labels.size() != dim) throw MalformedInput("label count does not match dimension");
  for (auto it = brackets.begin(); it != brackets.end();) {
    if (it->second.empty()) {
      it = brackets.erase(it);
    } else {
      ++it;
    }
  }
  if (auto v = validate(dim, brackets)) throw JacobiError(*v);
  LieAlgebra g;
  g.dim_ = dim;
  g.labels_ = std::move(labels);
  g.brackets_ = std::move(brackets);
  g.table_ = build_table(dim, g.brackets_);
  return g;
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) { return create(dim, {}, {}); }

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw std::invalid_argument("vector length mismatch");
  Vec out = zero_vec(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0 || i == j) continue;
      const Rational c = x[i] * y[j];
      for (const auto& t : table_[i * dim_ + j]) out[t.k] += c * t.c;
    }
  }
  return out;
}

Vec LieAlgebra::bracket_basis_vec(std::size_t i, const Vec& y) const {
  Vec out = zero_vec(dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    if (y[j] == 0) continue;
    for (const auto& t : table_[i * dim_ + j]) out[t.k] += y[j] * t.c;
  }
  return out;
}

MatrixQ LieAlgebra::ad(const Vec& x) const {
  MatrixQ m(dim_, dim_);
  for (std::size_t col = 0; col < dim_; ++col) {
    Vec image = zero_vec(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i] == 0) continue;
      for (const auto& t : table_[i * dim_ + col]) image[t.k] += x[i] * t.c;
    }
    for (std::size_t r = 0; r < dim_; ++r) m(r, col) = image[r];
  }
  return m;
}

std::vector<std::size_t> SeriesReport::descending_dims() const {
  std::vector<std::size_t> d;
  for (const auto& s : descending) d.push_back(s.dim());
  return d;
}

std::vector<std::size_t> SeriesReport::ascending_dims() const {
  std::vector<std::size_t> d;
  for (const auto& s : ascending) d.push_back(s.dim());
  return d;
}

const Subspace& SeriesReport::lower(std::size_t j) const {
  return j < descending.size() ? descending[j] : descending.back();
}

const Subspace& SeriesReport::upper(std::size_t j) const {
  return j < ascending.size() ? ascending[j] : ascending.back();
}

Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  const std::size_t n = g.dim();
  SparseEliminator e(n);
  const auto bv = b.vectors();
  for (std::size_t r = 0; r < a.dim() && !e.full(); ++r) {
    const Vec x = a.basis().row(r);
    for (const auto& y : bv) {
      e.add_dense(g.bracket(x, y));
      if (e.full()) break;
    }
  }
  return Subspace::from_eliminator(e);
}

namespace {

// [g, W]
Subspace ad_image(const LieAlgebra& g, const Subspace& w) {
  const std::size_t n = g.dim();
  SparseEliminator e(n);
  const auto wv = w.vectors();
  for (const auto& y : wv) {
    for (std::size_t i = 0; i < n && !e.full(); ++i) e.add_dense(g.bracket_basis_vec(i, y));
    if (e.full()) break;
  }
  return Subspace::from_eliminator(e);
}

// {X : [X, u] in W for every u in `us`}
Subspace preimage(const LieAlgebra& g, const std::vector<Vec>& us, const Subspace& w) {
  const std::size_t n = g.dim();
  SparseEliminator e(n);
  for (const auto& u : us) {
    // rows indexed by non-pivot coordinate f: entry m is (reduce([e_m, u]))_f
    std::map<std::size_t, SparseRow> rows;
    for (std::size_t m = 0; m < n; ++m) {
      Vec v = g.bracket_basis_vec(m, u);
      if (is_zero(v)) continue;
      if (w.dim() > 0) v = w.reduce(v);
      for (std::size_t f = 0; f < n; ++f) {
        if (v[f] != 0) rows[f].emplace_back(m, v[f]);
      }
    }
    for (auto& [f, row] : rows) {
      e.add_row(std::move(row));
      if (e.full()) return Subspace::zero(n);
    }
  }
  return Subspace::span(n, e.kernel_basis());
}

std::vector<Vec> basis_vectors(std::size_t n) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(unit_vec(n, i));
  return out;
}

template <typename Step>
void iterate_series(std::vector<Subspace>& terms, std::size_t& stable, bool& stabilized, std::size_t cap,
                    std::size_t first, Step step) {
  while (true) {
    Subspace next = step(terms.back());
    if (next == terms.back()) {
      stable = terms.size() - 1;
      return;
    }
    if (std::find(terms.begin() + first, terms.end(), next) != terms.end() || terms.size() > cap) {
      stabilized = false;
      stable = terms.size() - 1;
      return;
    }
    terms.push_back(std::move(next));
  }
}

}  // namespace

SeriesReport relative_series(const LieAlgebra& g, const Subspace& v) {
  const std::size_t n = g.dim();
  if (v.ambient_dim() != n) throw std::invalid_argument("subspace ambient dimension mismatch");
  SeriesReport rep;
  const std::size_t cap = 2 * n + 4;
  rep.descending.push_back(v);
  iterate_series(rep.descending, rep.descending_stable, rep.descending_stabilized, cap, 0,
                 [&](const Subspace& prev) { return ad_image(g, prev); });

  const auto all = basis_vectors(n);
  rep.ascending.push_back(Subspace::zero(n));
  rep.ascending.push_back(preimage(g, v.vectors(), Subspace::zero(n)));
  iterate_series(rep.ascending, rep.ascending_stable, rep.ascending_stabilized, cap, 1,
                 [&](const Subspace& prev) { return preimage(g, all, prev); });
  return rep;
}

Subspace centralizer(const LieAlgebra& g, const Subspace& v) {
  if (v.ambient_dim() != g.dim()) throw std::invalid_argument("subspace ambient dimension mismatch");
  return preimage(g, v.vectors(), Subspace::zero(g.dim()));
}

Subspace center(const LieAlgebra& g) { return centralizer(g, Subspace::full(g.dim())); }

Subspace commutator(const LieAlgebra& g) { return ad_image(g, Subspace::full(g.dim())); }

bool is_ideal(const LieAlgebra& g, const Subspace& v) { return v.contains(ad_image(g, v)); }

std::optional<std::size_t> nilpotency_class(const LieAlgebra& g) {
  const auto rep = central_series(g);
  if (rep.descending.back().dim() != 0) return std::nullopt;
  return rep.descending.size() - 1;
}

LieAlgebra direct_sum(const std::vector<LieAlgebra>& parts) {
  std::size_t dim = 0;
  std::vector<std::string> labels;
  BracketTable brackets;
  for (const auto& p : parts) {
    for (const auto& [key, terms] : p.brackets()) {
      std::vector<Term> shifted;
      for (const auto& t : terms) shifted.push_back({t.k + dim, t.c});
      brackets[{key.first + dim, key.second + dim}] = std::move(shifted);
    }
    labels.insert(labels.end(), p.labels().begin(), p.labels().end());
    dim += p.dim();
  }
  return LieAlgebra::create(dim, std::move(labels), std::move(brackets));
}

LieAlgebra quotient_by_coordinates(const LieAlgebra& g, const std::vector<std::size_t>& keep) {
  std::vector<std::size_t> index(g.dim(), g.dim());
  for (std::size_t a = 0; a < keep.size(); ++a) index.at(keep[a]) = a;
  std::vector<std::string> labels;
  for (auto k : keep) labels.push_back(g.labels()[k]);
  BracketTable brackets;
  for (const auto& [key, terms] : g.brackets()) {
    const std::size_t i = index[key.first], j = index[key.second];
    if (i == g.dim() || j == g.dim()) continue;
    std::vector<Term> kept;
    for (const auto& t : terms)
      if (index[t.k] != g.dim()) kept.push_back({index[t.k], t.c});
    if (!kept.empty()) brackets[{i, j}] = std::move(kept);
  }
  return LieAlgebra::create(keep.size(), std::move(labels), std::move(brackets));
}

}  // namespace adinv
