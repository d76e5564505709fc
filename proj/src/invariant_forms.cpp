#include "adinv/invariant_forms.hpp"

#include "adinv/polynomial.hpp"
#include "adinv/rng.hpp"

namespace adinv {

std::size_t symmetric_index(std::size_t n, std::size_t a, std::size_t b) {
  if (a > b) std::swap(a, b);
  // rows 0..a-1 contribute n, n-1, ..., n-a+1 unknowns
  return a * n - a * (a - 1) / 2 + (b - a);
}

namespace {

// Row for <[e_i,e_j],e_l> + <e_j,[e_i,e_l]> in packed unknowns.
SparseRow invariance_row(const LieAlgebra& g, std::size_t i, std::size_t j, std::size_t l) {
  const std::size_t n = g.dim();
  std::map<std::size_t, Rational> acc;
  for (const auto& t : g.basis_bracket(i, j)) acc[symmetric_index(n, t.k, l)] += t.c;
  for (const auto& t : g.basis_bracket(i, l)) acc[symmetric_index(n, j, t.k)] += t.c;
  SparseRow row;
  for (auto& [idx, c] : acc)
    if (c != 0) row.emplace_back(idx, std::move(c));
  return row;
}

MatrixQ unpack(std::size_t n, const Vec& packed) {
  MatrixQ m(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      const Rational& x = packed[symmetric_index(n, a, b)];
      m(a, b) = x;
      m(b, a) = x;
    }
  return m;
}

MatrixQ pencil(const FormSpace& space, const std::vector<Rational>& t) {
  const std::size_t n = space.algebra_dim;
  MatrixQ m(n, n);
  for (std::size_t i = 0; i < space.basis.size(); ++i) {
    if (t[i] == 0) continue;
    const MatrixQ& b = space.basis[i];
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (b(r, c) != 0) m(r, c) += t[i] * b(r, c);
  }
  return m;
}

bool nondegenerate(const MatrixQ& m) { return rank(m) == m.rows(); }

std::vector<Rational> random_point(SplitMix64& rng, std::size_t d, std::uint64_t range) {
  std::vector<Rational> t;
  for (std::size_t i = 0; i < d; ++i) t.emplace_back(static_cast<unsigned long>(rng.uniform(1, range)));
  return t;
}

}  // namespace

MatrixQ invariance_system(const LieAlgebra& g, bool all_triples) {
  const std::size_t n = g.dim();
  const std::size_t unknowns = n * (n + 1) / 2;
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = all_triples ? 0 : i + 1; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        Vec dense = zero_vec(unknowns);
        for (auto& [idx, c] : invariance_row(g, i, j, l)) dense[idx] = c;
        rows.push_back(std::move(dense));
      }
  return MatrixQ::from_rows(rows, unknowns);
}

FormSpace invariant_form_space(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  const std::size_t unknowns = n * (n + 1) / 2;
  SparseEliminator e(unknowns);
  for (std::size_t i = 0; i < n && !e.full(); ++i)
    for (std::size_t j = i + 1; j < n && !e.full(); ++j)
      for (std::size_t l = 0; l < n; ++l) {
        SparseRow row = invariance_row(g, i, j, l);
        if (!row.empty()) e.add_row(std::move(row));
      }
  // Canonical basis: RREF of the solution space.
  const Subspace solutions = Subspace::span(unknowns, e.kernel_basis());
  FormSpace space{n, {}};
  for (std::size_t r = 0; r < solutions.dim(); ++r) space.basis.push_back(unpack(n, solutions.basis().row(r)));
  return space;
}

Subspace radical(const MatrixQ& form) { return nullspace(form); }

Subspace orthogonal_complement(const MatrixQ& form, const Subspace& w) {
  if (w.ambient_dim() != form.rows()) throw std::invalid_argument("ambient dimension mismatch");
  if (w.dim() == 0) return Subspace::full(form.rows());
  return nullspace(w.basis() * form);
}

std::optional<InvarianceFailure> invariance_violation(const LieAlgebra& g, const MatrixQ& form) {
  const std::size_t n = g.dim();
  if (form.rows() != n || form.cols() != n) throw std::invalid_argument("form size does not match algebra");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        Rational v = 0;
        for (const auto& t : g.basis_bracket(i, j)) v += t.c * form(t.k, l);
        for (const auto& t : g.basis_bracket(i, l)) v += t.c * form(j, t.k);
        if (v != 0) return InvarianceFailure{i, j, l, v};
      }
  return std::nullopt;
}

std::optional<FormFailure> verify_form(const LieAlgebra& g, const MatrixQ& form) {
  const std::size_t n = g.dim();
  if (form.rows() != n || form.cols() != n) throw std::invalid_argument("form size does not match algebra");
  if (!form.is_symmetric()) return NotSymmetric{};
  if (auto bad = invariance_violation(g, form)) return *bad;
  const Subspace rad = radical(form);
  if (rad.dim() > 0) return RadicalFailure{rad.basis().row(0)};
  return std::nullopt;
}

OrthogonalityReport check_orthogonality_relations(const LieAlgebra& g, const MatrixQ& form, const Subspace& v) {
  if (verify_form(g, form)) throw PreconditionError("form is not an ad-invariant metric");
  const SeriesReport series = relative_series(g, v);
  const std::size_t last = std::max(series.descending.size(), series.ascending.size());
  OrthogonalityReport rep;
  for (std::size_t j = 1; j <= last; ++j) {
    const Subspace& lower = series.lower(j);
    const Subspace& upper = series.upper(j);
    OrthogonalityLevel lvl{j, lower.dim(), upper.dim(), orthogonal_complement(form, lower) == upper,
                           lower.dim() + upper.dim() == g.dim()};
    rep.ok = rep.ok && lvl.complement_equal && lvl.dimension_identity;
    rep.levels.push_back(lvl);
  }
  return rep;
}

MatrixQ normalize_witness(const MatrixQ& form) {
  for (std::size_t r = 0; r < form.rows(); ++r)
    for (std::size_t c = 0; c < form.cols(); ++c)
      if (form(r, c) != 0) return Rational(1 / form(r, c)) * form;
  return form;
}

Subspace common_radical(const FormSpace& space) {
  const std::size_t n = space.algebra_dim;
  SparseEliminator e(n);
  for (const auto& b : space.basis)
    for (std::size_t r = 0; r < n && !e.full(); ++r) e.add_dense(b.row_view(r));
  return Subspace::span(n, e.kernel_basis());
}

NondegeneracyVerdict decide_nondegenerate(const FormSpace& space, const DecisionPolicy& policy) {
  const std::size_t n = space.algebra_dim;
  const std::size_t d = space.dim();
  NondegeneracyVerdict out;
  auto admit = [&](const MatrixQ& m, std::string method) {
    out.kind = NondegeneracyKind::Admits;
    out.witness = normalize_witness(m);
    out.method = std::move(method);
    return out;
  };

  if (n == 0) return admit(MatrixQ(0, 0), "empty-algebra");
  if (d == 0) {
    out.kind = NondegeneracyKind::RefutedSymbolic;
    out.method = "no-invariant-form";
    out.notes = "the only invariant symmetric form is zero";
    return out;
  }

  // Witness search: the all-ones point first, then random points.
  SplitMix64 rng(split_seed(policy.seed, 0));
  {
    const MatrixQ m = pencil(space, std::vector<Rational>(d, Rational(1)));
    if (nondegenerate(m)) return admit(m, "witness-search");
  }
  for (std::size_t a = 0; a < policy.witness_attempts; ++a) {
    const MatrixQ m = pencil(space, random_point(rng, d, policy.mc_range));
    if (nondegenerate(m)) return admit(m, "witness-search");
  }

  if (n <= policy.symbolic_max_dim && d <= policy.symbolic_max_formspace_dim) {
    const Polynomial det = symbolic_determinant(space.basis);
    if (det.is_zero()) {
      out.kind = NondegeneracyKind::RefutedSymbolic;
      out.method = "determinant-expansion";
      return out;
    }
    // A nonzero polynomial of degree n has a non-root in any grid with n+1 values per axis.
    SplitMix64 grid(split_seed(policy.seed, 1));
    while (true) {
      std::vector<Rational> t = random_point(grid, d, n + 1);
      if (det.evaluate(t) != 0) return admit(pencil(space, t), "determinant-expansion");
    }
  }

  // Beyond the expansion limits: a common radical vector makes every pencil
  // member singular.
  const Subspace common = common_radical(space);
  if (common.dim() > 0) {
    out.kind = NondegeneracyKind::RefutedSymbolic;
    out.method = "common-radical";
    out.radical_vector = common.basis().row(0);
    out.notes = "a nonzero vector lies in the radical of every invariant form, so det of the pencil vanishes identically";
    return out;
  }

  for (std::size_t trial = 0; trial < policy.mc_trials; ++trial) {
    SplitMix64 trial_rng(split_seed(policy.seed, 1000 + trial));
    const MatrixQ m = pencil(space, random_point(trial_rng, d, policy.mc_range));
    if (nondegenerate(m)) return admit(m, "monte-carlo");
  }
  out.kind = NondegeneracyKind::RefutedMonteCarlo;
  out.method = "monte-carlo";
  out.trials = policy.mc_trials;
  out.range = policy.mc_range;
  Rational ratio(static_cast<unsigned long>(n), static_cast<unsigned long>(policy.mc_range));
  ratio.canonicalize();
  out.bound = 1;
  for (std::size_t k = 0; k < policy.mc_trials; ++k) out.bound *= ratio;
  return out;
}

Signature signature(const MatrixQ& symmetric) {
  MatrixQ a = symmetric;
  const std::size_t n = a.rows();
  Signature s;
  std::size_t k = 0;
  for (; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, piv) == 0) ++piv;
    if (piv == n) {
      // all remaining diagonal entries vanish; use an off-diagonal entry if any
      std::size_t oi = n, oj = n;
      for (std::size_t i = k; i < n && oi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a(i, j) != 0) {
            oi = i;
            oj = j;
            break;
          }
      if (oi == n) break;
      // row/col oi += row/col oj makes a(oi,oi) = 2 a(oi,oj) != 0
      for (std::size_t c = 0; c < n; ++c) a(oi, c) += a(oj, c);
      for (std::size_t r = 0; r < n; ++r) a(r, oi) += a(r, oj);
      piv = oi;
    }
    if (piv != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(piv, c), a(k, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(a(r, piv), a(r, k));
    }
    const Rational p = a(k, k);
    if (p > 0) ++s.positive; else ++s.negative;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a(r, k) == 0) continue;
      const Rational f = a(r, k) / p;
      for (std::size_t c = k; c < n; ++c) a(r, c) -= f * a(k, c);
    }
    // the matching column operations only clear row k
    for (std::size_t c = k + 1; c < n; ++c) a(k, c) = 0;
  }
  s.zero = n - s.positive - s.negative;
  return s;
}

}  // namespace adinv
