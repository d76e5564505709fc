#include "adinv/obstructions.hpp"

#include "adinv/rng.hpp"

namespace adinv {

namespace {

Subspace span_of_parts(std::size_t n, const std::vector<Subspace>& parts) {
  std::vector<Vec> vs;
  for (const auto& p : parts) {
    auto pv = p.vectors();
    vs.insert(vs.end(), pv.begin(), pv.end());
  }
  return Subspace::span(n, vs);
}

// ---- independent recomputation helpers used by reverify_certificate ----

// span{[x, y] : x in xs, y in ys} via dense rref
Subspace brute_bracket_span(const LieAlgebra& g, const std::vector<Vec>& xs, const std::vector<Vec>& ys) {
  std::vector<Vec> out;
  for (const auto& x : xs)
    for (const auto& y : ys) out.push_back(g.bracket(x, y));
  if (out.empty()) return Subspace::zero(g.dim());
  const auto r = rref(MatrixQ::from_rows(out, g.dim()));
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < r.rank; ++i) rows.push_back(r.matrix.row(i));
  return Subspace::span(g.dim(), rows);
}

std::vector<Vec> unit_vectors(std::size_t n) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(unit_vec(n, i));
  return out;
}

// {X : y . [X, u] = 0 for every u in us and every y annihilating w}
Subspace brute_preimage(const LieAlgebra& g, const std::vector<Vec>& us, const Subspace& w) {
  const std::size_t n = g.dim();
  const auto ann = w.annihilator();
  std::vector<Vec> rows;
  for (const auto& u : us) {
    // column m of ad_u^T: [e_m, u] = -[u, e_m]
    const MatrixQ adu = g.ad(u);
    for (const auto& y : ann) {
      Vec row = y.empty() ? Vec{} : adu.apply_left(y);
      for (auto& x : row) x = -x;
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return Subspace::full(n);
  return nullspace(MatrixQ::from_rows(rows, n));
}

}  // namespace

std::string decomposition_error(const LieAlgebra& g, const Decomposition& d) {
  const std::size_t n = g.dim();
  if (d.parts.empty()) return "decomposition has no parts";
  const Subspace comm = commutator(g);
  if (comm.dim() == n) return "C^1(g) = g admits no decomposition";
  std::size_t total = comm.dim();
  for (const auto& p : d.parts) {
    if (p.ambient_dim() != n) return "part has wrong ambient dimension";
    if (p.dim() == 0) return "decomposition has a zero part";
    total += p.dim();
  }
  if (total != n) return "part dimensions do not add up to dim g";
  std::vector<Subspace> all = d.parts;
  all.push_back(comm);
  if (span_of_parts(n, all).dim() != n) return "parts and C^1(g) do not span g";
  return {};
}

std::string certificate_kind(const ObstructionCertificate& c) {
  struct Visitor {
    std::string operator()(const DimSeriesCertificate&) const { return "DimSeries"; }
    std::string operator()(const ThetaCertificate&) const { return "ThetaNonzero"; }
    std::string operator()(const HeisenbergReiterCertificate&) const { return "HeisenbergReiter"; }
  };
  return std::visit(Visitor{}, c);
}

std::optional<ObstructionCertificate> dim_series_obstruction(const LieAlgebra& g) {
  const SeriesReport s = central_series(g);
  const std::size_t last = std::max(s.descending.size(), s.ascending.size());
  for (std::size_t j = 1; j <= last; ++j) {
    const std::size_t lo = s.lower(j).dim(), up = s.upper(j).dim();
    if (lo + up != g.dim()) return DimSeriesCertificate{j, lo, up, g.dim()};
  }
  return std::nullopt;
}

Subspace theta_ideal(const LieAlgebra& g, const Decomposition& d) {
  if (auto err = decomposition_error(g, d); !err.empty()) throw std::invalid_argument(err);
  const Subspace full = Subspace::full(g.dim());
  Subspace theta = center(g);
  for (const auto& part : d.parts) {
    if (theta.dim() == 0) break;
    theta = span_intersect(theta, bracket_span(g, centralizer(g, part), full));
  }
  return theta;
}

std::vector<std::size_t> coordinate_complement(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  SparseEliminator e(n);
  const Subspace comm = commutator(g);
  for (std::size_t r = 0; r < comm.dim(); ++r) e.add_dense(comm.basis().row_view(r));
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n && !e.full(); ++i) {
    if (e.add_row(SparseRow{{i, Rational(1)}})) out.push_back(i);
  }
  return out;
}

std::vector<Decomposition> theta_candidates(const LieAlgebra& g, const ThetaSearchOptions& options) {
  const std::size_t n = g.dim();
  std::vector<Decomposition> out;
  auto push = [&](Decomposition d) {
    if (out.size() < options.budget) out.push_back(std::move(d));
  };
  for (const auto& d : options.registered) push(d);
  const auto comp = coordinate_complement(g);
  const std::size_t m = comp.size();
  if (m == 0) return out;
  push({{Subspace::coordinate(n, comp)}, "complement"});
  if (m > 1) {
    Decomposition singles{{}, "singletons"};
    for (auto i : comp) singles.parts.push_back(Subspace::coordinate(n, {i}));
    push(std::move(singles));
  }
  // bipartitions: comp[0] always in the first part
  if (m >= 2 && m <= 40) {
    const std::uint64_t count = std::uint64_t{1} << (m - 1);
    for (std::uint64_t mask = 1; mask < count && out.size() < options.budget; ++mask) {
      std::vector<std::size_t> a{comp[0]}, b;
      for (std::size_t t = 1; t < m; ++t) ((mask >> (t - 1)) & 1 ? b : a).push_back(comp[t]);
      push({{Subspace::coordinate(n, a), Subspace::coordinate(n, b)}, "bipartition"});
    }
  }
  return out;
}

std::optional<ObstructionCertificate> theta_search(const LieAlgebra& g, const ThetaSearchOptions& options) {
  const Subspace comm = commutator(g);
  if (comm.dim() == g.dim()) throw PreconditionError("theta_search needs C^1(g) != g");
  if (center(g).dim() == 0) return std::nullopt;
  for (const auto& d : theta_candidates(g, options)) {
    if (!decomposition_error(g, d).empty()) continue;
    Subspace theta = theta_ideal(g, d);
    if (theta.dim() > 0) {
      Vec v = theta.basis().row(0);
      return ThetaCertificate{d, std::move(theta), std::move(v)};
    }
  }
  return std::nullopt;
}

std::variant<HypothesesFail, ObstructionCertificate> heisenberg_reiter_obstruction(const LieAlgebra& g,
                                                                                  const Subspace& v1,
                                                                                  const Subspace& v2) {
  const std::size_t n = g.dim();
  if (v1.ambient_dim() != n || v2.ambient_dim() != n) return HypothesesFail{"ambient dimension mismatch"};
  if (bracket_span(g, v1, v1).dim() != 0) return HypothesesFail{"[V1,V1] != 0"};
  if (bracket_span(g, v2, v2).dim() != 0) return HypothesesFail{"[V2,V2] != 0"};
  const Subspace comm = commutator(g);
  if (comm.dim() == 0) return HypothesesFail{"C^1(g) = 0"};
  if (!(bracket_span(g, v1, v2) == comm)) return HypothesesFail{"[V1,V2] != C^1(g)"};
  if (v1.dim() + v2.dim() + comm.dim() != n || span_of_parts(n, {v1, v2, comm}).dim() != n)
    return HypothesesFail{"V1 + V2 + C^1(g) is not a direct sum equal to g"};
  return ObstructionCertificate{HeisenbergReiterCertificate{v1, v2}};
}

bool reverify_certificate(const LieAlgebra& g, const ObstructionCertificate& c) {
  const std::size_t n = g.dim();
  const auto units = unit_vectors(n);
  if (const auto* ds = std::get_if<DimSeriesCertificate>(&c)) {
    if (ds->dim != n || ds->j == 0) return false;
    // lower: iterate brackets with the full basis; upper: annihilator kernels
    Subspace lower = Subspace::full(n);
    Subspace upper = Subspace::zero(n);
    for (std::size_t j = 1; j <= ds->j; ++j) {
      lower = brute_bracket_span(g, units, lower.vectors());
      upper = brute_preimage(g, units, upper);
    }
    return lower.dim() == ds->dim_lower && upper.dim() == ds->dim_upper && lower.dim() + upper.dim() != n;
  }
  if (const auto* th = std::get_if<ThetaCertificate>(&c)) {
    if (is_zero(th->vector) || th->vector.size() != n) return false;
    // decomposition: parts + [g,g] direct and spanning
    const Subspace comm = brute_bracket_span(g, units, units);
    std::size_t total = comm.dim();
    std::vector<Vec> all = comm.vectors();
    for (const auto& p : th->decomposition.parts) {
      if (p.dim() == 0) return false;
      total += p.dim();
      auto pv = p.vectors();
      all.insert(all.end(), pv.begin(), pv.end());
    }
    if (total != n || Subspace::span(n, all).dim() != n) return false;
    for (const auto& u : units)
      if (!is_zero(g.bracket(th->vector, u))) return false;
    for (const auto& p : th->decomposition.parts) {
      const Subspace zp = brute_preimage(g, p.vectors(), Subspace::zero(n));
      if (!brute_bracket_span(g, zp.vectors(), units).contains(th->vector)) return false;
    }
    return true;
  }
  const auto& hr = std::get<HeisenbergReiterCertificate>(c);
  const auto a = hr.v1.vectors(), b = hr.v2.vectors();
  if (a.empty() || b.empty()) return false;
  if (brute_bracket_span(g, a, a).dim() != 0 || brute_bracket_span(g, b, b).dim() != 0) return false;
  const Subspace comm = brute_bracket_span(g, units, units);
  if (comm.dim() == 0 || !(brute_bracket_span(g, a, b) == comm)) return false;
  std::vector<Vec> all = a;
  all.insert(all.end(), b.begin(), b.end());
  auto cv = comm.vectors();
  all.insert(all.end(), cv.begin(), cv.end());
  return all.size() == n && Subspace::span(n, all).dim() == n;
}

NonsingularProbe nonsingular_probe(const LieAlgebra& g, std::size_t trials, std::uint64_t seed) {
  const std::size_t n = g.dim();
  if (nilpotency_class(g) != std::optional<std::size_t>(2)) throw PreconditionError("nonsingular_probe needs a 2-step nilpotent algebra");
  const Subspace z = center(g);
  NonsingularProbe out;
  auto test = [&](const Vec& x) {
    if (z.contains(x)) return false;
    ++out.tested;
    if (rank(g.ad(x)) < z.dim()) {
      out.singular = true;
      out.witness = x;
      return true;
    }
    return false;
  };
  for (std::size_t i = 0; i < n; ++i)
    if (test(unit_vec(n, i))) return out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (test(unit_vec(n, i) + unit_vec(n, j))) return out;
  SplitMix64 rng(split_seed(seed, 7));
  for (std::size_t t = 0; t < trials; ++t) {
    Vec x = zero_vec(n);
    for (auto& c : x) c = static_cast<long>(rng.uniform(0, 200)) - 100;
    if (test(x)) return out;
  }
  return out;
}

CapSample cap_condition_sample(const LieAlgebra& g, std::size_t random_samples, std::uint64_t seed) {
  const std::size_t n = g.dim();
  const Subspace full = Subspace::full(n);
  CapSample out;
  out.intersection = full;
  auto step = [&](const Vec& x) {
    ++out.samples;
    const Subspace zx = centralizer(g, Subspace::span(n, {x}));
    out.intersection = span_intersect(out.intersection, bracket_span(g, zx, full));
    return out.intersection.dim() == 0;
  };
  bool done = n == 0;
  for (std::size_t i = 0; i < n && !done; ++i) done = step(unit_vec(n, i));
  SplitMix64 rng(split_seed(seed, 11));
  for (std::size_t t = 0; t < random_samples && !done; ++t) {
    Vec x = zero_vec(n);
    for (auto& c : x) c = static_cast<long>(rng.uniform(0, 200)) - 100;
    done = step(x);
  }
  out.holds = out.intersection.dim() == 0;
  return out;
}

}  // namespace adinv
