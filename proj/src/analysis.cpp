#include "adinv/analysis.hpp"

#include <chrono>
#include <cstdlib>
#include <stdexcept>

namespace adinv {

DecisionPolicy RunConfig::policy() const {
  DecisionPolicy p;
  p.seed = seed;
  p.mc_trials = mc_trials;
  p.mc_range = mc_range;
  p.symbolic_max_dim = symbolic_max_dim;
  p.symbolic_max_formspace_dim = symbolic_max_formspace_dim;
  return p;
}

void RunConfig::validate() const {
  if (mc_trials == 0 || mc_range < 2 || solver_dim_cap == 0 || theta_budget == 0)
    throw MalformedInput("configuration bounds must be positive (mc_range at least 2)");
  if (symbolic_max_formspace_dim > 8) throw MalformedInput("symbolic_max_formspace_dim is at most 8");
  if (symbolic_max_dim > 20) throw MalformedInput("symbolic_max_dim is at most 20");
}

namespace {

template <typename T>
void env_override(const char* name, T& field) {
  const char* v = std::getenv(name);
  if (!v || !*v) return;
  try {
    std::size_t pos = 0;
    const unsigned long long x = std::stoull(v, &pos);
    if (pos != std::string(v).size()) throw std::invalid_argument(name);
    field = static_cast<T>(x);
  } catch (const std::exception&) {
    throw MalformedInput(std::string("environment variable ") + name + " is not a non-negative integer");
  }
}

}  // namespace

void RunConfig::apply_environment() {
  env_override("ADINV_SEED", seed);
  env_override("ADINV_MC_TRIALS", mc_trials);
  env_override("ADINV_MC_RANGE", mc_range);
  env_override("ADINV_SOLVER_DIM_CAP", solver_dim_cap);
  env_override("ADINV_THETA_BUDGET", theta_budget);
}

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Admits: return "Admits";
    case VerdictKind::Refuted: return "Refuted";
    case VerdictKind::RefutedMonteCarlo: return "RefutedMonteCarlo";
    case VerdictKind::Undecided: return "Undecided";
  }
  return {};
}

Analysis analyze(const LieAlgebra& g, const RunConfig& cfg, const AnalysisOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  Analysis a;
  a.dim = g.dim();
  const SeriesReport series = central_series(g);
  a.lower_dims = series.descending_dims();
  a.upper_dims = series.ascending_dims();
  if (series.descending.back().dim() == 0) a.nilpotency_class = series.descending.size() - 1;
  a.center_dim = center(g).dim();
  a.commutator_dim = commutator(g).dim();

  if (auto c = dim_series_obstruction(g)) a.certificates.push_back(*c);
  for (const auto& [v1, v2] : opts.hr_splits) {
    auto r = heisenberg_reiter_obstruction(g, v1, v2);
    if (auto* c = std::get_if<ObstructionCertificate>(&r)) a.certificates.push_back(*c);
  }
  if (a.certificates.empty() && a.commutator_dim < a.dim) {
    ThetaSearchOptions t;
    t.budget = cfg.theta_budget;
    t.registered = opts.registered;
    if (auto c = theta_search(g, t)) a.certificates.push_back(*c);
  }
  for (const auto& c : a.certificates)
    if (!reverify_certificate(g, c)) throw std::logic_error("certificate " + certificate_kind(c) + " failed re-verification");

  const bool small = a.dim <= cfg.solver_dim_cap;
  if (small && a.nilpotency_class == std::optional<std::size_t>(2))
    a.probe = nonsingular_probe(g, cfg.probe_trials, cfg.seed);
  if (small) a.cap = cap_condition_sample(g, 4, cfg.seed);

  if (!opts.obstructions_only && small && (opts.full || a.certificates.empty())) {
    const FormSpace space = invariant_form_space(g);
    a.solver_ran = true;
    a.form_space_dim = space.dim();
    a.solver = decide_nondegenerate(space, cfg.policy());
    if (a.solver->kind == NondegeneracyKind::Admits) {
      if (verify_form(g, *a.solver->witness)) throw std::logic_error("solver witness failed exact re-verification");
      a.witness_signature = signature(*a.solver->witness);
    }
  }

  if (!a.certificates.empty()) {
    a.kind = VerdictKind::Refuted;
    a.decided_by = "certificate:" + certificate_kind(a.certificates.front());
    a.consistent = !(a.solver && a.solver->kind == NondegeneracyKind::Admits);
  } else if (a.solver) {
    a.decided_by = "solver:" + a.solver->method;
    switch (a.solver->kind) {
      case NondegeneracyKind::Admits: a.kind = VerdictKind::Admits; break;
      case NondegeneracyKind::RefutedSymbolic: a.kind = VerdictKind::Refuted; break;
      case NondegeneracyKind::RefutedMonteCarlo: a.kind = VerdictKind::RefutedMonteCarlo; break;
    }
  } else {
    a.kind = VerdictKind::Undecided;
    a.decided_by = opts.obstructions_only ? "obstructions-only" : "solver-dim-cap";
  }
  a.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return a;
}

}  // namespace adinv
