#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adinv/invariant_forms.hpp"
#include "adinv/obstructions.hpp"

namespace adinv {

struct RunConfig {
  std::uint64_t seed = 20240601;
  std::size_t mc_trials = 40;
  std::uint64_t mc_range = 65536;
  std::size_t symbolic_max_dim = 12;
  std::size_t symbolic_max_formspace_dim = 8;
  std::size_t solver_dim_cap = 64;
  std::size_t theta_budget = 512;
  std::size_t probe_trials = 32;
  bool timings = false;

  DecisionPolicy policy() const;
  /// Throws MalformedInput when a bound is zero.
  void validate() const;
  /// ADINV_SEED, ADINV_MC_TRIALS, ADINV_MC_RANGE, ADINV_SOLVER_DIM_CAP,
  /// ADINV_THETA_BUDGET override the current values.
  void apply_environment();
};

struct AnalysisOptions {
  /// Run the solver even when a certificate is already known.
  bool full = true;
  /// Never run the solver.
  bool obstructions_only = false;
  std::vector<Decomposition> registered;
  std::vector<std::pair<Subspace, Subspace>> hr_splits;
};

enum class VerdictKind { Admits, Refuted, RefutedMonteCarlo, Undecided };
std::string to_string(VerdictKind k);

struct Analysis {
  std::size_t dim = 0;
  std::optional<std::size_t> nilpotency_class;
  std::vector<std::size_t> lower_dims;
  std::vector<std::size_t> upper_dims;
  std::size_t center_dim = 0;
  std::size_t commutator_dim = 0;

  std::vector<ObstructionCertificate> certificates;
  bool solver_ran = false;
  std::size_t form_space_dim = 0;
  std::optional<NondegeneracyVerdict> solver;
  std::optional<Signature> witness_signature;

  std::optional<NonsingularProbe> probe;
  std::optional<CapSample> cap;

  VerdictKind kind = VerdictKind::Undecided;
  std::string decided_by;
  /// False when a certificate and an Admits verdict coexist.
  bool consistent = true;
  double seconds = 0;
};

/// Obstruction battery (dimension series, Heisenberg-Reiter splits, Theta
/// search), then the invariant-form solver when dim <= solver_dim_cap.
/// Certificates decide first; every witness is re-verified exactly.
Analysis analyze(const LieAlgebra& g, const RunConfig& cfg, const AnalysisOptions& opts = {});

}  // namespace adinv
