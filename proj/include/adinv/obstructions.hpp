#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "adinv/invariant_forms.hpp"
#include "adinv/lie_algebra.hpp"

namespace adinv {

/// g = V_1 + ... + V_s + C^1(g) as a direct sum of vector spaces, V_i != 0.
struct Decomposition {
  std::vector<Subspace> parts;
  std::string origin;  // which enumerator produced it, for reports
};

/// Empty string when valid, otherwise the reason.
std::string decomposition_error(const LieAlgebra& g, const Decomposition& d);

/// The dimension identity dim C_j(g) + dim C^j(g) = dim g fails at level j.
struct DimSeriesCertificate {
  std::size_t j;
  std::size_t dim_lower;  // dim C^j(g)
  std::size_t dim_upper;  // dim C_j(g)
  std::size_t dim;
};

/// A decomposition whose Theta ideal z cap (cap_i [z(V_i), g]) contains `vector` != 0.
struct ThetaCertificate {
  Decomposition decomposition;
  Subspace theta;
  Vec vector;
};

/// g = V_1 + V_2 + C^1(g) with [V_i,V_i] = 0 and [V_1,V_2] = C^1(g) != 0.
struct HeisenbergReiterCertificate {
  Subspace v1;
  Subspace v2;
};

using ObstructionCertificate = std::variant<DimSeriesCertificate, ThetaCertificate, HeisenbergReiterCertificate>;

std::string certificate_kind(const ObstructionCertificate& c);

/// Re-derives the certificate from its payload through code paths that do not
/// share the series/centralizer routines used to find it.
bool reverify_certificate(const LieAlgebra& g, const ObstructionCertificate& c);

/// Smallest j with dim C_j(g) + dim C^j(g) != dim g, or nullopt when the
/// identity holds up to stabilisation.
std::optional<ObstructionCertificate> dim_series_obstruction(const LieAlgebra& g);

/// z cap (cap_i [z(V_i), g]). Throws std::invalid_argument for invalid decompositions.
Subspace theta_ideal(const LieAlgebra& g, const Decomposition& d);

struct ThetaSearchOptions {
  std::size_t budget = 512;
  /// Structured splittings supplied by the caller (graph bipartitions, root
  /// classes); tried first, in order.
  std::vector<Decomposition> registered;
};

/// Coordinate complement of C^1(g): basis vectors e_i greedily added while
/// independent modulo C^1(g), in index order.
std::vector<std::size_t> coordinate_complement(const LieAlgebra& g);

/// Candidate decompositions in enumeration order: registered ones, the single
/// complement, all singletons, then bipartitions of the coordinate complement.
std::vector<Decomposition> theta_candidates(const LieAlgebra& g, const ThetaSearchOptions& options);

/// First certificate within budget. Throws PreconditionError when C^1(g) = g.
std::optional<ObstructionCertificate> theta_search(const LieAlgebra& g, const ThetaSearchOptions& options = {});

struct HypothesesFail {
  std::string reason;
};
std::variant<HypothesesFail, ObstructionCertificate> heisenberg_reiter_obstruction(const LieAlgebra& g,
                                                                                  const Subspace& v1,
                                                                                  const Subspace& v2);

struct NonsingularProbe {
  bool singular = false;
  std::optional<Vec> witness;  // X outside z with rank(ad_X) < dim z
  std::size_t tested = 0;
};

/// Requires g 2-step nilpotent (PreconditionError otherwise). Tests basis
/// vectors, pairwise sums and `trials` random vectors outside the center.
/// A non-singular outcome is evidence only.
NonsingularProbe nonsingular_probe(const LieAlgebra& g, std::size_t trials, std::uint64_t seed);

struct CapSample {
  bool holds = false;      // sampled intersection is zero, so the full one is zero
  Subspace intersection;   // sampled intersection of [z(X), g]
  std::size_t samples = 0;
};

CapSample cap_condition_sample(const LieAlgebra& g, std::size_t random_samples, std::uint64_t seed);

}  // namespace adinv
