#pragma once

#include <string>
#include <vector>

#include "adinv/root_system.hpp"

namespace adinv {

/// Root vectors of the positive roots in the standard matrix realisations
/// sl(n+1), so(2n+1), sp(2n), so(2n), indexed like rs.positive().
std::vector<MatrixQ> classical_root_matrices(const RootSystem& rs);

struct RealizationCheck {
  bool ok = false;
  std::string detail;
  /// X_gamma = scale[gamma] * E_gamma turns the matrix brackets into the
  /// Chevalley constants.
  std::vector<Rational> scales;
};

/// Matrix commutators against the Chevalley constants after a diagonal
/// rescaling fixed on simple roots and propagated along extraspecial pairs.
RealizationCheck cross_check_realization(const RootSystem& rs);

}  // namespace adinv
