#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "adinv/lie_algebra.hpp"

namespace adinv {

/// One element of the Hall basis. Generators have no factors; every other
/// element is [left, right] with left > right in basis order and, when left
/// is itself [a, b], b <= right.
struct HallElement {
  std::size_t degree = 1;
  std::optional<std::pair<std::size_t, std::size_t>> factors;
};

/// Free k-step nilpotent Lie algebra on p generators presented on the Hall
/// basis of basic commutators. Basis order: by degree, then by creation order,
/// where degree-d elements [u, v] are created with u ascending, then v ascending.
struct FreeNilpotent {
  std::size_t generators = 0;
  std::size_t step = 0;
  std::vector<HallElement> hall;
  std::vector<std::size_t> graded_dims;  // entry d-1 = number of degree-d elements
  LieAlgebra algebra;
};

/// Requires p >= 1 and k >= 1.
FreeNilpotent free_nilpotent_hall(std::size_t p, std::size_t k);
inline LieAlgebra free_nilpotent(std::size_t p, std::size_t k) { return free_nilpotent_hall(p, k).algebra; }

/// Certified isomorphism onto free_nilpotent(p,k): sends the i-th Hall
/// generator to generators[i] and extends by brackets. Returns the matrix whose
/// column m is the image of the m-th Hall basis element, after checking it is
/// invertible and preserves every basis bracket; nullopt otherwise.
std::optional<MatrixQ> match_free_nilpotent(const LieAlgebra& g, const std::vector<Vec>& generators,
                                            std::size_t p, std::size_t k);

/// Re-checks a claimed isomorphism matrix from match_free_nilpotent.
bool verify_free_isomorphism(const LieAlgebra& g, const MatrixQ& images, std::size_t p, std::size_t k);

}  // namespace adinv
