#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adinv/lie_algebra.hpp"

namespace adinv {

enum class Family { A, B, C, D, E, F, G };

struct CartanType {
  Family family = Family::A;
  std::size_t rank = 1;

  /// "A5", "E6", "G2". Throws MalformedInput for unknown families or ranks
  /// outside A>=1, B>=2, C>=3, D>=4, E 6-8, F4, G2 (classical ranks capped at 16).
  static CartanType parse(std::string_view text);
  static CartanType make(Family f, std::size_t rank);
  std::string name() const;
  bool classical() const { return family <= Family::D; }
  bool operator==(const CartanType&) const = default;
};

using RootCoords = std::vector<int>;

struct RootString {
  int p = 0;  // p <= 0: gamma + n alpha is a root exactly for p <= n <= q
  int q = 0;
};

/// gamma +/- alpha membership against the sign of (gamma, alpha).
struct SubsRootReport {
  bool plus_is_root = false;
  bool minus_is_positive_root = false;
  Rational pairing;  // (gamma, alpha)
  bool first_clause_applies = false;   // gamma + alpha not a root
  bool first_clause_holds = false;     // then: gamma - alpha positive iff (gamma, alpha) > 0
  bool second_clause_applies = false;  // gamma - alpha not a root
  bool second_clause_holds = false;    // then: gamma + alpha a root iff (gamma, alpha) < 0
  bool ok() const {
    return (!first_clause_applies || first_clause_holds) && (!second_clause_applies || second_clause_holds);
  }
};

/// Simple roots numbered as in Humphreys (Bourbaki). Positive roots ordered
/// by height, then by simple coordinates in descending lexicographic order,
/// so the simple roots come first as gamma_1..gamma_n.
class RootSystem {
 public:
  static RootSystem build(const CartanType& type);

  const CartanType& type() const { return type_; }
  std::size_t rank() const { return type_.rank; }
  const std::vector<RootCoords>& positive() const { return positive_; }
  std::size_t positive_count() const { return positive_.size(); }
  const RootCoords& root(std::size_t i) const { return positive_.at(i); }
  std::optional<std::size_t> index_of(const RootCoords& c) const;
  /// Positive or negative root.
  bool is_root(const RootCoords& c) const;
  bool is_positive_root(const RootCoords& c) const { return index_of(c).has_value(); }

  /// <<gamma_i, gamma_j>> = 2 (gamma_i, gamma_j) / (gamma_j, gamma_j).
  int cartan(std::size_t i, std::size_t j) const { return cartan_[i][j]; }
  /// (gamma, delta) from the symmetrised Cartan matrix; long roots have length^2 2.
  Rational pairing(const RootCoords& a, const RootCoords& b) const;
  /// <<gamma, alpha>> = 2 (gamma, alpha) / (alpha, alpha).
  Rational cartan_pairing(const RootCoords& gamma, const RootCoords& alpha) const;

  std::size_t gamma_max_index() const { return gamma_max_; }
  const RootCoords& gamma_max() const { return positive_[gamma_max_]; }
  static int height(const RootCoords& c);

  /// Throws std::invalid_argument unless gamma and alpha are non-proportional roots.
  RootString root_string(const RootCoords& gamma, const RootCoords& alpha) const;
  /// gamma positive, alpha = gamma_{alpha_index}, gamma != alpha.
  SubsRootReport lemma_subsroot(const RootCoords& gamma, std::size_t alpha_index) const;

  /// N_{a,b} for positive root indices, 0 when root(a) + root(b) is not a root.
  int chevalley(std::size_t a, std::size_t b) const;
  /// N_{r,s} for arbitrary roots with r + s a root.
  int chevalley_general(const RootCoords& r, const RootCoords& s) const;

  /// Positive part n^+ on basis X_gamma (positive-root order).
  LieAlgebra positive_part() const;

  /// Coordinates in the standard epsilon basis (classical types only);
  /// A_n lives in Q^{n+1}.
  std::vector<Rational> epsilon_coords(const RootCoords& c) const;
  /// Inverse of epsilon_coords on the root lattice; nullopt when not integral.
  std::optional<RootCoords> from_epsilon(const std::vector<Rational>& e) const;
  /// (gamma, delta) = epsilon_scale * (epsilon dot product).
  Rational epsilon_scale() const;
  /// "e1-e2", "e1+e3", "e2", "2e3".
  std::string epsilon_label(const RootCoords& c) const;
  std::string simple_label(const RootCoords& c) const;

 private:
  CartanType type_;
  std::vector<std::vector<Rational>> gram_;
  std::vector<std::vector<int>> cartan_;
  std::vector<RootCoords> positive_;
  std::map<RootCoords, std::size_t> index_;
  std::size_t gamma_max_ = 0;
  std::vector<std::vector<int>> table_;  // N for positive pairs
  std::vector<int> signed_;              // N over all roots, negatives offset by |positive|
  void compute_chevalley();
  std::vector<std::vector<Rational>> simple_epsilon() const;
};

/// Closed-form positive-root counts.
std::size_t expected_positive_count(const CartanType& t);
/// Highest root from standard tables.
RootCoords expected_gamma_max(const CartanType& t);

}  // namespace adinv
