#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "adinv/linalg.hpp"

namespace adinv {

/// Sparse multivariate polynomial over Q in at most 8 variables; monomials are
/// packed exponent bytes (variable i in bits 8i..8i+7).
class Polynomial {
 public:
  static constexpr std::size_t kMaxVariables = 8;

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::unordered_map<std::uint64_t, Rational>& terms() const { return terms_; }

  void add_term(std::uint64_t monomial, const Rational& c);
  /// this += s * other * t_var
  void add_scaled_shifted(const Polynomial& other, const Rational& s, std::size_t var);

  Rational evaluate(const std::vector<Rational>& point) const;

 private:
  std::unordered_map<std::uint64_t, Rational> terms_;
};

/// det(sum_i t_i * forms[i]) expanded as a polynomial in t. Square forms of a
/// common size n <= 20 and at most 8 forms.
Polynomial symbolic_determinant(const std::vector<MatrixQ>& forms);

}  // namespace adinv
