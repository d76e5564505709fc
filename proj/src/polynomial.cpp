#include "adinv/polynomial.hpp"

#include <bit>
#include <stdexcept>

namespace adinv {

void Polynomial::add_term(std::uint64_t monomial, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(monomial, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::add_scaled_shifted(const Polynomial& other, const Rational& s, std::size_t var) {
  const std::uint64_t shift = std::uint64_t{1} << (8 * var);
  for (const auto& [mono, c] : other.terms_) add_term(mono + shift, s * c);
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  Rational total = 0;
  for (const auto& [mono, c] : terms_) {
    Rational v = c;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      const unsigned e = (mono >> (8 * i)) & 0xff;
      for (unsigned k = 0; k < e; ++k) v *= point.at(i);
    }
    total += v;
  }
  return total;
}

Polynomial symbolic_determinant(const std::vector<MatrixQ>& forms) {
  if (forms.empty()) throw std::invalid_argument("symbolic determinant of an empty family");
  if (forms.size() > Polynomial::kMaxVariables) throw std::invalid_argument("too many variables");
  const std::size_t n = forms.front().rows();
  if (n > 20) throw std::invalid_argument("matrix too large for symbolic expansion");
  for (const auto& f : forms)
    if (f.rows() != n || f.cols() != n) throw std::invalid_argument("form size mismatch");

  // Laplace expansion row by row with memoisation over the set of used columns.
  std::unordered_map<std::uint32_t, Polynomial> layer;
  Polynomial one;
  one.add_term(0, Rational(1));
  layer.emplace(0u, std::move(one));
  for (std::size_t r = 0; r < n; ++r) {
    std::unordered_map<std::uint32_t, Polynomial> next;
    for (const auto& [mask, poly] : layer) {
      for (std::size_t c = 0; c < n; ++c) {
        if (mask & (1u << c)) continue;
        const int inversions = std::popcount(mask >> (c + 1));
        const Rational sign = (inversions % 2) ? -1 : 1;
        for (std::size_t v = 0; v < forms.size(); ++v) {
          const Rational& entry = forms[v](r, c);
          if (entry == 0) continue;
          next[mask | (1u << c)].add_scaled_shifted(poly, sign * entry, v);
        }
      }
    }
    layer.clear();
    for (auto& [mask, poly] : next)
      if (!poly.is_zero()) layer.emplace(mask, std::move(poly));
    if (layer.empty()) return Polynomial{};
  }
  auto it = layer.find((1u << n) - 1);
  return it == layer.end() ? Polynomial{} : it->second;
}

}  // namespace adinv
