#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace adinv {

/// Exact rational number; GMP keeps it canonical (lowest terms, positive denominator).
using Rational = mpq_class;

/// Dense coefficient vector.
using Vec = std::vector<Rational>;

/// Raised for any input that does not follow a documented format.
class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "p", "-p" or "p/q" with q != 0. Whitespace is not accepted.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& s, const Vec& v);
Rational dot(const Vec& a, const Vec& b);

}  // namespace adinv
