#include "adinv/classical_realization.hpp"

#include <stdexcept>

namespace adinv {

namespace {

MatrixQ commutator(const MatrixQ& a, const MatrixQ& b) { return a * b + Rational(-1) * (b * a); }

// c with m = c * base, nullopt when not proportional
std::optional<Rational> ratio(const MatrixQ& m, const MatrixQ& base) {
  std::optional<Rational> c;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (base(i, j) == 0) {
        if (m(i, j) != 0) return std::nullopt;
        continue;
      }
      const Rational r = m(i, j) / base(i, j);
      if (c && *c != r) return std::nullopt;
      c = r;
    }
  return c;
}

}  // namespace

std::vector<MatrixQ> classical_root_matrices(const RootSystem& rs) {
  const auto& t = rs.type();
  if (!t.classical()) throw std::invalid_argument("matrix realisation exists for classical types only");
  const std::size_t n = t.rank;
  std::size_t size = 0;
  // offset of the first block and of the dual block (1-based epsilon index i -> row lo+i-1)
  std::size_t lo = 0, hi = 0;
  switch (t.family) {
    case Family::A: size = n + 1; break;
    case Family::B: size = 2 * n + 1; lo = 1; hi = n + 1; break;
    case Family::C:
    case Family::D: size = 2 * n; lo = 0; hi = n; break;
    default: break;
  }
  std::vector<MatrixQ> out;
  for (const auto& c : rs.positive()) {
    const auto e = rs.epsilon_coords(c);
    std::vector<std::size_t> plus, minus;
    bool twice = false;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] > 0) plus.push_back(k);
      if (e[k] < 0) minus.push_back(k);
      if (abs(e[k]) == 2) twice = true;
    }
    MatrixQ m(size, size);
    auto set = [&](std::size_t r, std::size_t col, int v) { m(r, col) += v; };
    if (t.family == Family::A) {
      set(plus.at(0), minus.at(0), 1);
    } else if (plus.size() == 1 && minus.size() == 1) {  // e_i - e_j
      const std::size_t i = plus[0], j = minus[0];
      set(lo + i, lo + j, 1);
      set(hi + j, hi + i, -1);
    } else if (plus.size() == 2) {  // e_i + e_j
      const std::size_t i = plus[0], j = plus[1];
      const int sign = t.family == Family::C ? 1 : -1;
      set(lo + i, hi + j, 1);
      set(lo + j, hi + i, sign);
    } else if (twice) {  // 2 e_i
      set(lo + plus.at(0), hi + plus.at(0), 1);
    } else {  // e_i, type B
      const std::size_t i = plus.at(0);
      set(lo + i, 0, 1);
      set(0, hi + i, -1);
    }
    out.push_back(std::move(m));
  }
  return out;
}

RealizationCheck cross_check_realization(const RootSystem& rs) {
  RealizationCheck rep;
  const auto mats = classical_root_matrices(rs);
  const std::size_t P = rs.positive_count();
  auto sum_index = [&](std::size_t a, std::size_t b) {
    RootCoords c = rs.root(a);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += rs.root(b)[i];
    return rs.index_of(c);
  };
  // M[a][b]: [E_a, E_b] = M E_{a+b}
  std::vector<std::vector<Rational>> M(P, std::vector<Rational>(P, Rational(0)));
  for (std::size_t a = 0; a < P; ++a)
    for (std::size_t b = 0; b < P; ++b) {
      const MatrixQ br = commutator(mats[a], mats[b]);
      const auto s = sum_index(a, b);
      if (!s) {
        if (!br.is_zero()) {
          rep.detail = "bracket of " + rs.simple_label(rs.root(a)) + " and " + rs.simple_label(rs.root(b)) + " should vanish";
          return rep;
        }
        continue;
      }
      const auto r = ratio(br, mats[*s]);
      if (!r || *r == 0) {
        rep.detail = "bracket not proportional to the root vector of " + rs.simple_label(rs.root(*s));
        return rep;
      }
      M[a][b] = *r;
    }
  rep.scales.assign(P, Rational(1));
  for (std::size_t x = 0; x < P; ++x) {
    if (RootSystem::height(rs.root(x)) == 1) continue;
    // first a (root order) with x - a positive: the extraspecial pair
    for (std::size_t a = 0; a < x; ++a) {
      RootCoords d = rs.root(x);
      for (std::size_t i = 0; i < d.size(); ++i) d[i] -= rs.root(a)[i];
      if (auto b = rs.index_of(d)) {
        rep.scales[x] = rep.scales[a] * rep.scales[*b] * M[a][*b] / rs.chevalley(a, *b);
        break;
      }
    }
  }
  for (std::size_t a = 0; a < P; ++a)
    for (std::size_t b = 0; b < P; ++b) {
      const auto s = sum_index(a, b);
      if (!s) continue;
      const Rational got = rep.scales[a] * rep.scales[b] * M[a][b] / rep.scales[*s];
      if (got != rs.chevalley(a, b)) {
        rep.detail = "rescaled constant differs at (" + rs.simple_label(rs.root(a)) + ", " + rs.simple_label(rs.root(b)) + ")";
        return rep;
      }
    }
  rep.ok = true;
  return rep;
}

}  // namespace adinv
