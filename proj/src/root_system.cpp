#include "adinv/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

#include "adinv/linalg.hpp"

namespace adinv {

namespace {

constexpr int kUnset = 1 << 30;

RootCoords add(const RootCoords& a, const RootCoords& b, int s = 1) {
  RootCoords c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + s * b[i];
  return c;
}

RootCoords neg(const RootCoords& a) {
  RootCoords c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
  return c;
}

RootCoords simple(std::size_t n, std::size_t i) {
  RootCoords c(n, 0);
  c[i] = 1;
  return c;
}

// Dynkin edges, 0-based, Humphreys numbering
std::vector<std::pair<std::size_t, std::size_t>> dynkin_edges(const CartanType& t) {
  const std::size_t n = t.rank;
  std::vector<std::pair<std::size_t, std::size_t>> e;
  switch (t.family) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::F:
    case Family::G:
      for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
      break;
    case Family::D:
      for (std::size_t i = 0; i + 2 < n; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(n - 3, n - 1);
      break;
    case Family::E:
      e.emplace_back(0, 2);
      e.emplace_back(1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) e.emplace_back(i, i + 1);
      break;
  }
  return e;
}

std::vector<Rational> squared_lengths(const CartanType& t) {
  const std::size_t n = t.rank;
  std::vector<Rational> len(n, Rational(2));
  switch (t.family) {
    case Family::B:
      len[n - 1] = 1;
      break;
    case Family::C:
      for (std::size_t i = 0; i + 1 < n; ++i) len[i] = 1;
      break;
    case Family::F:
      len[2] = len[3] = 1;
      break;
    case Family::G:
      len[0] = Rational(2, 3);
      break;
    default:
      break;
  }
  return len;
}

}  // namespace

CartanType CartanType::make(Family f, std::size_t rank) {
  auto bad = [&] { throw MalformedInput("invalid rank " + std::to_string(rank) + " for this Cartan family"); };
  switch (f) {
    case Family::A:
      if (rank < 1 || rank > 16) bad();
      break;
    case Family::B:
      if (rank < 2 || rank > 16) bad();
      break;
    case Family::C:
      if (rank < 3 || rank > 16) bad();
      break;
    case Family::D:
      if (rank < 4 || rank > 16) bad();
      break;
    case Family::E:
      if (rank < 6 || rank > 8) bad();
      break;
    case Family::F:
      if (rank != 4) bad();
      break;
    case Family::G:
      if (rank != 2) bad();
      break;
  }
  return CartanType{f, rank};
}

CartanType CartanType::parse(std::string_view text) {
  if (text.size() < 2) throw MalformedInput("Cartan type must look like 'E6'");
  const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  static const std::string families = "ABCDEFG";
  const auto pos = families.find(c);
  if (pos == std::string::npos) throw MalformedInput("unknown Cartan family '" + std::string(1, text[0]) + "'");
  std::size_t rank = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])) || rank > 1000)
      throw MalformedInput("malformed Cartan type '" + std::string(text) + "'");
    rank = rank * 10 + static_cast<std::size_t>(text[i] - '0');
  }
  return make(static_cast<Family>(pos), rank);
}

std::string CartanType::name() const { return std::string(1, "ABCDEFG"[static_cast<int>(family)]) + std::to_string(rank); }

RootSystem RootSystem::build(const CartanType& type) {
  const CartanType t = CartanType::make(type.family, type.rank);
  const std::size_t n = t.rank;
  RootSystem rs;
  rs.type_ = t;

  const auto len = squared_lengths(t);
  rs.gram_.assign(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) rs.gram_[i][i] = len[i];
  for (const auto& [a, b] : dynkin_edges(t)) {
    const Rational v = -std::max(len[a], len[b]) / 2;
    rs.gram_[a][b] = rs.gram_[b][a] = v;
  }
  rs.cartan_.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational a = 2 * rs.gram_[i][j] / rs.gram_[j][j];
      if (a.get_den() != 1) throw std::logic_error("non-integral Cartan entry");
      rs.cartan_[i][j] = static_cast<int>(a.get_num().get_si());
    }

  // closure by root strings, level by level in height
  std::set<RootCoords> roots;
  std::set<RootCoords> level;
  for (std::size_t i = 0; i < n; ++i) level.insert(simple(n, i));
  while (!level.empty()) {
    roots.insert(level.begin(), level.end());
    std::set<RootCoords> next;
    for (const auto& g : level)
      for (std::size_t i = 0; i < n; ++i) {
        int r = 0;
        while (roots.count(add(g, simple(n, i), -(r + 1)))) ++r;
        int pair = 0;
        for (std::size_t j = 0; j < n; ++j) pair += g[j] * rs.cartan_[j][i];
        if (r - pair > 0) next.insert(add(g, simple(n, i)));
      }
    level = std::move(next);
  }
  rs.positive_.assign(roots.begin(), roots.end());
  std::sort(rs.positive_.begin(), rs.positive_.end(), [](const RootCoords& a, const RootCoords& b) {
    const int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  for (std::size_t i = 0; i < rs.positive_.size(); ++i) rs.index_[rs.positive_[i]] = i;

  std::vector<std::size_t> maximal;
  for (std::size_t r = 0; r < rs.positive_.size(); ++r) {
    bool top = true;
    for (std::size_t i = 0; i < n && top; ++i) top = !rs.index_.count(add(rs.positive_[r], simple(n, i)));
    if (top) maximal.push_back(r);
  }
  if (maximal.size() != 1) throw std::logic_error("highest root is not unique");
  rs.gamma_max_ = maximal.front();

  rs.compute_chevalley();
  return rs;
}

int RootSystem::height(const RootCoords& c) {
  int h = 0;
  for (int x : c) h += x;
  return h;
}

std::optional<std::size_t> RootSystem::index_of(const RootCoords& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool RootSystem::is_root(const RootCoords& c) const { return index_.count(c) || index_.count(neg(c)); }

Rational RootSystem::pairing(const RootCoords& a, const RootCoords& b) const {
  Rational s = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j)
      if (b[j] != 0) s += a[i] * b[j] * gram_[i][j];
  }
  return s;
}

Rational RootSystem::cartan_pairing(const RootCoords& gamma, const RootCoords& alpha) const {
  return 2 * pairing(gamma, alpha) / pairing(alpha, alpha);
}

RootString RootSystem::root_string(const RootCoords& gamma, const RootCoords& alpha) const {
  if (!is_root(gamma) || !is_root(alpha)) throw std::invalid_argument("root_string needs roots");
  if (gamma == alpha || gamma == neg(alpha)) throw std::invalid_argument("root_string needs non-proportional roots");
  RootString s;
  while (is_root(add(gamma, alpha, s.p - 1))) --s.p;
  while (is_root(add(gamma, alpha, s.q + 1))) ++s.q;
  if (Rational(s.p + s.q) != -cartan_pairing(gamma, alpha)) throw std::logic_error("root string length mismatch");
  return s;
}

SubsRootReport RootSystem::lemma_subsroot(const RootCoords& gamma, std::size_t alpha_index) const {
  const RootCoords alpha = simple(rank(), alpha_index);
  if (!is_positive_root(gamma) || gamma == alpha) throw std::invalid_argument("lemma_subsroot needs a positive root other than alpha");
  SubsRootReport rep;
  rep.plus_is_root = is_root(add(gamma, alpha));
  rep.minus_is_positive_root = is_positive_root(add(gamma, alpha, -1));
  rep.pairing = pairing(gamma, alpha);
  rep.first_clause_applies = !rep.plus_is_root;
  rep.first_clause_holds = rep.minus_is_positive_root == (rep.pairing > 0);
  rep.second_clause_applies = !is_root(add(gamma, alpha, -1));
  rep.second_clause_holds = rep.plus_is_root == (rep.pairing < 0);
  return rep;
}

// Extraspecial-pair induction. For each non-simple positive xi the
// extraspecial pair (a, xi - a) uses the first positive root a (in root
// order) with xi - a positive; its constant is +(p + 1). All other constants
// follow from the standard relations among N_{r,s}.
void RootSystem::compute_chevalley() {
  const std::size_t P = positive_.size();
  std::vector<std::size_t> extra(P, P);
  for (std::size_t x = 0; x < P; ++x) {
    if (height(positive_[x]) == 1) continue;
    for (std::size_t a = 0; a < P; ++a) {
      if (index_.count(add(positive_[x], positive_[a], -1))) {
        extra[x] = a;
        break;
      }
    }
    if (extra[x] == P) throw std::logic_error("no extraspecial pair");
  }

  // signed indices: i < P positive root i, i >= P its negative
  auto coords = [&](std::size_t i) { return i < P ? positive_[i] : neg(positive_[i - P]); };
  auto lookup = [&](const RootCoords& c) -> std::optional<std::size_t> {
    if (auto it = index_.find(c); it != index_.end()) return it->second;
    if (auto it = index_.find(neg(c)); it != index_.end()) return it->second + P;
    return std::nullopt;
  };
  auto negate = [&](std::size_t i) { return i < P ? i + P : i - P; };
  auto norm = [&](std::size_t i) { const auto c = coords(i); return pairing(c, c); };
  auto string_back = [&](const RootCoords& r, const RootCoords& s) {
    int p = 0;
    while (is_root(add(s, r, -(p + 1)))) ++p;
    return p;
  };

  std::vector<int> memo(4 * P * P, kUnset);
  auto N = [&](auto&& self, std::size_t r, std::size_t s) -> int {
    int& slot = memo[r * 2 * P + s];
    if (slot != kUnset) return slot;
    const auto sum = lookup(add(coords(r), coords(s)));
    int val = 0;
    if (!sum) {
      val = 0;
    } else if (r < P && s < P) {
      if (s < r) {
        val = -self(self, s, r);
      } else if (extra[*sum] == r) {
        val = string_back(coords(r), coords(s)) + 1;
      } else {
        const std::size_t a1 = extra[*sum];
        const std::size_t b1 = *lookup(add(coords(*sum), coords(a1), -1));
        Rational acc = 0;
        if (auto t = lookup(add(coords(s), coords(a1), -1))) {
          acc += Rational(self(self, s, negate(a1)) * self(self, r, negate(b1))) / norm(*t);
        }
        if (auto t = lookup(add(coords(r), coords(a1), -1))) {
          acc += Rational(self(self, negate(a1), r) * self(self, s, negate(b1))) / norm(*t);
        }
        const Rational v = norm(*sum) * acc / self(self, a1, b1);
        if (v.get_den() != 1) throw std::logic_error("non-integral structure constant");
        val = static_cast<int>(v.get_num().get_si());
      }
    } else if (r >= P && s >= P) {
      val = -self(self, negate(r), negate(s));
    } else {
      // r + s + (-t) = 0: N_{r,s}/(t,t) = N_{s,-t}/(r,r) = N_{-t,r}/(s,s)
      const std::size_t t = *sum, mt = negate(t);
      const bool via_s = (s >= P) == (mt >= P);
      const Rational v = via_s ? norm(t) / norm(r) * self(self, s, mt) : norm(t) / norm(s) * self(self, mt, r);
      if (v.get_den() != 1) throw std::logic_error("non-integral structure constant");
      val = static_cast<int>(v.get_num().get_si());
    }
    memo[r * 2 * P + s] = val;
    return val;
  };

  for (std::size_t r = 0; r < 2 * P; ++r)
    for (std::size_t s = 0; s < 2 * P; ++s) N(N, r, s);
  signed_ = std::move(memo);
  table_.assign(P, std::vector<int>(P, 0));
  for (std::size_t a = 0; a < P; ++a)
    for (std::size_t b = 0; b < P; ++b) {
      table_[a][b] = signed_[a * 2 * P + b];
      if (table_[a][b] != 0 && std::abs(table_[a][b]) != string_back(positive_[a], positive_[b]) + 1)
        throw std::logic_error("structure constant magnitude differs from p + 1");
    }
}

int RootSystem::chevalley(std::size_t a, std::size_t b) const { return table_.at(a).at(b); }

int RootSystem::chevalley_general(const RootCoords& r, const RootCoords& s) const {
  const std::size_t P = positive_.size();
  auto signed_index = [&](const RootCoords& c) -> std::size_t {
    if (auto i = index_of(c)) return *i;
    if (auto i = index_of(neg(c))) return *i + P;
    throw std::invalid_argument("chevalley_general needs roots");
  };
  return signed_[signed_index(r) * 2 * P + signed_index(s)];
}

LieAlgebra RootSystem::positive_part() const {
  const std::size_t P = positive_.size();
  std::vector<std::string> labels;
  for (const auto& c : positive_) labels.push_back("X[" + simple_label(c) + "]");
  BracketTable brackets;
  for (std::size_t a = 0; a < P; ++a)
    for (std::size_t b = a + 1; b < P; ++b)
      if (table_[a][b] != 0) brackets[{a, b}] = {Term{index_.at(add(positive_[a], positive_[b])), Rational(table_[a][b])}};
  return LieAlgebra::create(P, std::move(labels), std::move(brackets));
}

std::vector<std::vector<Rational>> RootSystem::simple_epsilon() const {
  if (!type_.classical()) throw std::logic_error("epsilon coordinates exist for classical types only");
  const std::size_t n = rank();
  const std::size_t m = type_.family == Family::A ? n + 1 : n;
  std::vector<std::vector<Rational>> out(n, std::vector<Rational>(m, Rational(0)));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    out[i][i] = 1;
    out[i][i + 1] = -1;
  }
  auto& last = out[n - 1];
  switch (type_.family) {
    case Family::A:
      last[n - 1] = 1;
      last[n] = -1;
      break;
    case Family::B:
      last[n - 1] = 1;
      break;
    case Family::C:
      last[n - 1] = 2;
      break;
    case Family::D:
      last[n - 2] = 1;
      last[n - 1] = 1;
      break;
    default:
      break;
  }
  return out;
}

std::vector<Rational> RootSystem::epsilon_coords(const RootCoords& c) const {
  const auto se = simple_epsilon();
  std::vector<Rational> e(se.front().size(), Rational(0));
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t k = 0; k < e.size(); ++k) e[k] += c[i] * se[i][k];
  return e;
}

std::optional<RootCoords> RootSystem::from_epsilon(const std::vector<Rational>& e) const {
  const auto se = simple_epsilon();
  const std::size_t n = rank(), m = se.front().size();
  if (e.size() != m) return std::nullopt;
  std::vector<Vec> rows;
  for (std::size_t k = 0; k < m; ++k) {
    Vec row(n + 1);
    for (std::size_t i = 0; i < n; ++i) row[i] = se[i][k];
    row[n] = e[k];
    rows.push_back(row);
  }
  const auto r = rref(MatrixQ::from_rows(rows, n + 1));
  if (!r.pivots.empty() && r.pivots.back() == n) return std::nullopt;  // inconsistent
  RootCoords c(n, 0);
  for (std::size_t p = 0; p < r.rank; ++p) {
    const Rational& v = r.matrix(p, n);
    if (v.get_den() != 1) return std::nullopt;
    c[r.pivots[p]] = static_cast<int>(v.get_num().get_si());
  }
  return c;
}

Rational RootSystem::epsilon_scale() const { return type_.family == Family::C ? Rational(1, 2) : Rational(1); }

std::string RootSystem::epsilon_label(const RootCoords& c) const {
  const auto e = epsilon_coords(c);
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    const Rational mag = abs(e[k]);
    if (e[k] < 0) os << '-';
    else if (!first) os << '+';
    if (mag != 1) os << to_string(mag);
    os << 'e' << k + 1;
    first = false;
  }
  return first ? "0" : os.str();
}

std::string RootSystem::simple_label(const RootCoords& c) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (c[i] < 0) os << '-';
    else if (!first) os << '+';
    if (std::abs(c[i]) != 1) os << std::abs(c[i]);
    os << 'g' << i + 1;
    first = false;
  }
  return first ? "0" : os.str();
}

std::size_t expected_positive_count(const CartanType& t) {
  const std::size_t n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

RootCoords expected_gamma_max(const CartanType& t) {
  const std::size_t n = t.rank;
  switch (t.family) {
    case Family::A: return RootCoords(n, 1);
    case Family::B: {
      RootCoords c(n, 2);
      c[0] = 1;
      return c;
    }
    case Family::C: {
      RootCoords c(n, 2);
      c[n - 1] = 1;
      return c;
    }
    case Family::D: {
      RootCoords c(n, 2);
      c[0] = c[n - 2] = c[n - 1] = 1;
      return c;
    }
    case Family::E:
      if (n == 6) return {1, 2, 2, 3, 2, 1};
      if (n == 7) return {2, 2, 3, 4, 3, 2, 1};
      return {2, 3, 4, 6, 5, 4, 3, 2};
    case Family::F: return {2, 3, 4, 2};
    case Family::G: return {3, 2};
  }
  return {};
}

}  // namespace adinv
