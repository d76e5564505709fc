#include "adinv/parabolic.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "adinv/free_nilpotent.hpp"
#include "adinv/invariant_forms.hpp"

namespace adinv {

namespace {

RootCoords diff(const RootCoords& a, const RootCoords& b) {
  RootCoords c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

}  // namespace

ParabolicSpec ParabolicSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw MalformedInput("parabolic spec must look like 'B3:g3' or 'E6:g2,g4'");
  ParabolicSpec spec;
  spec.type = CartanType::parse(text.substr(0, colon));
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    if (!item.empty() && (item[0] == 'g' || item[0] == 'G')) item.remove_prefix(1);
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        item.size() > 3)
      throw MalformedInput("malformed simple root '" + std::string(rest.substr(0, comma)) + "' in parabolic spec");
    const std::size_t idx = std::stoul(std::string(item));
    if (idx < 1 || idx > spec.type.rank) throw MalformedInput("simple root index out of range in parabolic spec");
    spec.pi0.push_back(idx - 1);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
    if (rest.empty()) throw MalformedInput("trailing comma in parabolic spec");
  }
  std::sort(spec.pi0.begin(), spec.pi0.end());
  if (std::adjacent_find(spec.pi0.begin(), spec.pi0.end()) != spec.pi0.end())
    throw MalformedInput("repeated simple root in parabolic spec");
  if (spec.pi0.empty()) throw MalformedInput("parabolic spec needs at least one simple root");
  return spec;
}

std::string ParabolicSpec::name() const {
  std::string s = type.name() + ":";
  for (std::size_t i = 0; i < pi0.size(); ++i) s += (i ? ",g" : "g") + std::to_string(pi0[i] + 1);
  return s;
}

ParabolicNilradical ParabolicNilradical::build(const ParabolicSpec& spec) {
  return build(std::make_shared<const RootSystem>(RootSystem::build(spec.type)), spec.pi0);
}

ParabolicNilradical ParabolicNilradical::build(std::shared_ptr<const RootSystem> rs, std::vector<std::size_t> pi0) {
  std::sort(pi0.begin(), pi0.end());
  pi0.erase(std::unique(pi0.begin(), pi0.end()), pi0.end());
  if (pi0.empty()) throw MalformedInput("Pi_0 must be nonempty");
  for (auto a : pi0)
    if (a >= rs->rank()) throw MalformedInput("Pi_0 index out of range");

  ParabolicNilradical pn;
  pn.rs_ = std::move(rs);
  pn.pi0_ = std::move(pi0);
  const RootSystem& R = *pn.rs_;
  const std::size_t P = R.positive_count();
  pn.basis_of_root_.assign(P, P);
  std::vector<std::string> labels;
  for (std::size_t r = 0; r < P; ++r) {
    if (pn.order(r) > 0) {
      pn.basis_of_root_[r] = pn.basis_roots_.size();
      pn.basis_roots_.push_back(r);
      labels.push_back("X[" + R.simple_label(R.root(r)) + "]");
    }
  }
  const std::size_t n = pn.basis_roots_.size();
  BracketTable brackets;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const int c = R.chevalley(pn.basis_roots_[a], pn.basis_roots_[b]);
      if (c == 0) continue;
      RootCoords s = R.root(pn.basis_roots_[a]);
      for (std::size_t i = 0; i < s.size(); ++i) s[i] += R.root(pn.basis_roots_[b])[i];
      brackets[{a, b}] = {Term{pn.basis_of_root_[*R.index_of(s)], Rational(c)}};
    }
  pn.algebra_ = LieAlgebra::create(n, std::move(labels), std::move(brackets));
  pn.k_ = static_cast<std::size_t>(pn.order(R.gamma_max_index()));
  std::vector<std::vector<std::size_t>> members(pn.k_ + 1);
  for (std::size_t b = 0; b < n; ++b) members[static_cast<std::size_t>(pn.order(pn.basis_roots_[b]))].push_back(b);
  for (const auto& m : members) pn.layers_.push_back(Subspace::coordinate(n, m));
  return pn;
}

std::optional<std::size_t> ParabolicNilradical::basis_of(std::size_t root_index) const {
  if (root_index >= basis_of_root_.size() || basis_of_root_[root_index] == basis_of_root_.size()) return std::nullopt;
  return basis_of_root_[root_index];
}

int ParabolicNilradical::order(std::size_t root_index) const {
  int o = 0;
  for (auto a : pi0_) o += rs_->root(root_index)[a];
  return o;
}

std::vector<std::size_t> ParabolicNilradical::layer_dims() const {
  std::vector<std::size_t> d;
  for (std::size_t i = 1; i <= k_; ++i) d.push_back(layers_[i].dim());
  return d;
}

std::string ParabolicNilradical::name() const { return ParabolicSpec{rs_->type(), pi0_}.name(); }

GradingReport verify_lcs_grading(const ParabolicNilradical& pn) {
  const LieAlgebra& g = pn.algebra();
  const std::size_t n = g.dim(), k = pn.k();
  GradingReport rep;
  rep.layer_dims = pn.layer_dims();

  auto ord = [&](std::size_t b) { return pn.order(pn.basis_roots()[b]); };
  rep.multiplicative = true;
  for (const auto& [key, terms] : g.brackets())
    for (const auto& t : terms)
      if (ord(t.k) != ord(key.first) + ord(key.second)) rep.multiplicative = false;

  const SeriesReport s = central_series(g);
  rep.series_dims = s.descending_dims();
  rep.series_matches = s.descending.size() == k + 1;
  for (std::size_t j = 0; j <= k && rep.series_matches; ++j) {
    Subspace tail = Subspace::zero(n);
    for (std::size_t i = j + 1; i <= k; ++i) tail = span_sum(tail, pn.layer(i));
    rep.series_matches = s.descending[j] == tail;
  }
  rep.center_matches = center(g) == pn.layer(k);
  rep.generated = true;
  for (std::size_t i = 2; i <= k; ++i)
    if (!(bracket_span(g, pn.layer(1), pn.layer(i - 1)) == pn.layer(i))) rep.generated = false;
  return rep;
}

DecompCertificate decompose_root(const ParabolicNilradical& pn, std::size_t gamma, std::size_t alpha) {
  const RootSystem& R = pn.roots();
  if (pn.pi0().size() < 2) throw PreconditionError("decompose_root needs |Pi_0| >= 2");
  if (std::find(pn.pi0().begin(), pn.pi0().end(), alpha) == pn.pi0().end())
    throw PreconditionError("alpha must belong to Pi_0");
  if (gamma >= R.positive_count() || pn.order(gamma) != static_cast<int>(pn.k()))
    throw PreconditionError("gamma must lie in the top layer");

  struct State {
    std::size_t root;
    std::vector<std::size_t> removed;  // beta_1, beta_2, ...
  };
  std::vector<State> level{{gamma, {}}};
  std::set<std::size_t> seen{gamma};
  while (!level.empty()) {
    // case (i): a single subtraction reaching coord_alpha = 0
    for (const auto& st : level)
      for (std::size_t b = 0; b < R.positive_count(); ++b) {
        if (R.root(b)[alpha] == 0) continue;
        const auto rest = R.index_of(diff(R.root(st.root), R.root(b)));
        if (!rest || R.root(*rest)[alpha] != 0 || pn.order(*rest) <= 0) continue;
        DecompCertificate c{gamma, alpha, *rest, {}};
        auto removed = st.removed;
        removed.push_back(b);
        c.betas.assign(removed.rbegin(), removed.rend());
        return c;
      }
    std::vector<State> next;
    for (const auto& st : level)
      for (std::size_t b = 0; b < R.positive_count(); ++b) {
        if (R.root(b)[alpha] == 0) continue;
        const auto rest = R.index_of(diff(R.root(st.root), R.root(b)));
        if (!rest || R.root(*rest)[alpha] == 0 || !seen.insert(*rest).second) continue;
        auto removed = st.removed;
        removed.push_back(b);
        next.push_back({*rest, std::move(removed)});
      }
    level = std::move(next);
  }
  throw std::logic_error("no decomposition found for " + R.simple_label(R.root(gamma)) + " in " + pn.name());
}

std::string verify_decomposition(const ParabolicNilradical& pn, const DecompCertificate& c) {
  const RootSystem& R = pn.roots();
  const std::size_t n = R.rank();
  auto coords = [&](std::size_t r) { return R.root(r); };
  auto in_nilradical = [&](const RootCoords& x) {
    if (!R.is_positive_root(x)) return false;
    int o = 0;
    for (auto a : pn.pi0()) o += x[a];
    return o > 0;
  };
  if (c.betas.empty()) return "t = 0";
  if (coords(c.delta)[c.alpha] != 0) return "coord_alpha(delta) != 0";
  if (!in_nilradical(coords(c.delta))) return "delta is not a root of the nilradical";
  RootCoords partial = coords(c.delta);
  for (auto b : c.betas) {
    if (coords(b)[c.alpha] == 0) return "some beta has coord_alpha = 0";
    for (std::size_t i = 0; i < n; ++i) partial[i] += coords(b)[i];
    if (!in_nilradical(partial)) return "a partial sum is not a root of the nilradical";
  }
  if (partial != coords(c.gamma)) return "delta + sum of betas differs from gamma";
  if (static_cast<int>(c.t()) > coords(c.gamma)[c.alpha]) return "t exceeds coord_alpha(gamma)";
  return {};
}

std::string to_string(NilradicalPrediction p) {
  switch (p) {
    case NilradicalPrediction::Abelian: return "Abelian";
    case NilradicalPrediction::N23: return "N23";
    case NilradicalPrediction::N32: return "N32";
    case NilradicalPrediction::Refutes: return "Refutes";
  }
  return {};
}

NilradicalClassification classify_nilradical(const RootSystem& rs, const std::vector<std::size_t>& pi0) {
  NilradicalClassification out;
  const CartanType& t = rs.type();
  const std::size_t n = t.rank;
  if (pi0.size() >= 2) {
    out.argument = "multiple-roots";
    out.reason = "|Pi_0| = " + std::to_string(pi0.size()) + " >= 2";
    return out;
  }
  const std::size_t a = pi0.at(0);
  const int c = rs.gamma_max()[a];
  if (c == 1) {
    out.prediction = NilradicalPrediction::Abelian;
    out.argument = "abelian";
    out.reason = "coord_alpha(gamma_max) = 1";
    return out;
  }
  if (t.family == Family::B && a == n - 1 && n == 3) {
    out.prediction = NilradicalPrediction::N32;
    out.argument = "free-3-2";
    out.reason = "free 2-step nilpotent on 3 generators";
    return out;
  }
  if (t.family == Family::G && a == 0) {
    out.prediction = NilradicalPrediction::N23;
    out.argument = "free-2-3";
    out.reason = "free 3-step nilpotent on 2 generators";
    return out;
  }
  switch (t.family) {
    case Family::B:
      if (a == n - 1) {
        out.argument = "free-2-step";
        out.reason = "free 2-step nilpotent on " + std::to_string(n) + " generators, which admits only for 3 generators";
      } else {
        out.argument = "theta";
        out.reason = "Theta ideal of V1 + V2 + V3 (e_i - e_j, e_i + e_j, e_i) is the nonzero center";
      }
      break;
    case Family::C:
    case Family::D:
      out.argument = "heisenberg-reiter";
      out.reason = "g_(1) = V1 + V2 with abelian V1 (e_i - e_j), V2 (e_i + e_j) and [V1,V2] = C^1";
      break;
    case Family::G:
      out.argument = "dim-series";
      out.reason = "one-dimensional center in a 5-dimensional 2-step algebra";
      break;
    default: {
      std::vector<std::size_t> count(static_cast<std::size_t>(c) + 1, 0);
      for (const auto& r : rs.positive()) count[static_cast<std::size_t>(r[a])]++;
      out.argument = "dim-count";
      out.reason = "dim C^{k-1} = " + std::to_string(count[static_cast<std::size_t>(c)]) + " differs from dim n/C^1 = " +
                   std::to_string(count[1]);
      break;
    }
  }
  return out;
}

std::vector<Decomposition> nilradical_decompositions(const ParabolicNilradical& pn) {
  const RootSystem& R = pn.roots();
  const std::size_t n = pn.algebra().dim();
  std::map<std::string, std::vector<std::size_t>> groups;
  std::vector<std::string> order;
  for (std::size_t b = 0; b < n; ++b) {
    const std::size_t r = pn.basis_roots()[b];
    if (pn.order(r) != 1) continue;
    std::string key;
    if (pn.pi0().size() >= 2) {
      for (auto a : pn.pi0())
        if (R.root(r)[a] > 0) key = "g" + std::to_string(a + 1);
    } else if (R.type().classical() && R.type().family != Family::A) {
      const auto e = R.epsilon_coords(R.root(r));
      const auto pos = std::count_if(e.begin(), e.end(), [](const Rational& x) { return x > 0; });
      const auto neg = std::count_if(e.begin(), e.end(), [](const Rational& x) { return x < 0; });
      key = neg ? "e_i-e_j" : pos == 2 ? "e_i+e_j" : "e_i";
    } else {
      continue;
    }
    if (!groups.count(key)) order.push_back(key);
    groups[key].push_back(b);
  }
  if (groups.size() < 2) return {};
  // classical shapes in the fixed order V1, V2, V3
  static const std::vector<std::string> shapes{"e_i-e_j", "e_i+e_j", "e_i"};
  if (pn.pi0().size() == 1) order.clear();
  if (pn.pi0().size() == 1)
    for (const auto& s : shapes)
      if (groups.count(s)) order.push_back(s);
  Decomposition d{{}, pn.pi0().size() >= 2 ? "pi0-classes" : "epsilon-classes"};
  for (const auto& key : order) d.parts.push_back(Subspace::coordinate(n, groups[key]));
  return {d};
}

std::optional<std::pair<Subspace, Subspace>> heisenberg_reiter_split(const ParabolicNilradical& pn) {
  const Family f = pn.roots().type().family;
  if ((f != Family::C && f != Family::D) || pn.pi0().size() != 1) return std::nullopt;
  const auto ds = nilradical_decompositions(pn);
  if (ds.empty() || ds.front().parts.size() != 2) return std::nullopt;
  return std::make_pair(ds.front().parts[0], ds.front().parts[1]);
}

std::optional<MatrixQ> match_free_layers(const ParabolicNilradical& pn, std::size_t p, std::size_t k) {
  const std::size_t n = pn.algebra().dim();
  std::vector<Vec> gens;
  for (std::size_t b = 0; b < n; ++b)
    if (pn.order(pn.basis_roots()[b]) == 1) gens.push_back(unit_vec(n, b));
  if (gens.size() != p) return std::nullopt;
  return match_free_nilpotent(pn.algebra(), gens, p, k);
}

}  // namespace adinv
