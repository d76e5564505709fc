#include "adinv/scans.hpp"

#include <algorithm>
#include <map>
#include <memory>

#include "adinv/free_nilpotent.hpp"
#include "adinv/graph_enum.hpp"

namespace adinv {

namespace {

bool refuted(const Analysis& a) { return a.kind == VerdictKind::Refuted || a.kind == VerdictKind::RefutedMonteCarlo; }

bool has_dim_series(const Analysis& a, std::optional<std::size_t> level = std::nullopt) {
  for (const auto& c : a.certificates)
    if (const auto* d = std::get_if<DimSeriesCertificate>(&c))
      if (!level || d->j == *level) return true;
  return false;
}

}  // namespace

std::size_t GraphScan::disagreements() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const GraphCase& c) { return !c.agree || !c.dims_ok; }));
}

std::size_t GraphScan::inconsistent() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const GraphCase& c) { return !c.analysis.consistent; }));
}

std::string graph_descriptor(const Graph& g) {
  std::string s = std::to_string(g.vertex_count()) + ":";
  for (std::size_t t = 0; t < g.edge_count(); ++t) {
    const auto [a, b] = g.edges()[t];
    s += (t ? "," : "") + std::to_string(a + 1) + "-" + std::to_string(b + 1);
  }
  return s;
}

GraphCase analyze_graph_case(const Graph& g, const RunConfig& cfg) {
  GraphCase c;
  c.graph = g;
  c.descriptor = graph_descriptor(g);
  c.vertices = g.vertex_count();
  c.edges = g.edge_count();
  c.predicted = classify_graph(g);
  const GraphAlgebra ga = build_graph_algebra(g);
  AnalysisOptions opts;
  opts.registered = graph_decompositions(ga);
  c.analysis = analyze(ga.algebra, cfg, opts);
  const std::size_t isolated = g.vertex_count() - g.non_isolated_count();
  c.dims_ok = c.analysis.dim == c.vertices + c.edges && c.analysis.commutator_dim == c.edges &&
              c.analysis.center_dim == isolated + c.edges;
  c.agree = c.predicted.prediction == GraphPrediction::Admits ? c.analysis.kind == VerdictKind::Admits : refuted(c.analysis);
  return c;
}

GraphScan scan_graphs(std::size_t max_vertices, std::size_t max_union_vertices, const RunConfig& cfg) {
  GraphScan scan;
  const auto connected = connected_graphs(max_vertices);
  const auto unions = disjoint_unions(connected, max_union_vertices);
  scan.connected = connected.size();
  scan.unions = unions.size();
  for (const auto& g : connected) scan.cases.push_back(analyze_graph_case(g, cfg));
  for (const auto& g : unions) scan.cases.push_back(analyze_graph_case(g, cfg));
  return scan;
}

std::size_t ParabolicScan::disagreements() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const ParabolicCase& c) { return !c.agree; }));
}

std::size_t ParabolicScan::inconsistent() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const ParabolicCase& c) { return !c.analysis.consistent; }));
}

ParabolicCase analyze_parabolic_case(const ParabolicNilradical& pn, const RunConfig& cfg, bool obstructions_only) {
  ParabolicCase c;
  c.spec = pn.name();
  c.dim = pn.algebra().dim();
  c.k = pn.k();
  c.layer_dims = pn.layer_dims();
  c.predicted = classify_nilradical(pn.roots(), pn.pi0());
  c.grading_ok = verify_lcs_grading(pn).ok();

  AnalysisOptions opts;
  opts.obstructions_only = obstructions_only;
  opts.registered = nilradical_decompositions(pn);
  if (auto split = heisenberg_reiter_split(pn)) opts.hr_splits.push_back(*split);
  c.analysis = analyze(pn.algebra(), cfg, opts);
  const LieAlgebra& g = pn.algebra();

  const std::string& arg = c.predicted.argument;
  if (arg == "abelian") {
    c.structural_ok = g.is_abelian();
    c.structural = "abelian";
  } else if (arg == "free-3-2" || arg == "free-2-3") {
    const std::size_t p = arg == "free-3-2" ? 3 : 2, k = arg == "free-3-2" ? 2 : 3;
    const auto iso = match_free_layers(pn, p, k);
    c.structural_ok = iso && verify_free_isomorphism(g, *iso, p, k);
    c.structural = "isomorphism onto free_nilpotent(" + std::to_string(p) + "," + std::to_string(k) + ")";
  } else if (arg == "theta") {
    const auto ds = nilradical_decompositions(pn);
    c.structural = "Theta(V1,V2,V3) = z";
    c.structural_ok = ds.size() == 1 && ds.front().parts.size() == 3 && theta_ideal(g, ds.front()) == center(g) &&
                      center(g).dim() > 0;
  } else if (arg == "heisenberg-reiter") {
    const auto split = heisenberg_reiter_split(pn);
    c.structural = "Heisenberg-Reiter split";
    c.structural_ok = split && std::holds_alternative<ObstructionCertificate>(
                                   heisenberg_reiter_obstruction(g, split->first, split->second));
  } else if (arg == "dim-count") {
    c.structural = "dimension series fails at j = 1";
    c.structural_ok = has_dim_series(c.analysis, 1);
  } else if (arg == "dim-series" || arg == "free-2-step") {
    c.structural = "dimension series certificate";
    c.structural_ok = has_dim_series(c.analysis);
  } else if (arg == "multiple-roots") {
    c.structural = "top-layer decompositions";
    c.structural_ok = true;
    const auto& R = pn.roots();
    for (std::size_t r = 0; r < R.positive_count() && c.structural_ok; ++r) {
      if (pn.order(r) != static_cast<int>(pn.k())) continue;
      for (auto a : pn.pi0())
        if (!verify_decomposition(pn, decompose_root(pn, r, a)).empty()) c.structural_ok = false;
    }
  }

  const bool solver_admits = c.analysis.solver && c.analysis.solver->kind == NondegeneracyKind::Admits;
  if (c.predicted.prediction == NilradicalPrediction::Refutes) {
    c.agree = c.grading_ok && c.structural_ok && !solver_admits &&
              (refuted(c.analysis) || (c.analysis.kind == VerdictKind::Undecided && !c.analysis.certificates.empty()));
  } else {
    c.agree = c.grading_ok && c.structural_ok && c.analysis.kind == VerdictKind::Admits;
  }
  return c;
}

std::vector<ParabolicSpec> parabolic_cases(const std::vector<std::string>& types, std::size_t max_rank) {
  std::vector<CartanType> list;
  for (const auto& t : types) {
    if (t.size() == 1) {
      const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(t[0])));
      if (std::string("ABCDEFG").find(c) == std::string::npos) throw MalformedInput("unknown Cartan family '" + t + "'");
      for (std::size_t r = 1; r <= max_rank; ++r) {
        try {
          list.push_back(CartanType::parse(std::string(1, c) + std::to_string(r)));
        } catch (const MalformedInput&) {
        }
      }
    } else {
      list.push_back(CartanType::parse(t));
    }
  }
  std::vector<ParabolicSpec> out;
  for (const auto& t : list) {
    const std::size_t n = t.rank;
    for (std::size_t a = 0; a < n; ++a) out.push_back({t, {a}});
    std::vector<std::vector<std::size_t>> pairs;
    if (n <= 4) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) pairs.push_back({a, b});
    } else {
      pairs = {{0, 1}, {0, n - 1}, {n - 2, n - 1}};
    }
    for (auto& p : pairs) out.push_back({t, p});
  }
  return out;
}

ParabolicScan scan_parabolics(const std::vector<ParabolicSpec>& specs, const RunConfig& cfg) {
  ParabolicScan scan;
  std::map<std::string, std::shared_ptr<const RootSystem>> cache;
  for (const auto& s : specs) {
    auto& rs = cache[s.type.name()];
    if (!rs) rs = std::make_shared<const RootSystem>(RootSystem::build(s.type));
    const auto pn = ParabolicNilradical::build(rs, s.pi0);
    scan.cases.push_back(analyze_parabolic_case(pn, cfg, false));
  }
  return scan;
}

}  // namespace adinv
