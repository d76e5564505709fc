#include "adinv/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "adinv/free_nilpotent.hpp"
#include "adinv/graph_algebra.hpp"
#include "adinv/parabolic.hpp"
#include "adinv/serialize.hpp"

namespace adinv {

namespace {

struct Table {
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> r) { rows.push_back(std::move(r)); }

  std::string render() const {
    std::vector<std::size_t> width;
    for (const auto& r : rows)
      for (std::size_t c = 0; c < r.size(); ++c) {
        if (width.size() <= c) width.push_back(0);
        width[c] = std::max(width[c], r[c].size());
      }
    std::string s;
    for (const auto& r : rows) {
      std::string line;
      for (std::size_t c = 0; c < r.size(); ++c) {
        line += r[c];
        if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
      }
      s += line + "\n";
    }
    return s;
  }
};

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInput("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string vec_text(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

std::string certificate_text(const ObstructionCertificate& c) {
  if (const auto* d = std::get_if<DimSeriesCertificate>(&c))
    return "DimSeries(j=" + std::to_string(d->j) + "): dim C^j + dim C_j = " + std::to_string(d->dim_lower) + " + " +
           std::to_string(d->dim_upper) + " != " + std::to_string(d->dim);
  if (const auto* t = std::get_if<ThetaCertificate>(&c))
    return "ThetaNonzero(" + t->decomposition.origin + ", s=" + std::to_string(t->decomposition.parts.size()) +
           "): dim Theta = " + std::to_string(t->theta.dim()) + ", vector " + vec_text(t->vector);
  const auto& h = std::get<HeisenbergReiterCertificate>(c);
  return "HeisenbergReiter: dim V1 = " + std::to_string(h.v1.dim()) + ", dim V2 = " + std::to_string(h.v2.dim());
}

void analysis_rows(Table& t, const Analysis& a) {
  t.add({"dim", std::to_string(a.dim)});
  t.add({"class", a.nilpotency_class ? std::to_string(*a.nilpotency_class) : "not nilpotent"});
  t.add({"lower central dims", join(a.lower_dims)});
  t.add({"upper central dims", join(a.upper_dims)});
  t.add({"center dim", std::to_string(a.center_dim)});
  t.add({"commutator dim", std::to_string(a.commutator_dim)});
  t.add({"verdict", to_string(a.kind)});
  t.add({"decided by", a.decided_by});
  if (a.certificates.empty()) t.add({"certificate", "-"});
  for (const auto& c : a.certificates) t.add({"certificate", certificate_text(c)});
  if (a.solver) {
    t.add({"form space dim", std::to_string(a.form_space_dim)});
    if (a.witness_signature)
      t.add({"witness signature", "(" + std::to_string(a.witness_signature->positive) + ", " +
                                      std::to_string(a.witness_signature->negative) + ", " +
                                      std::to_string(a.witness_signature->zero) + ")"});
    if (a.solver->radical_vector) t.add({"radical vector", vec_text(*a.solver->radical_vector)});
    if (a.solver->kind == NondegeneracyKind::RefutedMonteCarlo)
      t.add({"error bound", to_string(a.solver->bound) + " (" + std::to_string(a.solver->trials) + " trials)"});
  }
  if (a.probe)
    t.add({"nonsingular probe", std::string(a.probe->singular ? "singular" : "probably nonsingular") + " (" +
                                    std::to_string(a.probe->tested) + " tested)"});
  if (a.cap)
    t.add({"cap condition", std::string(a.cap->holds ? "holds" : "inconclusive") + " (dim intersection " +
                                std::to_string(a.cap->intersection.dim()) + ")"});
}

std::string witness_text(const Analysis& a) {
  if (!a.solver || !a.solver->witness) return {};
  const MatrixQ& w = *a.solver->witness;
  Table t;
  for (std::size_t r = 0; r < w.rows(); ++r) {
    std::vector<std::string> row;
    for (std::size_t c = 0; c < w.cols(); ++c) row.push_back(to_string(w(r, c)));
    t.add(row);
  }
  return "witness form:\n" + t.render();
}

bool refuted(const Analysis& a) { return a.kind == VerdictKind::Refuted || a.kind == VerdictKind::RefutedMonteCarlo; }

/// Admits iff abelian or (p,k) is (3,2) or (2,3).
bool free_predicts_admits(std::size_t p, std::size_t k) {
  return p == 1 || k == 1 || (p == 3 && k == 2) || (p == 2 && k == 3);
}

struct Settings {
  RunConfig cfg;
  bool json = false;
  std::string output;
};

class Emitter {
 public:
  Emitter(const Settings& s, std::ostream& out) : s_(s), out_(out) {}
  void emit(const Json& j, const std::string& text) {
    const std::string body = s_.json ? j.dump(2) + "\n" : text;
    if (s_.output.empty()) {
      out_ << body;
      return;
    }
    std::ofstream f(s_.output, std::ios::binary);
    if (!f) throw MalformedInput("cannot write '" + s_.output + "'");
    f << body;
  }

 private:
  const Settings& s_;
  std::ostream& out_;
};

int cmd_analyze(const Settings& s, Emitter& em, const std::string& path) {
  const LieAlgebra g = parse_structure_constants(read_input(path));
  const Analysis a = analyze(g, s.cfg);
  const Json report = make_report({{"kind", "structure-constants"}, {"path", path}}, g, a, s.cfg);
  Table t;
  t.add({"input", path});
  analysis_rows(t, a);
  em.emit(report, t.render() + witness_text(a));
  return a.consistent ? kExitOk : kExitDisagreement;
}

int cmd_graph(const Settings& s, Emitter& em, const std::string& path) {
  const Graph gr = parse_graph(read_input(path));
  const GraphCase c = analyze_graph_case(gr, s.cfg);
  const GraphAlgebra ga = build_graph_algebra(gr);
  const std::string pred = c.predicted.prediction == GraphPrediction::Admits ? "Admits" : "Refutes";
  const bool undecided = c.analysis.kind == VerdictKind::Undecided;
  const bool ok = c.analysis.consistent && c.dims_ok && (c.agree || undecided);
  Json report = make_report({{"kind", "graph"}, {"path", path}, {"vertices", c.vertices}, {"edges", c.edges},
                             {"edge_list", to_edge_list(gr)}},
                            ga.algebra, c.analysis, s.cfg);
  report["prediction"] = {{"verdict", pred}, {"reason", c.predicted.reason}};
  report["agree"] = c.agree;
  Table t;
  t.add({"input", path});
  t.add({"graph", std::to_string(c.vertices) + " vertices, " + std::to_string(c.edges) + " edges"});
  t.add({"prediction", pred + " (" + c.predicted.reason + ")"});
  analysis_rows(t, c.analysis);
  t.add({"agrees", undecided ? "undecided" : (c.agree ? "yes" : "NO")});
  em.emit(report, t.render() + witness_text(c.analysis));
  return ok ? kExitOk : kExitDisagreement;
}

int cmd_free(const Settings& s, Emitter& em, std::size_t p, std::size_t k) {
  if (p == 0 || k == 0) throw MalformedInput("free <p> <k> needs p >= 1 and k >= 1");
  const LieAlgebra g = free_nilpotent(p, k);
  const Analysis a = analyze(g, s.cfg);
  const bool admits = free_predicts_admits(p, k);
  const bool agree = admits ? a.kind == VerdictKind::Admits : refuted(a);
  const bool ok = a.consistent && (agree || a.kind == VerdictKind::Undecided);
  Json report = make_report({{"kind", "free-nilpotent"}, {"p", p}, {"k", k}}, g, a, s.cfg);
  report["prediction"] = {{"verdict", admits ? "Admits" : "Refutes"}};
  report["agree"] = agree;
  Table t;
  t.add({"input", "free nilpotent p=" + std::to_string(p) + " k=" + std::to_string(k)});
  t.add({"prediction", admits ? "Admits" : "Refutes"});
  analysis_rows(t, a);
  t.add({"agrees", a.kind == VerdictKind::Undecided ? "undecided" : (agree ? "yes" : "NO")});
  em.emit(report, t.render() + witness_text(a));
  return ok ? kExitOk : kExitDisagreement;
}

int cmd_parabolic(const Settings& s, Emitter& em, const std::string& spec_text, bool obstructions_only) {
  const ParabolicSpec spec = ParabolicSpec::parse(spec_text);
  const ParabolicNilradical pn = ParabolicNilradical::build(spec);
  const ParabolicCase c = analyze_parabolic_case(pn, s.cfg, obstructions_only);
  const std::size_t top = c.k >= 1 && c.analysis.lower_dims.size() >= c.k ? c.analysis.lower_dims[c.k - 1] : 0;
  Json report = make_report({{"kind", "parabolic"}, {"spec", c.spec}, {"k", c.k}, {"layer_dims", c.layer_dims},
                             {"obstructions_only", obstructions_only}},
                            pn.algebra(), c.analysis, s.cfg);
  report["summary"]["top_lower_central_dim"] = top;
  report["prediction"] = {{"verdict", to_string(c.predicted.prediction)},
                          {"argument", c.predicted.argument},
                          {"reason", c.predicted.reason}};
  report["structural"] = {{"check", c.structural}, {"ok", c.structural_ok}};
  report["grading_ok"] = c.grading_ok;
  report["agree"] = c.agree;
  Table t;
  t.add({"input", c.spec});
  t.add({"k", std::to_string(c.k)});
  t.add({"layer dims", join(c.layer_dims)});
  t.add({"dim C^{k-1}", std::to_string(top)});
  t.add({"prediction", to_string(c.predicted.prediction) + " (" + c.predicted.argument + ")"});
  t.add({"grading", c.grading_ok ? "verified" : "FAILED"});
  if (!c.structural.empty()) t.add({"structural check", c.structural + (c.structural_ok ? ": ok" : ": FAILED")});
  analysis_rows(t, c.analysis);
  t.add({"agrees", c.agree ? "yes" : "NO"});
  em.emit(report, t.render() + witness_text(c.analysis));
  return c.agree && c.analysis.consistent ? kExitOk : kExitDisagreement;
}

int cmd_scan_graphs(const Settings& s, Emitter& em, std::size_t max_vertices, std::size_t union_vertices) {
  if (max_vertices > 7) throw MalformedInput("--max-vertices is at most 7");
  const GraphScan scan = scan_graphs(max_vertices, union_vertices, s.cfg);
  Table t;
  t.add({"graph", "dim", "predicted", "verdict", "decided by", "agree"});
  for (const auto& c : scan.cases)
    t.add({c.descriptor, std::to_string(c.analysis.dim),
           c.predicted.prediction == GraphPrediction::Admits ? "Admits" : "Refutes", to_string(c.analysis.kind),
           c.analysis.decided_by, c.agree && c.dims_ok ? "yes" : "NO"});
  std::ostringstream summary;
  summary << "cases " << scan.cases.size() << " (connected " << scan.connected << ", unions " << scan.unions
          << "), disagreements " << scan.disagreements() << ", inconsistent " << scan.inconsistent() << "\n";
  em.emit(graph_scan_to_json(scan, s.cfg), t.render() + summary.str());
  return scan.disagreements() == 0 && scan.inconsistent() == 0 ? kExitOk : kExitDisagreement;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  if (out.empty()) throw MalformedInput("empty type list");
  return out;
}

int cmd_scan_parabolics(const Settings& s, Emitter& em, const std::string& types, std::size_t max_rank) {
  if (max_rank == 0) throw MalformedInput("--max-rank must be positive");
  const ParabolicScan scan = scan_parabolics(parabolic_cases(split_list(types), max_rank), s.cfg);
  Table t;
  t.add({"nilradical", "dim", "k", "predicted", "argument", "verdict", "decided by", "agree"});
  for (const auto& c : scan.cases)
    t.add({c.spec, std::to_string(c.dim), std::to_string(c.k), to_string(c.predicted.prediction), c.predicted.argument,
           to_string(c.analysis.kind), c.analysis.decided_by, c.agree ? "yes" : "NO"});
  std::ostringstream summary;
  summary << "cases " << scan.cases.size() << ", disagreements " << scan.disagreements() << ", inconsistent "
          << scan.inconsistent() << "\n";
  em.emit(parabolic_scan_to_json(scan, s.cfg), t.render() + summary.str());
  return scan.disagreements() == 0 && scan.inconsistent() == 0 ? kExitOk : kExitDisagreement;
}

int cmd_series(Emitter& em, const std::string& path, const std::string& subspace_path) {
  const LieAlgebra g = parse_structure_constants(read_input(path));
  const Subspace v = subspace_path.empty() ? Subspace::full(g.dim()) : parse_subspace(read_input(subspace_path), g.dim());
  const SeriesReport r = relative_series(g, v);
  Json desc = Json::array(), asc = Json::array();
  for (const auto& x : r.descending) desc.push_back(subspace_to_json(x));
  for (const auto& x : r.ascending) asc.push_back(subspace_to_json(x));
  Json j = {{"input", {{"kind", "structure-constants"}, {"path", path}}},
            {"subspace", subspace_to_json(v)},
            {"descending", desc},
            {"ascending", asc},
            {"descending_dims", r.descending_dims()},
            {"ascending_dims", r.ascending_dims()},
            {"ascending_nested", r.ascending_stabilized}};
  Table t;
  t.add({"input", path});
  t.add({"dim V", std::to_string(v.dim())});
  t.add({"C^j(V) dims", join(r.descending_dims())});
  t.add({"C_j(V) dims", join(r.ascending_dims())});
  if (!r.ascending_stabilized) t.add({"note", "ascending terms not nested; stopped at first repeat"});
  em.emit(j, t.render());
  return kExitOk;
}

int cmd_verify(Emitter& em, const std::string& path) {
  Json report;
  try {
    report = Json::parse(read_input(path));
  } catch (const Json::parse_error& e) {
    throw MalformedInput(std::string("report: ") + e.what());
  }
  const VerifyResult v = verify_report(report);
  Json j = {{"report", path}, {"ok", v.ok}, {"messages", v.messages}};
  std::string text;
  for (const auto& m : v.messages) text += m + "\n";
  text += v.ok ? "report verified\n" : "report FAILED verification\n";
  em.emit(j, text);
  return v.ok ? kExitOk : kExitDisagreement;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ad-invariant metrics on nilpotent Lie algebras: exact analysis, obstructions and scans", "adinv"};
  app.fallthrough();
  app.require_subcommand(0, 1);

  Settings s;
  std::uint64_t seed = 0, mc_range = 0;
  std::size_t mc_trials = 0, dim_cap = 0, theta_budget = 0;
  std::string verify_path;
  app.add_flag("--json", s.json, "emit JSON instead of a text table");
  app.add_option("-o,--output", s.output, "write the report to FILE instead of stdout");
  auto* o_seed = app.add_option("--seed", seed, "random seed (env ADINV_SEED)");
  auto* o_trials = app.add_option("--mc-trials", mc_trials, "Monte Carlo trials (env ADINV_MC_TRIALS)");
  auto* o_range = app.add_option("--mc-range", mc_range, "Monte Carlo sample range (env ADINV_MC_RANGE)");
  auto* o_cap = app.add_option("--solver-dim-cap", dim_cap, "largest dimension given to the solver (env ADINV_SOLVER_DIM_CAP)");
  auto* o_theta = app.add_option("--theta-budget", theta_budget, "decompositions tried by the Theta search (env ADINV_THETA_BUDGET)");
  app.add_flag("--timings", s.cfg.timings, "include wall-clock timings in reports");
  app.add_option("--verify", verify_path, "re-verify a JSON report and exit");

  std::string path, spec, subspace, types = "A,B,C,D,G2,F4,E6";
  std::size_t p = 0, k = 0, max_vertices = 6, union_vertices = 8, max_rank = 5;
  bool obstructions_only = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "analyze a structure-constant JSON file");
  analyze_cmd->add_option("file", path, "structure constants ('-' for stdin)")->required();
  auto* graph_cmd = app.add_subcommand("graph", "analyze the 2-step algebra of a graph and compare with the classification");
  graph_cmd->add_option("file", path, "edge list or graph JSON ('-' for stdin)")->required();
  auto* free_cmd = app.add_subcommand("free", "analyze the free k-step nilpotent algebra on p generators");
  free_cmd->add_option("p", p)->required();
  free_cmd->add_option("k", k)->required();
  auto* par_cmd = app.add_subcommand("parabolic", "analyze a parabolic nilradical, e.g. E6:g3 or B3:g1,g2");
  par_cmd->add_option("spec", spec)->required();
  par_cmd->add_flag("--obstructions-only", obstructions_only, "skip the invariant-form solver");
  auto* sg_cmd = app.add_subcommand("scan-graphs", "connected graphs and their disjoint unions");
  sg_cmd->add_option("--max-vertices", max_vertices, "connected graphs up to this many vertices")->capture_default_str();
  sg_cmd->add_option("--union-vertices", union_vertices, "unions up to this many vertices")->capture_default_str();
  auto* sp_cmd = app.add_subcommand("scan-parabolics", "single-root and two-root parabolic nilradicals");
  sp_cmd->add_option("--types", types, "comma list of families (A) or exact types (E6)")->capture_default_str();
  sp_cmd->add_option("--max-rank", max_rank, "largest rank per family")->capture_default_str();
  auto* series_cmd = app.add_subcommand("series", "relative lower and upper central series of a subspace");
  series_cmd->add_option("file", path, "structure constants")->required();
  series_cmd->add_option("--subspace", subspace, "JSON list of spanning vectors (default: whole algebra)");
  auto* verify_cmd = app.add_subcommand("verify", "re-verify a JSON report");
  verify_cmd->add_option("report", path)->required();

  std::vector<std::string> argv_store = {"adinv"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitMalformed;
  }

  try {
    s.cfg.apply_environment();
    if (o_seed->count()) s.cfg.seed = seed;
    if (o_trials->count()) s.cfg.mc_trials = mc_trials;
    if (o_range->count()) s.cfg.mc_range = mc_range;
    if (o_cap->count()) s.cfg.solver_dim_cap = dim_cap;
    if (o_theta->count()) s.cfg.theta_budget = theta_budget;
    s.cfg.validate();

    Emitter em(s, out);
    if (!verify_path.empty()) return cmd_verify(em, verify_path);
    if (analyze_cmd->parsed()) return cmd_analyze(s, em, path);
    if (graph_cmd->parsed()) return cmd_graph(s, em, path);
    if (free_cmd->parsed()) return cmd_free(s, em, p, k);
    if (par_cmd->parsed()) return cmd_parabolic(s, em, spec, obstructions_only);
    if (sg_cmd->parsed()) return cmd_scan_graphs(s, em, max_vertices, union_vertices);
    if (sp_cmd->parsed()) return cmd_scan_parabolics(s, em, types, max_rank);
    if (series_cmd->parsed()) return cmd_series(em, path, subspace);
    if (verify_cmd->parsed()) return cmd_verify(em, path);
    err << "error: a subcommand is required\n\n" << app.help();
    return kExitMalformed;
  } catch (const MalformedInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace adinv
