#include "adinv/serialize.hpp"

#include "adinv/polynomial.hpp"

namespace adinv {

namespace {

std::size_t index_field(const Json& j, const char* key, std::size_t dim) {
  if (!j.contains(key) || !j[key].is_number_integer()) throw MalformedInput(std::string("missing integer field \"") + key + "\"");
  const auto v = j[key].get<long long>();
  if (v < 1 || static_cast<unsigned long long>(v) > dim)
    throw MalformedInput(std::string("index \"") + key + "\" out of range 1.." + std::to_string(dim));
  return static_cast<std::size_t>(v - 1);
}

Rational rational_field(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw MalformedInput("rationals must be strings such as \"3/4\" or integers");
}

Json parse_json(std::string_view text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw MalformedInput(std::string(what) + ": " + e.what());
  }
}

std::string kind_name(NondegeneracyKind k) {
  switch (k) {
    case NondegeneracyKind::Admits: return "Admits";
    case NondegeneracyKind::RefutedSymbolic: return "RefutedSymbolic";
    case NondegeneracyKind::RefutedMonteCarlo: return "RefutedMonteCarlo";
  }
  return {};
}

}  // namespace

Json algebra_to_json(const LieAlgebra& g) {
  Json brackets = Json::array();
  for (const auto& [key, terms] : g.brackets()) {
    Json ts = Json::array();
    for (const auto& t : terms) ts.push_back({{"k", t.k + 1}, {"c", to_string(t.c)}});
    brackets.push_back({{"i", key.first + 1}, {"j", key.second + 1}, {"terms", ts}});
  }
  return {{"dim", g.dim()}, {"labels", g.labels()}, {"brackets", brackets}};
}

LieAlgebra algebra_from_json(const Json& j) {
  if (!j.is_object()) throw MalformedInput("structure constants must be a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long long>() < 0)
    throw MalformedInput("missing non-negative integer field \"dim\"");
  const auto dim = j["dim"].get<std::size_t>();
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw MalformedInput("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  BracketTable brackets;
  if (j.contains("brackets")) {
    if (!j["brackets"].is_array()) throw MalformedInput("\"brackets\" must be an array");
    for (const auto& b : j["brackets"]) {
      std::size_t i = index_field(b, "i", dim), jj = index_field(b, "j", dim);
      if (i == jj) throw MalformedInput("bracket [e_i, e_i] must not be listed");
      const bool swapped = i > jj;
      if (swapped) std::swap(i, jj);
      if (brackets.count({i, jj})) throw MalformedInput("bracket listed twice");
      std::map<std::size_t, Rational> acc;
      if (!b.contains("terms") || !b["terms"].is_array()) throw MalformedInput("bracket needs a \"terms\" array");
      for (const auto& t : b["terms"]) {
        const std::size_t k = index_field(t, "k", dim);
        if (!t.contains("c")) throw MalformedInput("term needs a coefficient \"c\"");
        acc[k] += swapped ? -rational_field(t["c"]) : rational_field(t["c"]);
      }
      std::vector<Term> terms;
      for (auto& [k, c] : acc)
        if (c != 0) terms.push_back({k, c});
      brackets[{i, jj}] = std::move(terms);
    }
  }
  return LieAlgebra::create(dim, std::move(labels), std::move(brackets));
}

LieAlgebra parse_structure_constants(std::string_view text) { return algebra_from_json(parse_json(text, "structure constants")); }

Json vec_to_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Vec vec_from_json(const Json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw MalformedInput("vector must have " + std::to_string(n) + " entries");
  Vec v;
  for (const auto& x : j) v.push_back(rational_field(x));
  return v;
}

Json matrix_to_json(const MatrixQ& m) {
  Json a = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(vec_to_json(m.row(r)));
  return a;
}

MatrixQ matrix_from_json(const Json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw MalformedInput("matrix must have " + std::to_string(n) + " rows");
  std::vector<Vec> rows;
  for (const auto& r : j) rows.push_back(vec_from_json(r, n));
  return MatrixQ::from_rows(rows, n);
}

Json subspace_to_json(const Subspace& s) {
  Json basis = Json::array();
  for (const auto& v : s.vectors()) basis.push_back(vec_to_json(v));
  return {{"dim", s.dim()}, {"basis", basis}};
}

Subspace subspace_from_json(const Json& j, std::size_t n) {
  const Json& rows = j.is_object() ? (j.contains("basis") ? j["basis"] : j.value("vectors", Json::array())) : j;
  if (!rows.is_array()) throw MalformedInput("subspace must list its spanning vectors");
  std::vector<Vec> vs;
  for (const auto& r : rows) vs.push_back(vec_from_json(r, n));
  return Subspace::span(n, vs);
}

Subspace parse_subspace(std::string_view text, std::size_t ambient) {
  return subspace_from_json(parse_json(text, "subspace"), ambient);
}

Json certificate_to_json(const ObstructionCertificate& c) {
  Json j = {{"kind", certificate_kind(c)}};
  if (const auto* d = std::get_if<DimSeriesCertificate>(&c)) {
    j["j"] = d->j;
    j["dim_lower"] = d->dim_lower;
    j["dim_upper"] = d->dim_upper;
    j["dim"] = d->dim;
  } else if (const auto* t = std::get_if<ThetaCertificate>(&c)) {
    Json parts = Json::array();
    for (const auto& p : t->decomposition.parts) parts.push_back(subspace_to_json(p));
    j["origin"] = t->decomposition.origin;
    j["parts"] = parts;
    j["theta"] = subspace_to_json(t->theta);
    j["vector"] = vec_to_json(t->vector);
  } else {
    const auto& h = std::get<HeisenbergReiterCertificate>(c);
    j["v1"] = subspace_to_json(h.v1);
    j["v2"] = subspace_to_json(h.v2);
  }
  return j;
}

ObstructionCertificate certificate_from_json(const Json& j, std::size_t n) {
  const std::string kind = j.value("kind", "");
  if (kind == "DimSeries")
    return DimSeriesCertificate{j.at("j").get<std::size_t>(), j.at("dim_lower").get<std::size_t>(),
                                j.at("dim_upper").get<std::size_t>(), j.at("dim").get<std::size_t>()};
  if (kind == "ThetaNonzero") {
    ThetaCertificate t;
    t.decomposition.origin = j.value("origin", "");
    for (const auto& p : j.at("parts")) t.decomposition.parts.push_back(subspace_from_json(p, n));
    t.theta = subspace_from_json(j.at("theta"), n);
    t.vector = vec_from_json(j.at("vector"), n);
    return t;
  }
  if (kind == "HeisenbergReiter")
    return HeisenbergReiterCertificate{subspace_from_json(j.at("v1"), n), subspace_from_json(j.at("v2"), n)};
  throw MalformedInput("unknown certificate kind '" + kind + "'");
}

Json config_to_json(const RunConfig& cfg) {
  return {{"seed", cfg.seed},
          {"mc_trials", cfg.mc_trials},
          {"mc_range", cfg.mc_range},
          {"symbolic_max_dim", cfg.symbolic_max_dim},
          {"symbolic_max_formspace_dim", cfg.symbolic_max_formspace_dim},
          {"solver_dim_cap", cfg.solver_dim_cap},
          {"theta_budget", cfg.theta_budget},
          {"probe_trials", cfg.probe_trials}};
}

Json analysis_to_json(const Analysis& a, const RunConfig& cfg) {
  Json j;
  j["summary"] = {{"dim", a.dim},
                  {"class", a.nilpotency_class ? Json(*a.nilpotency_class) : Json(nullptr)},
                  {"lower_central_dims", a.lower_dims},
                  {"upper_central_dims", a.upper_dims},
                  {"center_dim", a.center_dim},
                  {"commutator_dim", a.commutator_dim}};
  j["verdict"] = {{"kind", to_string(a.kind)}, {"decided_by", a.decided_by}, {"consistent", a.consistent}};
  Json certs = Json::array();
  for (const auto& c : a.certificates) certs.push_back(certificate_to_json(c));
  j["certificates"] = certs;
  if (a.solver) {
    const auto& s = *a.solver;
    Json sj = {{"form_space_dim", a.form_space_dim}, {"kind", kind_name(s.kind)}, {"method", s.method}};
    if (s.witness) sj["witness"] = matrix_to_json(*s.witness);
    if (a.witness_signature)
      sj["witness_signature"] = {{"positive", a.witness_signature->positive},
                                 {"negative", a.witness_signature->negative},
                                 {"zero", a.witness_signature->zero}};
    if (s.radical_vector) sj["radical_vector"] = vec_to_json(*s.radical_vector);
    if (s.kind == NondegeneracyKind::RefutedMonteCarlo) {
      sj["trials"] = s.trials;
      sj["range"] = s.range;
      sj["bound"] = to_string(s.bound);
    }
    if (!s.notes.empty()) sj["notes"] = s.notes;
    j["solver"] = sj;
  } else {
    j["solver"] = nullptr;
  }
  Json ev = Json::object();
  if (a.probe) {
    ev["nonsingular_probe"] = {{"outcome", a.probe->singular ? "Singular" : "ProbablyNonsingular"},
                               {"tested", a.probe->tested},
                               {"certificate", false}};
    if (a.probe->witness) ev["nonsingular_probe"]["witness"] = vec_to_json(*a.probe->witness);
  }
  if (a.cap)
    ev["cap_condition"] = {{"outcome", a.cap->holds ? "holds" : "inconclusive"},
                           {"samples", a.cap->samples},
                           {"intersection", subspace_to_json(a.cap->intersection)}};
  j["evidence"] = ev;
  if (cfg.timings) j["timings"] = {{"seconds", a.seconds}};
  return j;
}

Json make_report(const Json& input, const LieAlgebra& g, const Analysis& a, const RunConfig& cfg) {
  Json r = analysis_to_json(a, cfg);
  r["format"] = "adinv-report-1";
  r["input"] = input;
  r["algebra"] = algebra_to_json(g);
  r["config"] = config_to_json(cfg);
  return r;
}

VerifyResult verify_report(const Json& report) {
  VerifyResult out;
  auto fail = [&](std::string m) {
    out.ok = false;
    out.messages.push_back(std::move(m));
  };
  if (!report.is_object() || !report.contains("algebra")) throw MalformedInput("report has no embedded algebra");
  const LieAlgebra g = algebra_from_json(report["algebra"]);
  const std::size_t n = g.dim();

  std::size_t certs = 0;
  for (const auto& cj : report.value("certificates", Json::array())) {
    const auto c = certificate_from_json(cj, n);
    ++certs;
    if (reverify_certificate(g, c))
      out.messages.push_back(certificate_kind(c) + " certificate re-verified");
    else
      fail(certificate_kind(c) + " certificate does not hold");
  }

  const Json& solver = report.contains("solver") ? report["solver"] : Json(nullptr);
  bool admits = false;
  if (solver.is_object()) {
    const std::string kind = solver.value("kind", "");
    const std::string method = solver.value("method", "");
    if (kind == "Admits") {
      admits = true;
      if (!solver.contains("witness")) {
        fail("Admits without a witness");
      } else if (auto bad = verify_form(g, matrix_from_json(solver["witness"], n))) {
        fail("witness form fails exact re-verification");
      } else {
        out.messages.push_back("witness form is symmetric, invariant and nondegenerate");
      }
    } else if (kind == "RefutedSymbolic") {
      const FormSpace space = invariant_form_space(g);
      if (method == "no-invariant-form") {
        if (space.dim() == 0) out.messages.push_back("form space recomputed: only the zero form");
        else fail("form space is not zero");
      } else if (method == "common-radical") {
        const Vec v = vec_from_json(solver.at("radical_vector"), n);
        bool ok = !is_zero(v);
        for (const auto& b : space.basis) ok = ok && is_zero(b.apply(v));
        if (ok) out.messages.push_back("radical vector annihilated by every invariant form");
        else fail("radical vector is not in every radical");
      } else if (method == "determinant-expansion") {
        if (symbolic_determinant(space.basis).is_zero()) out.messages.push_back("pencil determinant recomputed: zero polynomial");
        else fail("pencil determinant is not identically zero");
      } else {
        fail("unknown refutation method '" + method + "'");
      }
    } else if (kind == "RefutedMonteCarlo") {
      out.messages.push_back("Monte Carlo refutation is probabilistic (bound " + solver.value("bound", std::string("?")) +
                             "); nothing to re-verify exactly");
    }
  }
  if (admits && certs > 0) fail("report carries both a certificate and an Admits verdict");
  const std::string verdict = report.contains("verdict") ? report["verdict"].value("kind", "") : "";
  if (verdict == "Refuted" && certs == 0 && !(solver.is_object() && solver.value("kind", "") == "RefutedSymbolic"))
    fail("Refuted verdict without a certificate or symbolic refutation");
  if (verdict == "Admits" && !admits) fail("Admits verdict without a solver witness");
  return out;
}

Json graph_scan_to_json(const GraphScan& scan, const RunConfig& cfg) {
  Json cases = Json::array();
  for (const auto& c : scan.cases) {
    Json cj = {{"graph", c.descriptor},
               {"vertices", c.vertices},
               {"edges", c.edges},
               {"dim", c.analysis.dim},
               {"predicted", c.predicted.prediction == GraphPrediction::Admits ? "Admits" : "Refutes"},
               {"reason", c.predicted.reason},
               {"verdict", to_string(c.analysis.kind)},
               {"decided_by", c.analysis.decided_by},
               {"certificate", c.analysis.certificates.empty() ? Json(nullptr) : Json(certificate_kind(c.analysis.certificates.front()))},
               {"dims_ok", c.dims_ok},
               {"agree", c.agree}};
    if (cfg.timings) cj["seconds"] = c.analysis.seconds;
    cases.push_back(cj);
  }
  return {{"format", "adinv-graph-scan-1"},
          {"connected", scan.connected},
          {"unions", scan.unions},
          {"disagreements", scan.disagreements()},
          {"inconsistent", scan.inconsistent()},
          {"cases", cases},
          {"config", config_to_json(cfg)}};
}

Json parabolic_scan_to_json(const ParabolicScan& scan, const RunConfig& cfg) {
  Json cases = Json::array();
  for (const auto& c : scan.cases) {
    Json cj = {{"spec", c.spec},
               {"dim", c.dim},
               {"k", c.k},
               {"layer_dims", c.layer_dims},
               {"predicted", to_string(c.predicted.prediction)},
               {"argument", c.predicted.argument},
               {"reason", c.predicted.reason},
               {"verdict", to_string(c.analysis.kind)},
               {"decided_by", c.analysis.decided_by},
               {"certificate", c.analysis.certificates.empty() ? Json(nullptr) : Json(certificate_kind(c.analysis.certificates.front()))},
               {"grading_ok", c.grading_ok},
               {"structural", c.structural},
               {"structural_ok", c.structural_ok},
               {"agree", c.agree}};
    if (cfg.timings) cj["seconds"] = c.analysis.seconds;
    cases.push_back(cj);
  }
  return {{"format", "adinv-parabolic-scan-1"},
          {"disagreements", scan.disagreements()},
          {"inconsistent", scan.inconsistent()},
          {"cases", cases},
          {"config", config_to_json(cfg)}};
}

}  // namespace adinv
