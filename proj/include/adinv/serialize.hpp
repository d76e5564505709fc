#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "adinv/analysis.hpp"
#include "adinv/scans.hpp"

namespace adinv {

using Json = nlohmann::json;

/// {"dim": n, "labels": [...], "brackets": [{"i":1,"j":2,"terms":[{"k":3,"c":"1"}]}]}
/// with 1-based indices and rationals as strings.
Json algebra_to_json(const LieAlgebra& g);
/// Throws MalformedInput (with line/column for syntax errors) or JacobiError.
LieAlgebra algebra_from_json(const Json& j);
LieAlgebra parse_structure_constants(std::string_view text);

/// {"vectors": [["1","0",...], ...]} or a bare array of rows.
Subspace parse_subspace(std::string_view text, std::size_t ambient);

Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j, std::size_t n);
Json matrix_to_json(const MatrixQ& m);
MatrixQ matrix_from_json(const Json& j, std::size_t n);
Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j, std::size_t n);

Json certificate_to_json(const ObstructionCertificate& c);
ObstructionCertificate certificate_from_json(const Json& j, std::size_t n);

Json config_to_json(const RunConfig& cfg);
Json analysis_to_json(const Analysis& a, const RunConfig& cfg);

/// Full report: input descriptor, embedded structure constants, summary,
/// verdict, certificates, solver output, evidence and config.
Json make_report(const Json& input, const LieAlgebra& g, const Analysis& a, const RunConfig& cfg);

struct VerifyResult {
  bool ok = true;
  std::vector<std::string> messages;
};

/// Rebuilds the algebra from the report and re-checks every certificate and
/// witness it carries; no state outside the report is used.
VerifyResult verify_report(const Json& report);

Json graph_scan_to_json(const GraphScan& scan, const RunConfig& cfg);
Json parabolic_scan_to_json(const ParabolicScan& scan, const RunConfig& cfg);

}  // namespace adinv
