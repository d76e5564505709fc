#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "adinv/cli.hpp"
#include "adinv/serialize.hpp"
#include "helpers.hpp"

using namespace adinv;
using namespace testing;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const fs::path dir = fs::temp_directory_path() / "adinv_cli_tests";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p, std::ios::binary) << body;
  return p.string();
}

const char* kH3 = R"({"dim": 3, "labels": ["x", "y", "z"],
  "brackets": [{"i": 1, "j": 2, "terms": [{"k": 3, "c": "1"}]}]})";

}  // namespace

TEST_CASE("structure-constant ingestion") {
  const LieAlgebra g = parse_structure_constants(kH3);
  CHECK(g.dim() == 3);
  CHECK(g == h3());
  CHECK(g.labels() == std::vector<std::string>{"x", "y", "z"});
  CHECK(algebra_from_json(algebra_to_json(free_nilpotent(2, 3))) == free_nilpotent(2, 3));

  // reversed indices negate the coefficient
  const LieAlgebra rev = parse_structure_constants(R"({"dim":3,"brackets":[{"i":2,"j":1,"terms":[{"k":3,"c":"-1"}]}]})");
  CHECK(rev == h3());

  CHECK_THROWS_AS(parse_structure_constants(R"({"dim":2,"brackets":[{"i":1,"j":2,"terms":[{"k":1,"c":"1/0"}]}]})"),
                  MalformedInput);
  CHECK_THROWS_AS(parse_structure_constants(R"({"dim":2,"brackets":[{"i":1,"j":3,"terms":[]}]})"), MalformedInput);
  CHECK_THROWS_AS(parse_structure_constants(R"({"dim":3,"brackets":[{"i":1,"j":2,"terms":[{"k":3,"c":"1"}]},
                                                {"i":1,"j":3,"terms":[{"k":1,"c":"1"}]}]})"),
                  JacobiError);
  try {
    parse_structure_constants("{\"dim\": 2,\n  \"brackets\": [}");
    FAIL("expected a parse error");
  } catch (const MalformedInput& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    CHECK(std::string(e.what()).find("column") != std::string::npos);
  }
}

TEST_CASE("subspace files") {
  CHECK(parse_subspace(R"({"vectors": [["1","0","0"]]})", 3) == Subspace::coordinate(3, {0}));
  CHECK(parse_subspace(R"([["1","1","0"],["2","2","0"]])", 3).dim() == 1);
  CHECK_THROWS_AS(parse_subspace(R"([["1","1"]])", 3), MalformedInput);
}

TEST_CASE("certificate JSON round trip") {
  const auto theta = *theta_search(h3());
  const auto dims = *dim_series_obstruction(h3());
  for (const auto& c : {theta, dims}) {
    const Json j = certificate_to_json(c);
    const auto back = certificate_from_json(Json::parse(j.dump()), 3);
    CHECK(certificate_to_json(back) == j);
    CHECK(reverify_certificate(h3(), back));
  }
  CHECK_THROWS_AS(certificate_from_json(Json{{"kind", "Nope"}}, 3), MalformedInput);
}

TEST_CASE("documented command examples") {
  const std::string tri = temp_file("triangle.txt", "a b\nb c\nc a\n");
  const auto g = cli({"graph", tri});
  CHECK(g.code == 0);
  CHECK(g.out.find("Admits") != std::string::npos);
  CHECK(g.out.find("witness form") != std::string::npos);

  const auto gj = cli({"--json", "graph", tri});
  REQUIRE(gj.code == 0);
  const Json report = Json::parse(gj.out);
  CHECK(report["verdict"]["kind"] == "Admits");
  CHECK(report["solver"].contains("witness"));

  const auto f = cli({"free", "2", "2", "--json"});
  CHECK(f.code == 0);
  const Json fr = Json::parse(f.out);
  CHECK(fr["verdict"]["kind"] == "Refuted");
  CHECK(fr["certificates"][0]["kind"] == "DimSeries");
  CHECK(fr["certificates"][0]["j"] == 1);

  const auto p = cli({"parabolic", "E6:g3", "--obstructions-only", "--json"});
  CHECK(p.code == 0);
  const Json pr = Json::parse(p.out);
  CHECK(pr["verdict"]["kind"] == "Refuted");
  CHECK(pr["summary"]["top_lower_central_dim"] == 5);
  CHECK(pr["solver"].is_null());
}

TEST_CASE("exit codes") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"analyze", "/nonexistent/file.json"}).code == 2);
  CHECK(cli({"analyze", temp_file("zero.json", R"({"dim":2,"brackets":[{"i":1,"j":2,"terms":[{"k":1,"c":"1/0"}]}]})")}).code == 2);
  CHECK(cli({"graph", temp_file("loop.txt", "a a\n")}).code == 2);
  CHECK(cli({"parabolic", "E6:g9"}).code == 2);
  CHECK(cli({"free", "0", "2"}).code == 2);
  CHECK(cli({"--mc-trials", "0", "free", "2", "2"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
  CHECK(cli({"analyze", temp_file("h3.json", kH3)}).code == 0);
  CHECK(cli({"series", temp_file("h3b.json", kH3)}).code == 0);
}

TEST_CASE("series subcommand") {
  const std::string g = temp_file("eight.json", algebra_to_json(eight_dim_example()).dump());
  const std::string v = temp_file("v.json", R"([["1","0","0","0","0","0","0","0"],["0","1","0","0","0","0","0","0"]])");
  const auto r = cli({"--json", "series", g, "--subspace", v});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["descending_dims"][1] == 3);
  CHECK(j["ascending_dims"][1] == 4);
}

TEST_CASE("reports are deterministic and re-verifiable") {
  const std::string tri = temp_file("tri2.txt", "a b\nb c\nc a\n");
  const auto a = cli({"--json", "graph", tri}), b = cli({"graph", "--json", tri});
  CHECK(a.out == b.out);
  CHECK(a.out.find("seconds") == std::string::npos);
  CHECK(cli({"--json", "--timings", "graph", tri}).out.find("seconds") != std::string::npos);

  const std::string good = temp_file("good.json", a.out);
  CHECK(cli({"verify", good}).code == 0);
  CHECK(cli({"--verify", good}).code == 0);

  Json r = Json::parse(a.out);
  r["solver"]["witness"][0][5] = "7";  // breaks symmetry
  CHECK(cli({"verify", temp_file("bad.json", r.dump())}).code == 1);

  const auto c4 = cli({"--json", "graph", temp_file("c4.txt", "a b\nb c\nc d\nd a\n")});
  REQUIRE(c4.code == 0);
  Json cr = Json::parse(c4.out);
  REQUIRE(cr["certificates"].size() >= 1);
  CHECK(cli({"verify", temp_file("c4r.json", c4.out)}).code == 0);
  auto& cert = cr["certificates"][0];
  if (cert["kind"] == "DimSeries")
    cert["dim_upper"] = 99;
  else if (cert["kind"] == "ThetaNonzero")
    cert["vector"][0] = "1";  // a vertex is never central
  else
    cert["v1"] = cert["v2"];
  CHECK(cli({"verify", temp_file("c4bad.json", cr.dump())}).code == 1);
  CHECK(cli({"verify", temp_file("junk.json", "{")}).code == 2);
}

TEST_CASE("configuration precedence: defaults, environment, flags") {
  setenv("ADINV_SEED", "17", 1);
  const Json env = Json::parse(cli({"--json", "free", "2", "2"}).out);
  CHECK(env["config"]["seed"] == 17);
  const Json flag = Json::parse(cli({"--json", "--seed", "5", "free", "2", "2"}).out);
  CHECK(flag["config"]["seed"] == 5);
  setenv("ADINV_SEED", "abc", 1);
  CHECK(cli({"free", "2", "2"}).code == 2);
  unsetenv("ADINV_SEED");
  const Json def = Json::parse(cli({"--json", "free", "2", "2"}).out);
  CHECK(def["config"]["seed"] == RunConfig{}.seed);
  CHECK(def["config"]["solver_dim_cap"] == 64);
}

TEST_CASE("output file") {
  const fs::path out = fs::temp_directory_path() / "adinv_cli_tests" / "out.json";
  fs::remove(out);
  const auto r = cli({"--json", "-o", out.string(), "free", "3", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out);
  const Json j = Json::parse(in);
  CHECK(j["verdict"]["kind"] == "Admits");
}

TEST_CASE("small scans through the front end") {
  const auto g = cli({"scan-graphs", "--max-vertices", "4", "--union-vertices", "5", "--json"});
  CHECK(g.code == 0);
  const Json j = Json::parse(g.out);
  CHECK(j["disagreements"] == 0);
  CHECK(j["connected"] == 10);
  const auto p = cli({"scan-parabolics", "--types", "A,G2", "--max-rank", "3"});
  CHECK(p.code == 0);
  CHECK(cli({"scan-parabolics", "--types", "Q"}).code == 2);
}
