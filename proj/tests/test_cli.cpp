#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "deza/cli.hpp"

using namespace deza;
using nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string out, err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& name)
      : path(std::filesystem::temp_directory_path() / ("deza_test_" + name)) {}
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path, ec);
  }
  void write(const std::string& text) const {
    std::ofstream f(path);
    f << text;
  }
  std::string read() const {
    std::ifstream f(path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }
  std::string str() const { return path.string(); }
};

}  // namespace

TEST_CASE("cli construct") {
  auto res = run_cli({"construct", "--family", "petersen"});
  REQUIRE(res.code == 0);
  REQUIRE(res.out == to_graph6(petersen()) + "\n");

  TempFile labels("construct_labels.json");
  TempFile g6("construct.g6");
  res = run_cli({"construct", "--family", "triangular", "--n", "7", "--output", g6.str(),
                 "--labels", labels.str()});
  REQUIRE(res.code == 0);
  REQUIRE(g6.read() == to_graph6(triangular(7)) + "\n");
  auto parsed = labels_from_json(labels.read());
  REQUIRE(parsed.size() == 21);
  REQUIRE(parsed.front() == "{1,2}");

  res = run_cli({"construct", "--family", "lattice", "--n", "4", "--complement"});
  REQUIRE(res.code == 0);
  REQUIRE(res.out == to_graph6(complement(lattice(4))) + "\n");
}

TEST_CASE("cli usage and domain errors") {
  REQUIRE(run_cli({}).code == 2);
  REQUIRE(run_cli({"no-such-command"}).code == 2);
  REQUIRE(run_cli({"construct", "--family", "petersen", "--bogus"}).code == 2);
  REQUIRE(run_cli({"construct", "--family", "unknown-family"}).code == 2);
  REQUIRE(run_cli({"construct", "--family", "triangular"}).code == 2);   // missing --n
  REQUIRE(run_cli({"construct", "--family", "chang"}).code == 2);        // missing --variant
  REQUIRE(run_cli({"construct", "--family", "triangular", "--n", "1"}).code == 4);
  REQUIRE(run_cli({"construct", "--family", "chang", "--variant", "9"}).code == 4);
  REQUIRE(run_cli({"--help"}).code == 0);
}

TEST_CASE("cli classify") {
  TempFile g6("classify_pet.g6");
  g6.write(to_graph6(petersen()) + "\n");
  auto res = run_cli({"classify", "--input", g6.str()});
  REQUIRE(res.code == 0);
  json j = json::parse(res.out);
  REQUIRE(j["schema_version"] == 1);
  REQUIRE(j["vertices"] == 10);
  REQUIRE(j["edges"] == 15);
  REQUIRE(j["regular"] == true);
  REQUIRE(j["valency"] == 3);
  REQUIRE(j["srg"]["k"] == 3);
  REQUIRE(j["srg"]["lambda"] == 0);
  REQUIRE(j["srg"]["mu"] == 1);
  REQUIRE(j["srg"]["spectrum"]["r"] == 1);
  REQUIRE(j["srg"]["spectrum"]["s"] == -2);
  REQUIRE(j["srg"]["spectrum"]["mult_r"] == 5);
  REQUIRE(j["edge_regular"] == true);
  REQUIRE(j["co_edge_regular"] == true);

  TempFile dz6("classify_dz.g6");
  dz6.write(to_graph6(triangular_deza(6)) + "\n");
  res = run_cli({"classify", "--input", dz6.str()});
  REQUIRE(res.code == 0);
  j = json::parse(res.out);
  REQUIRE(j["srg"].is_null());
  REQUIRE(j["deza"]["v"] == 15);
  REQUIRE(j["deza"]["k"] == 6);
  REQUIRE(j["deza"]["b"] == 3);
  REQUIRE(j["deza"]["a"] == 1);
  REQUIRE(j["deza"]["strict"] == true);
  REQUIRE(j["edge_regular"] == false);
}

TEST_CASE("cli input failures") {
  REQUIRE(run_cli({"classify", "--input", "/nonexistent/file.g6"}).code == 3);
  TempFile bad("bad.g6");
  bad.write("this is not graph6 at all ___\n");
  REQUIRE(run_cli({"classify", "--input", bad.str()}).code == 3);
}

TEST_CASE("cli census") {
  auto res = run_cli({"census", "--family", "lattice", "--n", "4", "--complement"});
  REQUIRE(res.code == 0);
  json j = json::parse(res.out);
  REQUIRE(j["count"] == 18);
  REQUIRE(j["classes"].size() == 2);
  int total = 0;
  for (const auto& s : j["classes"]) total += s.get<int>();
  REQUIRE(total == 18);
  REQUIRE(j["representatives"].size() == 2);
  // Representatives are cycle lists of an involution: every cycle has length 2.
  for (const auto& rep : j["representatives"])
    for (const auto& cyc : rep) REQUIRE(cyc.size() == 2);

  // Byte-identical on a second run.
  auto again = run_cli({"census", "--family", "lattice", "--n", "4", "--complement"});
  REQUIRE(again.out == res.out);

  TempFile g6("census_pet.g6");
  g6.write(to_graph6(petersen()) + "\n");
  res = run_cli({"census", "--input", g6.str()});
  REQUIRE(res.code == 0);
  j = json::parse(res.out);
  REQUIRE(j["count"] == 10);
  REQUIRE(j["classes"].size() == 1);

  REQUIRE(run_cli({"census"}).code == 2);
  REQUIRE(run_cli({"census", "--family", "triangular", "--n", "9"}).code == 5);
  REQUIRE(run_cli({"census", "--family", "triangular", "--n", "9", "--max-aut", "40"}).code == 0);
}

TEST_CASE("cli deza") {
  auto res = run_cli({"deza", "--family", "T", "--n", "6"});
  REQUIRE(res.code == 0);
  REQUIRE(res.out == to_graph6(triangular_deza(6)) + "\n");

  res = run_cli({"deza", "--family", "L", "--n", "4", "--i", "2"});
  REQUIRE(res.code == 0);
  REQUIRE(res.out == to_graph6(lattice_deza(4, 2)) + "\n");

  // Generic route: census the graph, then swap along the chosen class.
  res = run_cli({"deza", "--family", "lattice", "--n", "3"});
  REQUIRE(res.code == 0);
  Graph built = from_graph6(res.out.substr(0, res.out.size() - 1));
  auto params = classify_deza(built);
  REQUIRE(params.has_value());
  REQUIRE(*params == DezaParams{9, 4, 2, 1, true});

  REQUIRE(run_cli({"deza", "--family", "lattice", "--n", "3", "--auto", "5"}).code == 4);
  REQUIRE(run_cli({"deza", "--family", "lattice", "--n", "3", "--auto", "x"}).code == 2);
  REQUIRE(run_cli({"deza", "--family", "knx2", "--n", "3"}).code == 4);
  REQUIRE(run_cli({"deza"}).code == 2);
}

TEST_CASE("cli kappa") {
  TempFile g6("kappa_pet.g6");
  g6.write(to_graph6(petersen()) + "\n");
  TempFile cert("kappa_cert.json");
  auto res = run_cli({"kappa", "--input", g6.str(), "--certificate", cert.str()});
  REQUIRE(res.code == 0);
  json j = json::parse(res.out);
  REQUIRE(j["kappa"] == 3);
  REQUIRE(j["kind"] == "cut");
  REQUIRE(j["cut"].size() == 3);
  REQUIRE(j["paths"].size() == 3);
  REQUIRE(j["pair"].size() == 2);
  REQUIRE(json::parse(cert.read()) == j);

  REQUIRE(run_cli({"kappa", "--input", g6.str(), "--max-n", "5"}).code == 5);
}

TEST_CASE("cli verify-proof") {
  TempFile report("verify_t6.json");
  auto res = run_cli({"verify-proof", "--theorem", "T", "--n", "6", "--json", report.str()});
  REQUIRE(res.code == 0);
  REQUIRE(res.out.find("PASS") != std::string::npos);
  json j = json::parse(report.read());
  REQUIRE(j["runs"].size() == 1);
  const auto& run0 = j["runs"][0];
  REQUIRE(run0["kappa"] == 6);
  REQUIRE(run0["pairs"] == 60);
  REQUIRE(run0["fallback_pairs"].size() == 12);
  REQUIRE(run0["records"].size() == 60);
  REQUIRE(run0["all_pass"] == true);
  REQUIRE(run0["tallies"].size() >= 5);

  // L with no --i runs every i.
  res = run_cli({"verify-proof", "--theorem", "L", "--n", "4"});
  REQUIRE(res.code == 0);
  REQUIRE(res.out.find("i=1") != std::string::npos);
  REQUIRE(res.out.find("i=2") != std::string::npos);

  REQUIRE(run_cli({"verify-proof", "--theorem", "X", "--n", "6"}).code == 2);
  REQUIRE(run_cli({"verify-proof", "--theorem", "T"}).code == 2);
  REQUIRE(run_cli({"verify-proof", "--theorem", "T", "--n", "4"}).code == 4);
}

TEST_CASE("cli second neighborhood") {
  TempFile g6("nbhd.g6");
  TempFile labels("nbhd_labels.json");
  REQUIRE(run_cli({"deza", "--family", "T", "--n", "6", "--output", g6.str(), "--labels",
                   labels.str()})
              .code == 0);
  auto res = run_cli({"second-nbhd", "--input", g6.str(), "--labels", labels.str()});
  REQUIRE(res.code == 0);
  json j = json::parse(res.out);
  REQUIRE(j["results"].size() == 15);
  bool found12 = false;
  for (const auto& r : j["results"]) {
    if (r["label"] == "{1,2}") {
      found12 = true;
      REQUIRE(r["connected"] == false);
      REQUIRE(r["component_sizes"] == json::array({4, 4}));
      REQUIRE(r["components_are_cliques"] == json::array({true, true}));
    } else {
      REQUIRE(r["connected"] == true);
    }
  }
  REQUIRE(found12);

  res = run_cli({"second-nbhd", "--input", g6.str(), "--vertex", "0"});
  REQUIRE(res.code == 0);
  j = json::parse(res.out);
  REQUIRE(j["results"].size() == 1);
  REQUIRE(run_cli({"second-nbhd", "--input", g6.str(), "--vertex", "99"}).code == 4);
}
