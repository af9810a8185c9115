#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "holocalc/cli.hpp"
#include "holocalc/form_json.hpp"
#include "holocalc/g2.hpp"
#include "json.hpp"

using namespace holocalc;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("verify all passes and reports consistent counts") {
  const Run r = run({"verify", "all", "--seed", "7", "--format", "json"});
  REQUIRE(r.code == 0);
  const json j = r.report();
  CHECK(j["schema"] == "holocalc-report/1");
  CHECK(j["seed"] == 7);
  CHECK(j["command"] == "verify all --seed 7 --format json");
  long pass = 0;
  std::set<std::string> suites;
  for (const auto& rec : j["records"]) {
    CHECK(rec["status"] == "pass");
    CHECK(!rec.contains("elapsed_ms"));
    pass += rec["status"] == "pass";
    const std::string name = rec["name"];
    suites.insert(name.substr(0, name.find('.')));
  }
  CHECK(j["summary"]["pass"] == pass);
  CHECK(j["summary"]["total"] == j["records"].size());
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["summary"]["error"] == 0);
  CHECK(suites == std::set<std::string>{"exterior", "seifert", "g2", "spin7", "cone", "spectral", "examples"});
}

TEST_CASE("output is byte-identical for identical arguments") {
  const std::vector<std::string> args{"verify", "spin7", "--seed", "11"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> cat{"catalog", "wcp2", "--max-weight", "8"};
  CHECK(run(cat).out == run(cat).out);
}

TEST_CASE("seed fallback and timing") {
  ::setenv("HOLOCALC_SEED", "42", 1);
  CHECK(run({"verify", "spectral"}).report()["seed"] == 42);
  CHECK(run({"verify", "spectral", "--seed", "3"}).report()["seed"] == 3);
  ::setenv("HOLOCALC_SEED", "forty", 1);
  CHECK(run({"verify", "spectral"}).code == cli::kExitUsage);
  ::unsetenv("HOLOCALC_SEED");
  CHECK(run({"verify", "spectral"}).report()["seed"] == 0);

  const json t = run({"verify", "cone", "--timing"}).report();
  for (const auto& rec : t["records"]) CHECK(rec.contains("elapsed_ms"));
}

TEST_CASE("calculators") {
  const Run c = run({"cohomology", "--n", "6", "--k", "2", "--dims", "1,1,1,0"});
  REQUIRE(c.code == 0);
  CHECK(c.report()["result"] == json{{"minus", 1}, {"plus", 2}});

  const json i = run({"indicial", "--delta", "6", "--m", "7"}).report()["result"];
  CHECK(i["lambda_plus"]["exact"] == "1");
  CHECK(i["lambda_minus"]["exact"] == "-6");
  const json w = run({"indicial", "--delta", "1", "--m", "7", "--nu", "-6", "--nu-prime", "1", "--k", "2", "--n", "6"}).report()["result"];
  CHECK(w["lambda_plus"]["exact"] == "-5/2 + 1/2*sqrt(29)");
  CHECK(w["index_jump"] == 2);
  CHECK(w["windows"]["closed_coclosed"] == json{{"lo", "-4"}, {"hi", "-2"}});

  const std::string phi = to_json(g2::phi0()).dump();
  const json d = run({"decompose", "--form", phi}).report()["result"];
  CHECK(form_from_json(d["p1"]) == g2::phi0());
  CHECK(form_from_json(d["p27"]).is_zero());
  const std::string path = temp_file("holocalc_e12.json", to_json(Form::basis(7, {1, 2})).dump());
  const json d2 = run({"decompose", "--form", "@" + path}).report()["result"];
  CHECK(form_from_json(d2["p7"]) + form_from_json(d2["p14"]) == Form::basis(7, {1, 2}));

  const Run table = run({"cohomology", "--n", "7", "--k", "5", "--dims", "2,4,3,1", "--format", "table"});
  CHECK(table.out.find("minus  1") != std::string::npos);
}

TEST_CASE("catalogs") {
  const json an = run({"catalog", "an", "--n-max", "4"}).report()["result"];
  CHECK(an["schema"] == "holocalc-catalog/1");
  CHECK(an["records"].size() == 3);
  CHECK(an["records"][2]["b2"] == 2);
  CHECK(run({"catalog", "an"}).report()["result"]["count"] == 49);

  const json s = run({"catalog", "s3r4", "--max", "4"}).report()["result"];
  bool y21 = false;
  for (const auto& r : s["records"]) y21 = y21 || r["tag"] == "Y^{2,1}";
  CHECK(y21);

  const Run csv = run({"catalog", "wcp2", "--max-weight", "3", "--format", "csv"});
  CHECK(csv.out.rfind("family,parameters", 0) == 0);
  CHECK(csv.out.find("WCP2,\"p=(1,1,1) q=(2,2,2)\",true") != std::string::npos);
}

TEST_CASE("config overrides and hash") {
  const std::string base_hash = run({"catalog", "an", "--n-max", "3"}).report()["config_hash"];
  const std::string cfg = temp_file("holocalc_cfg.json", R"({"catalog":{"n_max":5}})");
  const json r = run({"catalog", "an", "--config", cfg}).report();
  CHECK(r["result"]["count"] == 4);
  CHECK(r["config_hash"] != base_hash);
  // Explicit flags win over the config.
  CHECK(run({"catalog", "an", "--config", cfg, "--n-max", "3"}).report()["result"]["count"] == 2);

  // A permuted model 3-form that still gives the Euclidean metric.
  std::vector<std::vector<Poly>> swap(7, std::vector<Poly>(7, Poly(7)));
  for (std::size_t i = 0; i < 7; ++i) swap[i][(i + 1) % 7] = Poly(7, 1);
  const Form rotated = pullback(g2::phi0(), swap);
  const std::string model = temp_file("holocalc_model.json", json{{"phi0", to_json(rotated)}}.dump());
  const Run v = run({"verify", "g2", "--config", model});
  CHECK(v.code == 0);
  const std::string phi = to_json(rotated).dump();
  CHECK(form_from_json(run({"decompose", "--form", phi, "--config", model}).report()["result"]["p1"]) == rotated);
  // The override ends with the run.
  CHECK(g2::phi0() != rotated);

  CHECK(run({"verify", "g2", "--config", temp_file("holocalc_bad.json", R"({"colour":1})")}).code == cli::kExitUsage);
  CHECK(run({"verify", "g2", "--config", temp_file("holocalc_bad2.json", "{not json")}).code == cli::kExitUsage);
  CHECK(run({"verify", "g2", "--config", "/nonexistent/holocalc.json"}).code == cli::kExitUsage);
  const std::string scaled = temp_file("holocalc_scaled.json", json{{"phi0", to_json(g2::phi0() * Scalar(8))}}.dump());
  CHECK(run({"verify", "g2", "--config", scaled}).code == cli::kExitDomain);
}

TEST_CASE("usage and domain errors") {
  const Run unknown = run({"verify", "all", "--frobnicate"});
  CHECK(unknown.code == cli::kExitUsage);
  CHECK(unknown.err.find("Usage") != std::string::npos);
  CHECK(run({"verify", "nonsense"}).code == cli::kExitUsage);
  CHECK(run({"catalog", "k3"}).code == cli::kExitUsage);
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"cohomology", "--n", "6", "--k", "2", "--dims", "1,1"}).code == cli::kExitUsage);
  CHECK(run({"cohomology", "--n", "6", "--k", "2.5", "--dims", "1,1,1,0"}).code == cli::kExitUsage);
  CHECK(run({"indicial", "--delta", "x"}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == 0);

  const Run bad = run({"cohomology", "--n", "6", "--k", "2", "--dims", "1,1,1,5"});
  CHECK(bad.code == cli::kExitDomain);
  CHECK(bad.err.find("[spectral]") != std::string::npos);
  CHECK(run({"indicial", "--delta", "-1"}).code == cli::kExitDomain);
  CHECK(run({"catalog", "an", "--n-max", "1"}).code == cli::kExitDomain);
  CHECK(run({"decompose", "--form", to_json(Form::basis(7, {1})).dump()}).code == cli::kExitDomain);
}
