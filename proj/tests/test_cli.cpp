// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "confalg/cli.hpp"

namespace {

using Json = nlohmann::json;

struct Run {
  int code;
  Json report;
  std::string raw;
  std::string err;
};

std::string fx(const std::string& name) { return std::string(CONFALG_FIXTURE_DIR) + "/" + name; }

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = confalg::cli::run(args, out, err);
  Run r{code, Json(), out.str(), err.str()};
  if (!r.raw.empty() && r.raw.front() == '{') r.report = Json::parse(r.raw);
  return r;
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("cli: bracket of J^1 with itself") {
  const Run r = run({"bracket", fx("j1.json"), fx("j1.json")});
  CHECK(r.code == 0);
  CHECK(r.report["operation"] == "bracket");
  CHECK(r.report["inputs-digest"].get<std::string>().size() == 64);
  CHECK(r.report["result"]["pretty"] == "(∂ + 2λ)J^1");
  CHECK(r.raw.back() == '\n');
}

TEST_CASE("cli: check-virasoro exit codes") {
  Run r = run({"check-virasoro", fx("t3_gc4.json")});
  CHECK(r.code == 0);
  CHECK(r.report["result"]["is_virasoro"] == true);
  CHECK(r.report["result"]["degree"] == 2);
  CHECK(r.report["result"]["is_standard"] == false);
  CHECK(run({"check-virasoro", fx("t4_gc4.json")}).code == 0);

  r = run({"check-virasoro", fx("t3_gc3.json")});
  CHECK(r.code == 1);
  CHECK(r.report["result"]["is_virasoro"] == false);
  CHECK(run({"check-virasoro", fx("j0.json")}).code == 1);
}

TEST_CASE("cli: reports are byte-identical across runs") {
  const std::vector<std::string> args{"decompose", fx("mod_gc2_scrambled.json"), "--L1", "0,0", "--L2", "1,0"};
  const Run a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.raw == b.raw);
  const Json& s = a.report["result"]["summands"];
  REQUIRE(s.size() == 2);
  CHECK(s[0] == Json{{"kind", "standard"}, {"alpha", "1/3"}, {"mult", 2}});
  CHECK(s[1] == Json{{"kind", "dual"}, {"alpha", "-2"}, {"mult", 1}});
  CHECK(a.report["result"]["verified_n_max"] == 4);
}

TEST_CASE("cli: decompose over gc_1 and option digest") {
  const Run r = run({"decompose", fx("mod_gc1_sum.json"), "--L1", "0,0", "--L2", "1,0", "--nmax", "3"});
  CHECK(r.code == 0);
  CHECK(r.report["result"]["verified_n_max"] == 3);
  const Run r4 = run({"decompose", fx("mod_gc1_sum.json"), "--L1", "0,0", "--L2", "1,0"});
  CHECK(r.report["inputs-digest"] != r4.report["inputs-digest"]);
}

TEST_CASE("cli: parse errors exit with code 2 and name the location") {
  const std::string bad = temp_file("confalg_bad_scalar.json", R"({"N": 1, "terms": [{"n": 1, "entries": [[1, 1, "x/2"]]}]})");
  Run r = run({"check-virasoro", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find(bad) != std::string::npos);
  CHECK(r.err.find("$.terms[0].entries[0][2]") != std::string::npos);
  CHECK(r.report["result"]["error"]["kind"] == "ParseError");

  const std::string broken = temp_file("confalg_broken.json", "{ not json");
  CHECK(run({"check-virasoro", broken}).code == 2);
  CHECK(run({"check-virasoro", fx("no_such_file.json")}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"decompose", fx("mod_gc1_sum.json")}).code == 2);
  CHECK(run({"decompose", fx("mod_gc1_sum.json"), "--L1", "0", "--L2", "1,0"}).code == 2);
  const std::string wrong_kind = temp_file("confalg_wrong_kind.json", R"({"algebra": "vir", "recipe": {"kind": "gc_standard", "alpha": "0"}})");
  r = run({"module-axioms", wrong_kind});
  CHECK(r.code == 2);
  CHECK(r.err.find("$.recipe.kind") != std::string::npos);
}

TEST_CASE("cli: constructors") {
  Run r = run({"make", fx("make_t3_gc4.json")});
  CHECK(r.code == 0);
  CHECK(r.report["result"]["certificate"]["is_virasoro"] == true);
  r = run({"make", fx("make_t3_gc3.json")});
  CHECK(r.code == 1);
  CHECK(r.report["result"]["error"]["kind"] == "ConstraintViolated");
  r = run({"make", fx("make_gc1_virasoro.json")});
  CHECK(r.code == 0);
  CHECK(r.report["result"]["pretty"] == "(2∂ - 1/3)J^0 + J^1");
  CHECK(run({"make", fx("make_standard_higher.json")}).code == 0);
}

TEST_CASE("cli: standardness, grids and module verbs") {
  Run r = run({"is-standard", fx("t3_gc4.json")});
  CHECK(r.code == 0);
  CHECK(r.report["result"]["is_standard"] == false);
  CHECK(run({"is-standard", fx("j0.json")}).code == 1);

  r = run({"classify-deg1", "--N", "2", "--coeffs", "0,1", "--deg", "0"});
  CHECK(r.code == 0);
  CHECK(r.report["result"]["candidates"] == 256);
  CHECK(r.report["result"]["counterexamples"].empty());

  CHECK(run({"module-axioms", fx("mod_gc2_std_dual.json"), "--nmax", "2"}).code == 0);
  r = run({"module-axioms", fx("mod_gc2_corrupted.json")});
  CHECK(r.code == 1);
  CHECK_FALSE(r.report["result"]["failures"].empty());

  r = run({"dual", fx("mod_vir_sum.json")});
  CHECK(r.code == 0);
  CHECK(r.report["result"]["algebra"] == "vir");

  r = run({"restrict", fx("canonical_l10_gc2.json"), fx("mod_gc2_std_dual.json")});
  CHECK(r.code == 0);
  CHECK(r.report["result"]["recipe"]["rank"] == 4);

  r = run({"regularity", fx("canonical_l10_gc2.json"), fx("mod_gc2_std_dual.json")});
  CHECK(r.code == 0);
  CHECK(r.report["result"]["weights"][0] == Json::array({"0", "0"}));

  r = run({"weight-product", fx("mod_vir_sum.json")});
  CHECK(r.code == 0);
  CHECK(r.report["result"]["p"] == "2");
  r = run({"weight-product", fx("mod_gc2_std_dual.json"), "--gamma", fx("canonical_l10_gc2.json")});
  CHECK(r.code == 0);
  CHECK(r.report["result"]["p"] == "0");

  CHECK(run({"vir-semisimple", fx("mod_vir_sum.json")}).code == 0);
  CHECK(run({"vir-semisimple", fx("mod_vir_zero_weight.json")}).code == 1);
}
