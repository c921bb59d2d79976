#include <doctest.h>
#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "lpq-cli");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = lpq::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("envelope") {
    const Run r = run({"classify", "5", "2", "2"});
    REQUIRE(r.code == 0);
    const json d = r.doc();
    CHECK(d["command"] == "classify");
    CHECK(d["schema_version"] == "1.0");
    CHECK(d["inputs"]["q2"] == 2);
    CHECK(d["result"]["homotopy_equivalent"] == true);
    CHECK(d["result"]["diffeomorphic"] == true);
    CHECK(d["result"]["positive_contactomorphism_possible"] == true);
    CHECK(r.out == run({"classify", "5", "2", "2"}).out);
  }

  TEST_CASE("classify") {
    const json a = run({"classify", "7", "1", "2"}).doc()["result"];
    CHECK(a["homotopy_equivalent"] == true);
    CHECK(a["diffeomorphic"] == false);
    CHECK(a["positive_contactomorphism_possible"] == "n/a");
    CHECK(a["standard_range"]["q"] == false);
    const json b = run({"classify", "7", "2", "4"}).doc()["result"];
    CHECK(b["homotopy_equivalent"] == true);
    CHECK(b["diffeomorphic"] == true);
    CHECK(b["positive_contactomorphism_possible"] == true);
  }

  TEST_CASE("input errors exit with 2") {
    for (const auto& args : std::vector<std::vector<std::string>>{{"classify", "9", "2", "2"},
                                                                  {"classify", "7", "0", "2"},
                                                                  {"classify", "7"},
                                                                  {"verify", "4"},
                                                                  {"verify", "1000"},
                                                                  {"nonsense"},
                                                                  {"cz", "5", "2", "x", "1"},
                                                                  {"cz", "5", "2", "0", "5"},
                                                                  {"moduli-check", "5", "2", "0+2"},
                                                                  {"pants", "5", "2", "--format", "xml"},
                                                                  {"intersect", "1", "3", "0"}}) {
      const Run r = run(args);
      CHECK_MESSAGE(r.code == 2, args.front());
      CHECK(r.out.empty());
      CHECK_FALSE(r.err.empty());
    }
    CHECK(run({"intersect", "1", "3", "0"}).err.find("AdjunctionViolation") != std::string::npos);
  }

  TEST_CASE("pants") {
    const json rows = run({"pants", "5", "2", "0", "1"}).doc()["result"]["rows"];
    bool found = false;
    for (const auto& row : rows)
      found = found || (row["r"] == 1 && row["d_I"] == 0 && row["k"] == 1 && row["k0"] == 2 && row["kInf"] == 4 &&
                        row["dim"] == 4 && row["fredholm"] == 4 && row["regular"] == true);
    CHECK(found);
    CHECK(run({"pants", "7", "3", "0", "1"}).doc()["result"]["r_values"] == 6);
    CHECK(run({"pants", "5", "2", "0", "0"}).doc()["result"]["rows"].empty());
    CHECK(run({"pants", "5", "2", "--max-di", "0", "--max-k", "1"}).out == run({"pants", "5", "2", "0", "1"}).out);
    CHECK(run({"pants", "5", "2", "0", "--max-di", "1"}).code == 2);
  }

  TEST_CASE("worked minimal pants in one call") {
    const Run r = run({"moduli-check", "5", "2", "0+:2", "inf+:4", "c-:1"});
    REQUIRE(r.code == 0);
    const json res = r.doc()["result"];
    CHECK(res["admissible"] == true);
    CHECK(res["pants"]["v"] == 3);
    CHECK(res["pants"]["r"] == 1);
    CHECK(res["pants"]["unique_in_class"] == true);
    CHECK(res["pants"]["cz_gamma0"] == -1);
    CHECK(res["pants"]["cz_gamma_infty"] == -1);
    CHECK(res["pants"]["fredholm"] == 4);
    CHECK(res["action"]["K_plus"] == 6);
    CHECK(res["action"]["K_minus"] == 5);
    CHECK(res["action"]["adjunction_defect"] == 0);
    CHECK(res["action"]["A_plus"] == "6/5");
    CHECK(res["action"]["A_minus"] == "1");
  }

  TEST_CASE("moduli-check on non-pants shapes") {
    const json res = run({"moduli-check", "5", "2", "0+:1", "0-:2"}).doc()["result"];
    CHECK(res["degree"] == -1);
    CHECK(res["admissible"] == false);
    CHECK(res["pants"].is_null());
    CHECK(res["action"]["monotone"] == false);
  }

  TEST_CASE("sample-curve") {
    const Run a = run({"sample-curve", "5", "2", "1", "0", "42", "1e-9"});
    REQUIRE(a.code == 0);
    CHECK(a.doc()["result"]["degree"] == 1);
    CHECK(a.doc()["result"]["max_residual"].get<double>() < 1e-9);
    CHECK(run({"sample-curve", "5", "2", "1", "1", "42", "1e-9"}).doc()["result"]["degree"] == 6);
    CHECK(run({"sample-curve", "5", "2", "2", "0", "7", "1e-9"}).doc()["result"]["m"] == 2);
    CHECK(a.out == run({"sample-curve", "5", "2", "1", "0", "--seed", "42", "--tol", "1e-9"}).out);
    CHECK(run({"sample-curve", "5", "2", "0", "0"}).code == 2);
  }

  TEST_CASE("remaining subcommands") {
    const json cz = run({"cz", "5", "2", "inf", "4"}).doc()["result"];
    CHECK(cz["cz"] == "-1");
    CHECK(cz["cz_lifted"] == "-8");
    CHECK(cz["action"] == "4/5");
    const json sec = run({"section-check", "5", "2", "7", "1", "4"}).doc()["result"];
    CHECK(sec["exists"] == true);
    CHECK(sec["l"] == 3);
    CHECK(run({"section-check", "5", "2", "7", "1", "4", "--l", "2"}).doc()["result"]["exists"] == false);
    const json in = run({"intersect", "6", "5"}).doc()["result"];
    CHECK(in["adjunction_defect"] == 0);
    CHECK(in["chern"] == 13);
    const json neck = run({"neck", "7", "2", "4"}).doc()["result"];
    CHECK(neck["theorem"] == true);
    CHECK(neck["assignments"]["swapped"]["consistent"] == true);
    CHECK(neck["cases"]["neckstretch"][2]["reason"] == "TrivialCylinderMissesPoint");
    CHECK(run({"neck", "7", "2", "3"}).doc()["result"]["theorem"] == false);
    const json cls = run({"classes", "5"}).doc()["result"];
    CHECK(cls["diffeomorphism_classes"] == json::parse("[[1,4],[2,3]]"));
    const json cyl = run({"cylinders", "5", "2", "0", "1"}).doc()["result"];
    CHECK(cyl["all_regular"] == true);
    CHECK(cyl["count"] == 4);
  }

  TEST_CASE("verify") {
    const Run r = run({"verify", "13"});
    REQUIRE(r.code == 0);
    CHECK(r.doc()["result"]["passed"] == true);
    CHECK(r.doc()["result"]["suites"]["theorem_cross_check"]["failures"] == 0);
  }

  TEST_CASE("table format") {
    const Run r = run({"pants", "5", "2", "0", "1", "--format", "table"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("command: pants") != std::string::npos);
    CHECK(r.out.find("regular") != std::string::npos);
  }
}
