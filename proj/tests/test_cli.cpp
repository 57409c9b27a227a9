#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hecke/cli.hpp"

using namespace hecke;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const char* name) {
  std::ifstream in(std::string(HECKE_GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("golden outputs") {
  CHECK(run({"table", "--inf"}).out == golden("table.csv"));
  CHECK(run({"count", "--k", "4", "--t-max", "10", "--method", "both"}).out == golden("count_k4_both.csv"));
  CHECK(run({"seq", "--k", "inf", "--t", "30"}).out == golden("seq_inf.csv"));
  CHECK(run({"count", "--k", "6", "--base", "k", "--t-max", "9", "--format", "json"}).out ==
        golden("count_k6_basek.json"));
}

TEST_CASE("count example rows") {
  const auto r = run({"count", "--k", "4", "--base", "2", "--t-max", "4", "--method", "both"});
  CHECK(r.code == 0);
  CHECK(r.out == "t,n_forms,n_btype,n_classes,n_primitive\n2,2,0,1,1\n3,1,1,1,0\n4,4,0,2,1\n");
}

TEST_CASE("table rows") {
  const auto r = run({"table", "--k-min", "3", "--k-max", "13"});
  CHECK(r.out.find("3,x^2-2,no dominant root,\n") != std::string::npos);
  CHECK(r.out.find("10,x^6-2x^4-2x^3-2x^2-2x-1,1.96595,0.35656\n") != std::string::npos);
  CHECK(r.out.find("13,x^7-2x^5-2x^4-2x^3-2x^2-2x-2,1.98920,0.34335\n") != std::string::npos);
  const auto j = nlohmann::json::parse(run({"table", "--k-min", "3", "--k-max", "4", "--format", "json"}).out);
  CHECK(j["schema"] == 1);
  CHECK(j["rows"][0]["dominant_root"].is_null());
  CHECK(j["rows"][1]["coefficient"] == 0.44721);
}

TEST_CASE("exit codes") {
  CHECK(run({"count", "--k", "5", "--base", "k"}).code == cli::kExitInvalidConfig);
  CHECK(run({"count", "--k", "5", "--base", "k"}).err.starts_with("INVALID_BASE"));
  CHECK(run({"count", "--k", "2"}).code == cli::kExitInvalidConfig);
  CHECK(run({"count", "--k", "4", "--method", "guess"}).code == cli::kExitInvalidConfig);
  CHECK(run({"nope"}).code == cli::kExitInvalidConfig);
  CHECK(run({}).code == cli::kExitInvalidConfig);
  CHECK(run({"coeffs", "--k", "3"}).code == cli::kExitInvalidConfig);
  CHECK(run({"btype", "--k", "5"}).code == cli::kExitInvalidConfig);
  CHECK(run({"trace", "--k", "4", "--word", "a q"}).code == cli::kExitInvalidConfig);
  const auto budget = run({"count", "--k", "8", "--t-max", "14", "--method", "census", "--budget", "1000"});
  CHECK(budget.code == cli::kExitBudget);
  CHECK(budget.err.starts_with("BUDGET_EXCEEDED"));
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("trace") {
  const auto j = nlohmann::json::parse(run({"trace", "--k", "4", "--word", "a b a b^-1"}).out);
  CHECK(j["class"] == "HYPERBOLIC");
  CHECK(j["abs_trace"].get<double>() == doctest::Approx(4.0));
  CHECK(j.contains("geo_length"));
  const auto e = nlohmann::json::parse(run({"trace", "--k", "6", "--word", "a"}).out);
  CHECK(e["class"] == "ELLIPTIC");
  CHECK_FALSE(e.contains("geo_length"));
  const auto p = nlohmann::json::parse(run({"trace", "--k", "inf", "--word", "b"}).out);
  CHECK(p["class"] == "PARABOLIC");
}

TEST_CASE("roots, coeffs and btype") {
  const auto roots = run({"roots", "--k", "4"});
  CHECK(roots.out == "index,re,im,modulus\n0,1.61803,0.00000,1.61803\n1,-1.00000,0.00000,1.00000\n2,-0.61803,0.00000,0.61803\n");
  const auto coeffs = nlohmann::json::parse(run({"coeffs", "--k", "4", "--format", "json"}).out);
  CHECK(coeffs["rows"][0]["coeff_re"] == 0.44721);
  CHECK(coeffs["rows"][1]["coeff_re"] == 1.0);
  CHECK(coeffs["rows"][2]["coeff_re"] == -0.44721);
  const auto bt = run({"btype", "--k", "4", "--t-max", "6"});
  CHECK(bt.code == 0);
  CHECK(bt.out == "t,count,bound,holds\n1,0,0.176777,true\n2,0,0.500000,true\n3,1,1.060660,true\n"
                  "4,0,2.000000,true\n5,0,3.535534,true\n6,1,6.000000,true\n");
}

TEST_CASE("census output does not depend on threads") {
  const auto one = run({"count", "--k", "6", "--t-max", "10", "--method", "census", "--threads", "1"});
  const auto four = run({"count", "--k", "6", "--t-max", "10", "--method", "census", "--threads", "4"});
  CHECK(one.code == 0);
  CHECK(one.out == four.out);
}

TEST_CASE("out file") {
  const std::string path = "hecke_cli_out_test.csv";
  CHECK(run({"seq", "--k", "5", "--t-max", "6", "--out", path}).out.empty());
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  CHECK(first == "t,count");
  in.close();
  std::remove(path.c_str());
  CHECK(run({"seq", "--k", "5", "--out", "/nonexistent/dir/x.csv"}).code == cli::kExitInvalidConfig);
}

TEST_CASE("verify") {
  const auto ok = run({"verify", "--k", "5", "--t-max", "8"});
  CHECK(ok.code == 0);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j["schema"] == 1);
  CHECK(j["passed"] == true);

  const auto bad = run({"verify", "--k", "4", "--t-max", "8", "--perturb-initial", "1"});
  CHECK(bad.code == cli::kExitMismatch);
  const auto jb = nlohmann::json::parse(bad.out);
  CHECK(jb["passed"] == false);
  CHECK(jb["checks"][0]["name"] == "oracle");
  CHECK(jb["checks"][0]["first_bad_t"] == 2);

  const auto three = nlohmann::json::parse(run({"verify", "--k", "3"}).out);
  bool has_closed_form = false;
  for (const auto& c : three["checks"]) has_closed_form = has_closed_form || (c["name"] == "closed-form" && c["passed"] == true);
  CHECK(has_closed_form);
}

TEST_CASE("verify at default scale") {
  const auto r = run({"verify"});
  CHECK(r.code == 0);
}
