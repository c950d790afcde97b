#include <doctest.h>

#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "cubicrig/cli.hpp"
#include "cubicrig/rigidity.hpp"

using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "cubicrig");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cubicrig::cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("verify on the smallest pair passes and reports the leading term") {
  const auto r = invoke({"verify", "--n", "1", "--m", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("2*y^3") != std::string::npos);
  CHECK(r.out.find("overall            PASS") != std::string::npos);
}

TEST_CASE("verify json parses back into an equal report") {
  const auto r = invoke({"verify", "--n", "1", "--m", "2", "--tail-i", "1", "--emit", "json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["overall"] == "pass");
  CHECK(j["resultant_degree"] == 9);
  const auto back = cubicrig::report_from_json(j);
  CHECK(cubicrig::to_json(back) == j);
}

TEST_CASE("repeated runs are byte-identical") {
  const std::vector<std::string> args{"sweep", "--n-range", "1:2", "--m-range", "1:2", "--tails", "00,10", "--emit",
                                      "json", "--jobs", "3", "--seed", "7"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("resultant json carries the leading data and agreement of both methods") {
  const auto r = invoke({"resultant", "--n", "1", "--m", "1", "--method", "both", "--emit", "json", "--print-poly"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["degree"] == 3);
  CHECK(j["lead_coeff"] == "-64");
  CHECK(j["ord3_lead"] == 0);
  CHECK(j["mod3_leading_term"] == "2*y^3");
  CHECK(j["method_agreement"] == true);
  CHECK(j["resultant"] == "-64*y^3");
}

TEST_CASE("artin-schreier reports the closed form with the oracle sign") {
  const auto r = invoke({"artin-schreier", "--p", "3", "--n", "1", "--m", "2", "--oracle", "--emit", "json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["closed_form"] == j["oracle"]);
  CHECK(j["sign"] == 1);
  CHECK(j["sign_determined"] == true);
}

TEST_CASE("profile csv has one row per k") {
  const auto r = invoke({"profile", "--n", "2", "--emit", "csv"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1 + 10);
}

TEST_CASE("sweep csv header, row order and empty ranges") {
  const auto r = invoke({"sweep", "--n-range", "1:2", "--m-range", "1:1", "--emit", "csv", "--jobs", "2"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "n,m,tail_i,tail_j,degree,expected,ord3_lead,jac_mod3,num_solutions,min_abs_J,overall\n"
        "1,1,0,0,3,3,0,ok,3,2,pass\n"
        "2,1,0,0,9,9,0,ok,9,2,pass\n");

  const auto empty = invoke({"sweep", "--n-range", "3:2", "--emit", "csv"});
  CHECK(empty.code == 0);
  CHECK(empty.out == "n,m,tail_i,tail_j,degree,expected,ord3_lead,jac_mod3,num_solutions,min_abs_J,overall\n");
}

TEST_CASE("usage errors and resource limits exit with 2") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"verify", "--n", "1"}).code == 2);
  CHECK(invoke({"verify", "--n", "0", "--m", "1"}).code == 2);
  CHECK(invoke({"verify", "--n", "1", "--m", "1", "--tail-i", "2"}).code == 2);
  CHECK(invoke({"sweep", "--tails", "02"}).code == 2);
  CHECK(invoke({"sweep", "--n-range", "x:y"}).code == 2);
  CHECK(invoke({"resultant", "--n", "1", "--m", "1", "--method", "qr"}).code == 2);

  const auto big = invoke({"verify", "--n", "5", "--m", "1"});
  CHECK(big.code == 2);
  CHECK(big.err.find("max_n") != std::string::npos);
  CHECK(invoke({"resultant", "--n", "2", "--m", "2", "--method", "ff", "--max-size", "10"}).code == 2);
}

TEST_CASE("environment limits apply and flags override them") {
  ::setenv("CUBICRIG_MAX_N", "1", 1);
  CHECK(invoke({"profile", "--n", "2"}).code == 2);
  CHECK(invoke({"profile", "--n", "2", "--max-n", "3"}).code == 0);
  ::setenv("CUBICRIG_MAX_N", "zero", 1);
  CHECK(invoke({"profile", "--n", "1"}).code == 2);
  ::unsetenv("CUBICRIG_MAX_N");
}

TEST_CASE("help exits cleanly") {
  const auto r = invoke({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("sweep") != std::string::npos);
}
