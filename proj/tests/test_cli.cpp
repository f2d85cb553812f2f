#include <sstream>

#include "doctest.h"
#include "permstat/cli.hpp"
#include "permstat/format.hpp"
#include "permstat/identities.hpp"

using namespace permstat;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("format") {
  const auto id = profile_s(Permutation::identity(3));
  CHECK(format_profile(id, Format::json).rfind(R"({"length":0,"maj":0,"rmaj":0,"del":0,"des_set":[],)", 0) == 0);
  CHECK(format_polynomial(MultiPoly::constant(1) + MultiPoly::monomial(2, 1, 1), Format::pretty) == "1 + 2*q*t");
  CHECK(format_polynomial(MultiPoly::constant(1) + MultiPoly::monomial(2, 1, 1), Format::json) ==
        R"({"text":"1 + 2*q*t","terms":[{"coeff":1,"exps":[0,0]},{"coeff":2,"exps":[1,1]}]})");
  IdentityReport r;
  r.name = "thm61-s";
  r.n = 3;
  r.elapsed_seconds = 0.5;
  CHECK(format_report(r, Format::csv, false) == "thm61-s,n=3,true");
  CHECK(format_report(r, Format::csv, true) == "thm61-s,n=3,true,0.500000");
  CHECK(format_report(r, Format::json, false).find("elapsed") == std::string::npos);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("stat and canon") {
  const auto s = invoke({"stat", "--group", "S", "[2,5,4,1,3]"});
  CHECK(s.code == 0);
  CHECK(s.out.find("\"length\":6") != std::string::npos);
  CHECK(s.out.find("\"del\":1") != std::string::npos);
  const auto c = invoke({"canon", "--group", "A", "[3,5,4,2,1]", "--format", "pretty"});
  CHECK(c.code == 0);
  CHECK(c.out == "a1 | a2 a1^-1 | a3 a2 a1\n");
  const auto j = invoke({"--format", "json", "canon", "--group", "A", "[3,5,4,2,1]"});
  CHECK(j.out.find(R"("factors":[{"j":1,"r":1,"last":"a1"},{"j":2,"r":1,"last":"a1inv"})") != std::string::npos);
  CHECK(j.out.find(R"("text":"a1 | a2 a1^-1 | a3 a2 a1")") != std::string::npos);
  const auto sj = invoke({"canon", "--group", "S", "[2,5,4,1,3]"});
  CHECK(sj.out.find(R"("factors":[{"j":1,"r":1},{"j":3,"r":2},{"j":4,"r":2}])") != std::string::npos);
}

TEST_CASE("verify exit codes") {
  const auto ok = invoke({"verify", "thm61-a", "--n", "4", "--jobs", "1"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("\"pass\":true") != std::string::npos);
  const std::string over_cap = [] {
    for (const auto& info : list_identities())
      if (info.name == "macmahon") return std::to_string(info.cap + 1);
    return std::string("0");
  }();
  CHECK(invoke({"verify", "macmahon", "--n", over_cap}).code == cli::kExitUsage);
  CHECK(invoke({"verify", "macmahon"}).code == cli::kExitUsage);
  CHECK(invoke({"verify", "unknown", "--n", "3"}).code == cli::kExitUsage);
  CHECK(invoke({"verify", "--all", "--n", "3"}).code == cli::kExitUsage);
}

TEST_CASE("usage errors go to the error stream with exit 2") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"stat", "--group", "S"},
           {"stat", "--group", "B", "[1,2]"},
           {"stat", "--group", "S", "[1,1]"},
           {"canon", "--group", "A", "[2,1,3]"},
           {"genfun", "--group", "S", "--n", "12"},
           {"genfun", "--group", "S", "--n", "3", "--q-stat", "inv"},
           {"shuffles", "--n", "4", "--b", "5"},
           {"list", "--format", "yaml"},
           {"list", "--bogus"}}) {
    const auto o = invoke(args);
    CHECK(o.code == cli::kExitUsage);
    CHECK(o.out.empty());
    CHECK_FALSE(o.err.empty());
  }
}

TEST_CASE("genfun, fiber, shuffles, list") {
  CHECK(invoke({"genfun", "--group", "S", "--n", "3", "--format", "pretty"}).out ==
        "1 + q + q*t + 2*q^2*t + q^3*t^2\n");
  CHECK(invoke({"genfun", "--group", "A", "--n", "2", "--format", "pretty"}).out == "1 + 2*q*t\n");
  CHECK(invoke({"genfun", "--group", "S", "--n", "3", "--q-stat", "maj", "--t-stat", "none", "--format", "pretty"})
            .out == "1 + 2*q + 2*q^2 + q^3\n");
  {
    const int e1[] = {1};
    const int e2[] = {0, 1};
    const MultiPoly product =
        (MultiPoly::constant(1) + MultiPoly::monomial(1, 1, 1, e1)) *
        (MultiPoly::constant(1) + MultiPoly::q_power(1) + MultiPoly::monomial(1, 2, 1, e2));
    CHECK(invoke({"genfun", "--group", "S", "--n", "3", "--multivar", "--format", "pretty"}).out ==
          product.to_string() + "\n");
  }
  CHECK(invoke({"fiber", "[2,1]"}).out == "{\"w\":[2,1],\"del\":1,\"size\":2,\"members\":[[2,3,1],[3,1,2]]}\n");
  CHECK(invoke({"shuffles", "--n", "4", "--b", "2"}).out ==
        "[1,2,3,4]\n[1,3,2,4]\n[1,3,4,2]\n[3,1,2,4]\n[3,1,4,2]\n[3,4,1,2]\n");
  const auto l = invoke({"list"});
  CHECK(l.code == 0);
  CHECK(l.out.find("\"appendix-hat\"") != std::string::npos);
}

TEST_CASE("determinism") {
  const std::vector<std::vector<std::string>> commands{
      {"stat", "--group", "A", "[3,5,4,2,1]"},
      {"canon", "--group", "S", "[2,5,4,1,3]", "--format", "csv"},
      {"fiber", "[3,1,2,4]", "--format", "pretty"},
      {"shuffles", "--n", "5", "--b", "1,3"},
      {"genfun", "--group", "A", "--n", "4", "--multivar"},
      {"verify", "main-a", "--n", "4", "--jobs", "3"},
      {"list", "--format", "csv"}};
  for (const auto& c : commands) {
    const auto a = invoke(c);
    const auto b = invoke(c);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}
