#include <doctest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "liecheck/cli.hpp"

using namespace liecheck;

namespace {
struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}
}

TEST_CASE("roots command") {
  Run r = cli({"roots", "G2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("12 roots") != std::string::npos);
  Run j = cli({"roots", "G2", "--json"});
  CHECK(j.code == 0);
  // JSON lines: one parseable object per root
  std::istringstream lines(j.out);
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    auto obj = nlohmann::json::parse(line);
    CHECK(obj.contains("omega"));
    CHECK(obj.contains("eps"));
    ++n;
  }
  CHECK(n == 12);
}

TEST_CASE("weights command") {
  Run r = cli({"weights", "--group", "G2", "--p", "2", "--lambda", "w2", "--json"});
  CHECK(r.code == 0);
  auto obj = nlohmann::json::parse(r.out);
  CHECK(obj["dim"] == 14);
}

TEST_CASE("spectrum and check with an inline torus element") {
  std::string torus = R"({"group":"A1","params":[{"name":"c","order":0}],)"
                      R"("values":{"w1":"c"}})";
  Run r = cli({"spectrum", "--group", "A1", "--lambda", "2*w1", "--torus", torus,
               "--json"});
  CHECK(r.code == 0);
  auto obj = nlohmann::json::parse(r.out);
  CHECK(obj["dim"] == 3);
  CHECK(obj["spectrum"].size() == 3);

  Run c = cli({"check", "--group", "A1", "--lambda", "2*w1", "--torus", torus,
               "--json"});
  CHECK(c.code == 0);
  auto cj = nlohmann::json::parse(c.out);
  CHECK(cj["regular"] == true);
  CHECK(cj["strongly_regular"] == true);
  CHECK(cj["cyclic"] == true);
}

TEST_CASE("witness command") {
  Run r = cli({"witness", "--case", "g2-w1", "--json"});
  CHECK(r.code == 0);
  auto obj = nlohmann::json::parse(r.out);
  CHECK(obj["status"] == "ok");
  CHECK(obj["predicates"]["strongly_regular"]["expected"] == false);
  CHECK(obj["predicates"]["strongly_regular"]["actual"] == false);
  CHECK(cli({"witness"}).code == 1);
}

TEST_CASE("verify command") {
  Run r = cli({"verify", "--theorem", "re1", "--group", "C2", "--p", "0",
               "--modulus", "12"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  // identical reruns are byte-identical
  Run j1 = cli({"verify", "--theorem", "th1", "--group", "A2", "--modulus",
                "12", "--json", "--threads", "1"});
  Run j2 = cli({"verify", "--theorem", "th1", "--group", "A2", "--modulus",
                "12", "--json", "--threads", "3"});
  CHECK(j1.code == 0);
  CHECK(j1.out == j2.out);
  // a failing equivalence exits 2
  Run f = cli({"verify", "--theorem", "sa1", "--group", "A2", "--p", "3",
               "--modulus", "24"});
  CHECK(f.code == 2);
}

TEST_CASE("exit codes for bad input") {
  CHECK(cli({"frobnicate"}).code == 1);
  CHECK(cli({"roots", "G2", "--frob"}).code == 1);
  CHECK(cli({"roots", "H3"}).code == 1);
  // an undetermined modular multiplicity is exit 3 with a json error
  Run r = cli({"weights", "--group", "C4", "--p", "5", "--lambda", "w3",
               "--json"});
  CHECK(r.code == 3);
  auto obj = nlohmann::json::parse(r.err);
  CHECK(obj.contains("error"));
}
