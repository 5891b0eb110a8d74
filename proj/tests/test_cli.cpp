#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "opx/cli.hpp"

using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = opx::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("symbolic moments") {
  Run r = cli({"moments", "--family", "laguerre:alpha=sym", "--n", "4"});
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["command"] == "moments");
  CHECK(doc["family"] == "laguerre:alpha=sym");
  CHECK(doc["params"]["n"] == "4");
  std::vector<std::string> want{"1", "alpha+1", "alpha^2+3*alpha+2",
                                "alpha^3+6*alpha^2+11*alpha+6",
                                "alpha^4+10*alpha^3+35*alpha^2+50*alpha+24"};
  REQUIRE(doc["result"].size() == want.size());
  for (size_t i = 0; i < want.size(); ++i) CHECK(doc["result"][i] == want[i]);
}

TEST_CASE("rational moments in csv form") {
  Run r = cli({"moments", "--family", "meixner1:beta=1,c=1/2", "--n", "3",
               "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "0,1\n1,1\n2,3\n3,13\n");
}

TEST_CASE("matrix entries") {
  Run r = cli({"entry", "--family", "su11+:k=1/2,c=0", "--m", "8", "--i", "0",
               "--d", "0"});
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["result"] == "1385");

  r = cli({"entry", "--family", "su11+:k=1,c=0", "--m", "2", "--d", "2",
           "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "2*sqrt(3)\n");

  r = cli({"entry", "--family", "sh:alpha=1", "--m", "4", "--i", "1"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["result"] == "16");
}

TEST_CASE("inverse coefficient tables") {
  Run r = cli({"inverse", "--family", "meixner2:delta=0,eta=sym", "--n", "3"});
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  REQUIRE(doc["result"].size() == 4);
  CHECK(doc["result"][3][1] == "3*eta+2");
  CHECK(doc["result"][3][3] == "1");
  CHECK(doc["result"][2][1] == "0");
}

TEST_CASE("eigenvector coefficients") {
  Run r = cli({"eigvec", "--family", "su11+:k=1,c=1", "--z", "0", "--N", "2"});
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  REQUIRE(doc["result"]["p"].size() == 3);
  CHECK(doc["result"]["p"][0] == "1");
  CHECK(doc["result"]["p"][1] == "-2");  // z - b_0 = -2c(k+0)
  CHECK(doc["result"]["h"][0] == "1");
}

TEST_CASE("classification") {
  Run r = cli({"classify", "--family", "su11+:k=1,c=5/4"});
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["result"]["kind"] == "meixner1");
  CHECK(doc["result"]["beta"] == "2");
  CHECK(doc["result"]["c"] == "1/4");

  r = cli({"classify", "--family", "su11-:k=1,c=-1"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["result"]["kind"] == "laguerre");

  r = cli({"classify", "--family", "laguerre:alpha=1"});
  CHECK(r.code == 2);
}

TEST_CASE("verification suites") {
  Run r = cli({"verify", "--suite", "perms", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.find(",pass,") != std::string::npos);
  CHECK(r.out.find(",fail,") == std::string::npos);

  r = cli({"verify", "--suite", "nope"});
  CHECK(r.code == 2);
}

TEST_CASE("error channels and exit codes") {
  Run r = cli({});
  CHECK(r.code == 2);
  CHECK(json::parse(r.err)["error"] == "usage");

  r = cli({"frobnicate"});
  CHECK(r.code == 2);

  r = cli({"moments", "--family", "nosuch:a=1", "--n", "2"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());

  r = cli({"moments", "--family", "laguerre:alpha=1"});  // missing --n
  CHECK(r.code == 2);

  r = cli({"moments", "--family", "laguerre:alpha=1", "--n", "2", "--verbose", "x"});
  CHECK(r.code == 2);

  r = cli({"moments", "--family", "meixner1:beta=1,c=1", "--n", "2"});
  CHECK(r.code == 3);
  CHECK(json::parse(r.err)["error"] == "domain");

  r = cli({"moments", "--family", "meixner2:delta=sym,eta=sym", "--n", "2"});
  CHECK(r.code == 2);  // at most one symbolic parameter

  r = cli({"entry", "--family", "laguerre:alpha=sym", "--m", "2"});
  CHECK(r.code == 2);  // no operator form with a symbolic parameter

  r = cli({"moments", "--family", "laguerre:alpha=1", "--n", "999"});
  CHECK(r.code == 2);

  r = cli({"moments", "--family", "laguerre:alpha=1", "--n", "2", "--format", "yaml"});
  CHECK(r.code == 2);
}

TEST_CASE("output is deterministic") {
  std::vector<std::string> args{"inverse", "--family", "laguerre:alpha=1/2", "--n", "6"};
  Run a = cli(args), b = cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}
