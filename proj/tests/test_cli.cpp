#include <doctest.h>

#include <sstream>

#include "quadinv/cli.hpp"
#include "quadinv/json_io.hpp"

using namespace quadinv;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const char* kQuartic = R"({"order": 4, "cayley": ["1", "1/4", "0", "-1/2", "3"]})";
const char* kX1X2 = R"({"order": 2, "cayley": ["0", "1/2", "0"]})";

}  // namespace

TEST_CASE("geometric -d 4") {
  const Result r = run({"geometric", "-d", "4"});
  CHECK(r.code == 0);
  CHECK(r.json() == Json::parse(R"({"z": ["16", "24/7", "1/5"]})"));
}

TEST_CASE("involutors") {
  const Result r = run({"involutors", "-d", "2"});
  REQUIRE(r.code == 0);
  const Json j = r.json();
  CHECK(j.size() == 4);
  for (const auto& e : j) CHECK(e.at("verified").get<bool>());
  CHECK(j.front().at("sign") == "+++");

  const Json sym = run({"involutors", "-d", "4", "--verify", "symbolic"}).json();
  CHECK(sym.size() == 8);
  for (const auto& e : sym) CHECK(e.at("verified").get<bool>());
  CHECK(run({"involutors", "-d", "4", "--verify", "slow"}).code == 1);
}

TEST_CASE("z-of-sign, verify and sys") {
  CHECK(run({"z-of-sign", "-s", "+---+"}).json().at("z") == Json::parse(R"(["4", "48/7", "-1/5"])"));
  CHECK(run({"z-of-sign", "--sign=-+-+"}).json().at("sign") == "-+-+");
  CHECK(run({"z-of-sign", "-s", "+--+"}).code == 1);

  const Json v = run({"verify", "-d", "4", "--z", "1,0,0"}).json();
  CHECK_FALSE(v.at("fast").get<bool>());
  CHECK_FALSE(v.at("symbolic").get<bool>());
  CHECK(v.at("agree").get<bool>());
  CHECK(run({"verify", "-s", "+-+-+", "--mode", "fast"}).json().at("verified").get<bool>());

  const Json s = run({"sys", "-d", "6"}).json();
  CHECK(s.at("equations").back() == "1/6468*z0^2 + 11/22050*z1^2 + 1/75*z2^2 + z3^2 = 1");
  CHECK(s.at("alpha").at("0").size() == 4);
}

TEST_CASE("forms in and out") {
  const Result t = run({"transvect", "--a-json", kQuartic, "--b-json", kQuartic, "-r", "2"});
  REQUIRE(t.code == 0);
  const Json form = t.json().at("result");
  CHECK(form.at("order") == 4);
  // Round trip: the emitted form parses back to the same value.
  CHECK(to_json(rational_form_from_json(form)) == form);

  const Result sym = run({"transvect", "--a-json", R"({"order":1,"cayley":[{"variables":["u"],"terms":[{"exponents":[1],"coeff":"1"}]},"0"]})",
                          "--b-json", R"({"order":1,"cayley":["0","1"]})", "-r", "1"});
  REQUIRE(sym.code == 0);
  CHECK(poly_form_from_json(sym.json().at("result"))[0] == MultiPoly::variable(make_variables({"u"}), "u"));

  const Json a = run({"apply-sigma", "--q-json", kX1X2, "--f-json", kQuartic, "-s", "+---+"}).json();
  CHECK(a.at("result").at("cayley") == Json::parse(R"(["1", "-1/4", "0", "1/2", "3"])"));

  const Json c = run({"canonical", "-s", "+--+--+", "--f-json",
                      R"({"order": 6, "cayley": ["1", "0", "0", "7", "0", "0", "2"]})"}).json();
  CHECK(c.at("plus") == Json::parse("[0, 3, 6]"));
  CHECK(c.at("canonical").get<bool>());
}

TEST_CASE("recoupling subcommands") {
  CHECK(run({"omega", "-a", "5", "-b", "6", "-r", "2", "-s", "4", "-d", "5"}).json().at("omega") ==
        Json::parse(R"({"5": "-95/286286", "7": "575/1123122", "9": "-95/9438"})"));
  CHECK(run({"omega", "-a", "5", "-b", "6", "-r", "2", "-s", "4", "-d", "5", "-t", "7"}).json().at("omega") ==
        Json::parse(R"({"7": "575/1123122"})"));
  CHECK(run({"recouple", "-a", "2", "-b", "2", "-c", "2", "-r", "1", "-s", "1"}).json() ==
        Json::parse(R"({"theta": {"0": "1/2", "1": "1/2", "2": "-1/3"}})"));
  CHECK(run({"sixj", "--labels", "1,1,1,1,1,1"}).json() ==
        Json::parse(R"({"sixj": {"rational": "96", "radicand": "1/331776"}})"));
  CHECK(run({"sixj", "--labels", "1/2,1/2,1,0,1/2,1"}).code == 0);
  CHECK(run({"sixj", "--labels", "1,1,1,3,1,1"}).code == 1);
  CHECK(run({"sixj", "--labels", "1/3,1,1,1,1,1"}).code == 1);
  CHECK(run({"tetra", "--labels", "0,0,0,0,0,0"}).json().at("tetra") == "1");
}

TEST_CASE("loci subcommands") {
  const Json c = run({"curve", "--f-json", R"({"order": 6, "cayley": ["1", "0", "0", "0", "1/15", "0", "1"]})"}).json();
  const MultiPoly curve = poly_from_json(c.at("curve"));
  const Variables& v = curve.variables();
  const auto q = [&](int i) { return MultiPoly::variable(v, i); };
  CHECK(curve == q(0).pow(3) + q(0) * q(1).pow(2) * Rational(4, 5) + q(0).pow(2) * q(2) * Rational(1, 5) + q(2).pow(3));

  const Json l = run({"covariant", "lambda", "--f-json", R"({"order": 6, "cayley": ["1","0","0","0","0","0","1"]})"}).json();
  CHECK(l.at("kind") == "lambda");
  CHECK(l.at("covariant").at("order") == 2);
  CHECK(run({"covariant", "beta", "--f-json", kQuartic}).code == 0);
  CHECK(run({"covariant", "beta", "--f-json", R"({"order": 6, "cayley": ["1","0","0","0","0","0","1"]})"}).code == 1);

  const Json g = run({"centres", "-s", "++-++", "--f-json", kQuartic}).json();
  CHECK(g.at("d") == 4);
  CHECK(!g.at("generators").empty());
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 1);
  const Result u = run({"frobnicate"});
  CHECK(u.code == 1);
  CHECK(!u.err.empty());
  CHECK(run({"curve", "--f-json", "{not json"}).code == 1);
  CHECK(run({"curve", "--f-json", R"({"order": 3, "cayley": ["1"]})"}).code == 1);
  CHECK(run({"curve", "--f", "/nonexistent/form.json"}).code == 1);
  CHECK(run({"geometric"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::vector<std::string>> cmds = {
      {"sys", "-d", "5"}, {"involutors", "-d", "6"}, {"centres", "-s", "+-+-+", "--f-json", kQuartic}};
  for (const auto& c : cmds) CHECK(run(c).out == run(c).out);
}

TEST_CASE("paper-check reports each item") {
  const Result r = run({"paper-check"});
  const Json j = r.json();
  CHECK(j.at("items").size() == 13);
  int failed = 0;
  for (const auto& item : j.at("items")) {
    if (!item.at("pass").get<bool>()) {
      ++failed;
      CHECK(item.at("name").get<std::string>().rfind("omega", 0) == 0);
    }
  }
  // The printed d=5 omega display has the odd Delta-power signs dropped.
  CHECK(failed == 1);
  CHECK(r.code == 1);
}
