#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toruskk/json_io.hpp"
#include "toruskk/verify.hpp"

using namespace toruskk;

TEST_CASE("exterior class JSON round trip") {
  const std::string wire =
      R"({"d":2,"variance":"x","side":"dual","terms":[{"idx":[1],"c":-1},{"idx":[2],"c":1}]})";
  ExteriorClass cls = classFromJson(Json::parse(wire));
  CHECK(cls.spec().d == 2);
  CHECK(cls.spec().variance == Variance::X);
  CHECK(cls.spec().side == Side::Dual);
  CHECK(cls.coefficient({1}) == -1);
  CHECK(classToJson(cls).dump() == wire); // byte-stable canonical form
}

TEST_CASE("exterior class JSON validation") {
  CHECK_THROWS_AS(classFromJson(Json::parse(R"({"d":2,"variance":"z","side":"base","terms":[]})")),
                  Error);
  CHECK_THROWS_AS(
      classFromJson(Json::parse(R"({"d":2,"variance":"x","side":"base","terms":[{"idx":[2,1],"c":1}]})")),
      Error);
  CHECK_THROWS_AS(
      classFromJson(Json::parse(R"({"d":2,"variance":"x","side":"base","terms":[{"idx":[1],"c":0}]})")),
      Error);
  CHECK_THROWS_AS(classFromJson(Json::parse(R"({"d":2,"side":"base","terms":[]})")), Error);
  SUBCASE("big coefficients travel as strings") {
    ExteriorClass cls({1, Variance::X, Side::Base});
    cls.addTerm({1}, Int("123456789012345678901234567890"));
    Json j = classToJson(cls);
    CHECK(j["terms"][0]["c"].is_string());
    CHECK(classFromJson(j) == cls);
  }
}

TEST_CASE("subtorus JSON round trip") {
  const std::string wire = R"({"d":2,"side":"base","basis":"1;1"})";
  OrientedSubtorus t = subtorusFromJson(Json::parse(wire));
  CHECK(t.d == 2);
  CHECK(t.basis == IntMatrix{{1}, {1}});
  CHECK(subtorusToJson(t).dump() == wire);
  SUBCASE("empty basis uses the dimension form") {
    OrientedSubtorus trivial = trivialSubgroup(3, Side::Dual);
    Json j = subtorusToJson(trivial);
    CHECK(j["basis"] == "3 x 0");
    CHECK(subtorusFromJson(j) == trivial);
  }
  SUBCASE("validation runs on parse") {
    CHECK_THROWS_AS(subtorusFromJson(Json::parse(R"({"d":2,"side":"base","basis":"2;0"})")),
                    Error);
  }
}

TEST_CASE("torus points serialize as reduced fractions") {
  TorusPoint p;
  p.d = 2;
  p.coords = {Rational(1, 2), Rational(0)};
  Json j = torusPointToJson(p);
  CHECK(j.dump() == R"(["1/2","0"])");
}

TEST_CASE("map dump formats") {
  GradedLinearMap fm = buildFMK(1);
  Json j = mapToJson(fm);
  CHECK(j["sourceMonomials"] == Json::array({"", "1"}));
  CHECK(j["matrix"] == Json::parse("[[0,1],[1,0]]"));
  CHECK(j["degreeShift"] == -1);
  std::string text = mapToAlignedText(fm);
  CHECK(text.find("Lambda*x(d=1, base) -> Lambda*x(d=1, dual)") != std::string::npos);
}

TEST_CASE("verify report rendering") {
  VerifyReport report;
  report.d = 2;
  report.seed = 7;
  report.trials = 5;
  SUBCASE("empty report renders the header only") {
    CHECK(formatReport(report) == "verify d=2 seed=7 trials=5\n");
  }
  SUBCASE("pass lines end with pass, failures carry the payload") {
    report.properties.push_back({"alpha", true, 3, ""});
    report.properties.push_back({"beta", false, 9, "seed=7 d=2 k=1 basis=1;1"});
    std::string text = formatReport(report);
    CHECK(text.find("alpha: checks=3 pass\n") != std::string::npos);
    CHECK(text.find("beta: checks=9 FAIL seed=7 d=2 k=1 basis=1;1\n") != std::string::npos);
  }
  SUBCASE("json form carries the same payloads") {
    report.properties.push_back({"alpha", true, 3, ""});
    Json j = reportToJson(report);
    CHECK(j["allPass"] == true);
    CHECK(j["properties"][0]["name"] == "alpha");
  }
}

TEST_CASE("verify suite determinism and filtering") {
  VerifyOptions options;
  options.d = 2;
  options.trials = 8;
  options.seed = 99;
  options.filter = {"hnf-witness", "wedge-algebra"};
  VerifyReport first = runVerifySuite(options);
  VerifyReport second = runVerifySuite(options);
  CHECK(reportToJson(first).dump() == reportToJson(second).dump());
  CHECK(first.properties.size() == 2);
  CHECK(first.allPass());
  SUBCASE("unknown filter yields an empty report") {
    options.filter = {"no-such-property"};
    CHECK(runVerifySuite(options).properties.empty());
  }
}
