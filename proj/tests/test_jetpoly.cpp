#include "doctest.h"
#include "jetvar/errors.hpp"
#include "jetvar/io.hpp"
#include "jetvar/parse.hpp"
#include "support.hpp"

using namespace jetvar;
using testsupport::Rng;

namespace {

const VariableFamily F11 = VariableFamily::grassmann(1, 1, 4);
const VariableFamily F22 = VariableFamily::grassmann(2, 2, 4);

FieldPoly P(const std::string& s, const VariableFamily& f = F11) { return parsePoly(s, f); }

}  // namespace

TEST_CASE("ring arithmetic examples") {
  CHECK(P("(y1 + x1)*(y1 - x1)") == P("y1^2 - x1^2"));
  CHECK(P("y1 + x1") + FieldPoly(F11) == P("y1 + x1"));
  CHECK(polyPow(P("1/2*y1_[1]"), 2) == P("1/4*y1_[1]^2"));
  CHECK(P("x1*y2 - y2*x1", F22).isZero());
  CHECK(-P("y1") == P("-y1"));
  CHECK(P("-y1^2") == -P("y1^2"));
  CHECK(P("(-y1)^2") == P("y1^2"));
  CHECK(P("x1*-y1^3") == -P("x1*y1^3"));
  CHECK(P("--y1") == P("y1"));
}

TEST_CASE("canonical text") {
  CHECK(P("x2*y1_[11]*3/2 - y2", F22).str() == "3/2*y1_[11]*x2 - y2");
  CHECK(P("0").str() == "0");
  CHECK(P("-1/2").str() == "-1/2");
  CHECK(P("2/4*y1").str() == "1/2*y1");
  CHECK(P("y1*y1*y1").str() == "y1^3");
}

TEST_CASE("mechanics aliases") {
  CHECK(P("t") == P("x1"));
  CHECK(P("q1_2") == P("y1_[11]"));
  CHECK(P("q1") == P("y1"));
  CHECK(P("1/2*y1_[1]^2").str(true) == "1/2*q1_1^2");
  CHECK(P("t*y1").str(true) == "q1*t");
  CHECK_THROWS_AS(P("t", F22), ParseError);
}

TEST_CASE("parse errors carry positions") {
  try {
    parsePoly("y1_[3]", F22);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 5);
    CHECK(std::string(e.what()).find("exceeds n=2") != std::string::npos);
  }
  try {
    parsePoly("x1 +\n  * y1", F11);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parsePoly("y3", F22), ParseError);
  CHECK_THROWS_AS(parsePoly("y1_[11111]", F11), ParseError);
  CHECK_THROWS_AS(parsePoly("1/0", F11), ParseError);
  CHECK_THROWS_AS(parsePoly("(x1", F11), ParseError);
  CHECK_THROWS_AS(parsePoly("x1 x1", F11), ParseError);
}

TEST_CASE("partialRaw examples") {
  const auto fam = VariableFamily::grassmann(2, 1, 3);
  CHECK(partialRaw(parsePoly("y1_[12]^2", fam), Var::y(1, MultiIndex(2, {1, 2}))) == parsePoly("2*y1_[12]", fam));
  CHECK(partialRaw(P("x1"), Var::y(1, MultiIndex(1))).isZero());
  CHECK(partialRaw(P("3*x1*y1 + y1^3"), Var::y(1, MultiIndex(1))) == P("3*x1 + 3*y1^2"));
  CHECK_THROWS_AS(partialRaw(P("y1"), Var::y(2, MultiIndex(1))), PreconditionError);
}

TEST_CASE("substitute examples") {
  const Var y0 = Var::y(1, MultiIndex(1)), y1 = Var::y(1, MultiIndex(1, {1}));
  CHECK(substitute(P("y1 - x1"), {{y0, P("x1")}}).isZero());
  CHECK(substitute(P("y1_[1]^2"), {{y1, P("2")}}) == P("4"));
  CHECK(substitute(P("y1*y1_[1]"), {{y0, P("x1^2")}, {y1, P("2*x1")}}) == P("2*x1^3"));
}

TEST_CASE("randomized ring axioms, Leibniz and substitution") {
  Rng rng(101);
  JetContext ctx(2, 2, 2);
  const auto pool = testsupport::variablePool(ctx, 2);
  for (int t = 0; t < 200; ++t) {
    auto a = testsupport::randomPoly(ctx, pool, rng, 4, 3);
    auto b = testsupport::randomPoly(ctx, pool, rng, 4, 3);
    auto c = testsupport::randomPoly(ctx, pool, rng, 4, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a + b) - b == a);
    const Var v = pool[rng.uniform(0, static_cast<int>(pool.size()) - 1)];
    CHECK(partialRaw(a * b, v) == partialRaw(a, v) * b + a * partialRaw(b, v));
    std::map<Var, FieldPoly> bind{{pool[rng.uniform(0, static_cast<int>(pool.size()) - 1)], testsupport::randomPoly(ctx, pool, rng, 2, 2)},
                                  {pool[rng.uniform(0, static_cast<int>(pool.size()) - 1)], ctx.constant(rng.coeff())}};
    CHECK(substitute(a * b, bind) == substitute(a, bind) * substitute(b, bind));
    CHECK(substitute(a + b, bind) == substitute(a, bind) + substitute(b, bind));
  }
}

TEST_CASE("parse of print is a fixed point") {
  Rng rng(202);
  for (int n = 1; n <= 3; ++n) {
    JetContext ctx(n, 2, 3);
    for (int t = 0; t < 60; ++t) {
      auto p = testsupport::randomPoly(ctx, 3, rng, 6, 4);
      CHECK(parsePoly(p.str(), ctx.family()) == p);
      CHECK(parsePoly(p.str(), ctx.family()).str() == p.str());
      if (n == 1) CHECK(parsePoly(p.str(true), ctx.family()) == p);
    }
  }
}

TEST_CASE("JSON form") {
  auto p = P("3/2*y1_[11]*x1 - y1^2 + 7");
  Json j = polyToJson(p);
  CHECK(j.is_array());
  CHECK(j.size() == 3);
  CHECK(polyFromJson(j, F11) == p);
  CHECK(j[0]["coeff"] == "3/2");
  CHECK(j[0]["monomial"]["y1_[11]"] == 1);
}

TEST_CASE("family mismatch is rejected") {
  CHECK_THROWS_AS(P("y1") + P("y1", F22), FamilyMismatch);
}

TEST_CASE("order and degree queries") {
  auto p = P("y1_[111]*y1 + x1^4");
  CHECK(p.order() == 3);
  CHECK(p.totalDegree() == 4);
  CHECK(P("x1").order() == -1);
  CHECK(p.degreeIn(Var::y(1, MultiIndex(1, {1, 1, 1}))) == 1);
}
