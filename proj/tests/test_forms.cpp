#include "doctest.h"
#include "jetvar/errors.hpp"
#include "jetvar/io.hpp"
#include "jetvar/parse.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace jetvar;
using testsupport::Rng;

namespace {

FieldPoly P(const std::string& s, const JetContext& ctx) { return parsePoly(s, ctx.family()); }
MultiIndex mi(int n, std::vector<int> e) { return MultiIndex(n, std::move(e)); }

DiffForm one(Covector c, const JetContext& ctx) { return DiffForm::covector(c, ctx); }

std::vector<int> range(int n) {
  std::vector<int> v;
  for (int i = 1; i <= n; ++i) v.push_back(i);
  return v;
}

// coefficient of omega^sigma ^ dx^1 ^ .. ^ dx^n in the tensor normalization
FieldPoly elComponent(const DiffForm& alpha, int sigma) {
  return formToEnsemble(alpha).get({{{MultiIndex(alpha.context().n), sigma}}, range(alpha.context().n), false});
}

}  // namespace

TEST_CASE("wedge examples") {
  JetContext ctx(2, 1, 2);
  auto dx1 = one(Covector::dx(1), ctx), dx2 = one(Covector::dx(2), ctx);
  auto w = one(Covector::omega(1, MultiIndex(2)), ctx);
  CHECK(wedge(dx1, dx1).isZero());
  CHECK(wedge(w, dx1) == wedge(dx1, w) * ctx.constant(-1));
  auto f = P("x1*y1", ctx), g = P("y1_[2]", ctx);
  CHECK(wedge(dx1 * f, dx2 * g).coefficient({Covector::dx(1), Covector::dx(2)}) == f * g);
  CHECK(wedge(dx1 * f, dx2 * g).coefficient({Covector::dx(2), Covector::dx(1)}) == -(f * g));
}

TEST_CASE("graded commutativity and associativity of the wedge") {
  Rng rng(79);
  for (int t = 0; t < 30; ++t) {
    JetContext ctx(rng.uniform(1, 2), rng.uniform(1, 2), rng.uniform(1, 2));
    const int p = rng.uniform(0, 2), q = rng.uniform(0, 2);
    auto a = testsupport::randomForm(ctx, p, rng), b = testsupport::randomForm(ctx, q, rng);
    auto c = testsupport::randomForm(ctx, 1, rng);
    CHECK(wedge(a, b) == wedge(b, a) * ctx.constant((p * q) % 2 ? -1 : 1));
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
  }
}

TEST_CASE("exterior derivative examples") {
  JetContext ctx(2, 1, 3);
  auto dy = exteriorDerivative(DiffForm::function(ctx.y(1), ctx));
  DiffForm expect = one(Covector::omega(1, MultiIndex(2)), ctx);
  expect += one(Covector::dx(1), ctx) * ctx.y(1, std::vector<int>{1});
  expect += one(Covector::dx(2), ctx) * ctx.y(1, std::vector<int>{2});
  CHECK(dy == expect);
  // d omega_J = -omega_{Ji} ^ dx^i for |J| <= s-2
  for (const auto& J : multiIndicesUpTo(2, 1)) {
    auto d = exteriorDerivative(one(Covector::omega(1, J), ctx));
    DiffForm e(ctx, 2);
    for (int i = 1; i <= 2; ++i) e.addTerm({Covector::omega(1, addOne(J, i)), Covector::dx(i)}, ctx.constant(-1));
    CHECK(d == e);
  }
  // at |J| = s-1 the partner is the dy-slot covector
  auto d = exteriorDerivative(one(Covector::omega(1, mi(2, {1, 2})), ctx));
  DiffForm e(ctx, 2);
  for (int i = 1; i <= 2; ++i) e.addTerm({Covector::dyTop(1, addOne(mi(2, {1, 2}), i)), Covector::dx(i)}, ctx.constant(-1));
  CHECK(d == e);
}

TEST_CASE("df carries the raw partials") {
  Rng rng(83);
  for (int t = 0; t < 30; ++t) {
    JetContext ctx(rng.uniform(1, 2), rng.uniform(1, 2), rng.uniform(1, 3));
    auto f = testsupport::randomPoly(ctx, ctx.s, rng, 5, 3);
    auto df = exteriorDerivative(DiffForm::function(f, ctx));
    for (int sigma = 1; sigma <= ctx.m; ++sigma) {
      for (const auto& J : multiIndicesUpTo(ctx.n, ctx.s - 1))
        CHECK(df.coefficient({Covector::omega(sigma, J)}) == partialRaw(f, Var::y(sigma, J)));
      for (const auto& I : multiIndicesOfLength(ctx.n, ctx.s))
        CHECK(df.coefficient({Covector::dyTop(sigma, I)}) == partialRaw(f, Var::y(sigma, I)));
    }
    for (int i = 1; i <= ctx.n; ++i)
      CHECK(df.coefficient({Covector::dx(i)}) == truncatedTotalDerivative(f, i, ctx.s));
  }
}

TEST_CASE("d squares to zero and obeys the graded Leibniz rule") {
  Rng rng(89);
  for (int t = 0; t < 40; ++t) {
    const int n = rng.uniform(1, 2);
    JetContext ctx(n, rng.uniform(1, 2), rng.uniform(1, 3));
    const int p = rng.uniform(0, n + 1);
    auto a = testsupport::randomForm(ctx, p, rng);
    CHECK(exteriorDerivative(exteriorDerivative(a)).isZero());
    auto b = testsupport::randomForm(ctx, rng.uniform(0, 1), rng);
    auto lhs = exteriorDerivative(wedge(a, b));
    auto rhs = wedge(exteriorDerivative(a), b) + wedge(a, exteriorDerivative(b)) * ctx.constant(p % 2 ? -1 : 1);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("contact degree split") {
  JetContext ctx(2, 2, 2);
  DiffForm a(ctx, 2);
  a.addTerm({Covector::dx(1), Covector::dx(2)}, ctx.x(1));
  a.addTerm({Covector::omega(1, MultiIndex(2)), Covector::dx(1)}, ctx.y(2));
  a.addTerm({Covector::omega(1, MultiIndex(2)), Covector::omega(2, mi(2, {1}))}, ctx.constant(3));
  auto split = contactDegreeSplit(a);
  REQUIRE(split.size() == 3);
  CHECK(split[0].terms().size() == 1);
  CHECK(split[1].coefficient({Covector::omega(1, MultiIndex(2)), Covector::dx(1)}) == ctx.y(2));
  CHECK(split[2].coefficient({Covector::omega(1, MultiIndex(2)), Covector::omega(2, mi(2, {1}))}) == ctx.constant(3));
}

TEST_CASE("section pullback examples") {
  JetContext ctx = JetContext::fromLagrangianOrder(1, 1, 1);
  auto g = std::vector<FieldPoly>{P("x1^2", ctx)};
  DiffForm L(ctx, 1);
  L.addTerm({Covector::dx(1)}, P("1/2*q1_1^2", ctx));
  CHECK(sectionPullback(L, g).coefficient({Covector::dx(1)}) == P("2*x1^2", ctx));
  CHECK(sectionPullback(one(Covector::omega(1, MultiIndex(1)), ctx), g).isZero());
  CHECK_THROWS_AS(sectionPullback(L, {P("y1", ctx)}), PreconditionError);
}

TEST_CASE("contact forms vanish along sections") {
  Rng rng(97);
  for (int t = 0; t < 20; ++t) {
    const int n = rng.uniform(1, 2), m = rng.uniform(1, 2);
    JetContext ctx(n, m, rng.uniform(1, 3));
    std::vector<FieldPoly> g;
    for (int a = 0; a < m; ++a) {
      std::vector<Var> xs;
      for (int i = 1; i <= n; ++i) xs.push_back(Var::x(i));
      g.push_back(testsupport::randomPoly(ctx, xs, rng, 4, 3));
    }
    for (int sigma = 1; sigma <= m; ++sigma)
      for (const auto& J : multiIndicesUpTo(n, ctx.s - 1)) CHECK(sectionPullback(one(Covector::omega(sigma, J), ctx), g).isZero());
    // any form with a contact factor
    auto w = wedge(one(Covector::omega(rng.uniform(1, m), MultiIndex(n)), ctx), testsupport::randomForm(ctx, 1, rng));
    CHECK(sectionPullback(w, g).isZero());
  }
}

TEST_CASE("principal Poincare-Cartan form examples") {
  auto c1 = JetContext::fromLagrangianOrder(1, 1, 1);
  auto L = P("1/2*q1_1^2", c1);
  auto theta = pcPrincipal(L, c1);
  DiffForm expect(c1, 1);
  expect.addTerm({Covector::dx(1)}, L);
  expect.addTerm({Covector::omega(1, MultiIndex(1))}, P("q1_1", c1));
  CHECK(theta == expect);
  CHECK(elComponent(lagrangeSouriau(theta), 1) == P("-q1_2", c1));

  auto c2 = JetContext::fromLagrangianOrder(2, 1, 1);
  auto vol = pcPrincipal(c2.constant(3), c2);
  CHECK(vol.terms().size() == 1);
  CHECK(vol.coefficient({Covector::dx(1), Covector::dx(2)}) == c2.constant(6));

  auto lap = pcPrincipal(P("1/2*(y1_[1]^2 + y1_[2]^2)", c2), c2);
  CHECK(lap.coefficient({Covector::omega(1, MultiIndex(2)), Covector::dx(2)}) == P("2*y1_[1]", c2));
  CHECK(lap.coefficient({Covector::omega(1, MultiIndex(2)), Covector::dx(1)}) == P("-2*y1_[2]", c2));
  CHECK_THROWS_AS(pcPrincipal(P("y1_[11]", c2), c2), PreconditionError);
}

TEST_CASE("Euler-Lagrange component of d(theta) with global constant 1") {
  // fixed once from the free particle, then used everywhere
  auto c1 = JetContext::fromLagrangianOrder(1, 1, 1);
  auto L0 = P("1/2*q1_1^2", c1);
  const FieldPoly k0 = elComponent(exteriorDerivative(pcPrincipal(L0, c1)), 1);
  REQUIRE(k0 == eulerLagrange(L0, c1)[0]);
  Rng rng(101);
  for (int t = 0; t < 12; ++t) {
    const int n = rng.uniform(1, 2), m = rng.uniform(1, 2), r = rng.uniform(1, 2);
    auto ctx = JetContext::fromLagrangianOrder(n, m, r);
    auto L = testsupport::randomPoly(ctx, r, rng, 5, 3);
    auto alpha = lagrangeSouriau(pcPrincipal(L, ctx));
    auto EL = eulerLagrange(L, ctx);
    for (int sigma = 1; sigma <= m; ++sigma) CHECK(elComponent(alpha, sigma) == EL[sigma - 1]);
  }
}

TEST_CASE("exact and trivial cases give no Euler-Lagrange component") {
  auto ctx = JetContext::fromLagrangianOrder(2, 2, 1);
  Rng rng(103);
  auto lam = testsupport::randomForm(ctx, 1, rng);
  CHECK(lagrangeSouriau(exteriorDerivative(lam)).isZero());
  auto J = P("y1_[1]*y2_[2] - y1_[2]*y2_[1]", ctx);
  auto alpha = lagrangeSouriau(pcPrincipal(J, ctx));
  for (int sigma = 1; sigma <= 2; ++sigma) CHECK(elComponent(alpha, sigma).isZero());
}

TEST_CASE("first-order Poincare-Cartan form") {
  auto c1 = JetContext::fromLagrangianOrder(1, 2, 1);
  Rng rng(107);
  for (int t = 0; t < 5; ++t) {
    auto L = testsupport::randomPoly(c1, 1, rng, 5, 3);
    CHECK(pcFirstOrder(L, c1) == pcPrincipal(L, c1));
  }
  auto c2 = JetContext::fromLagrangianOrder(2, 2, 1);
  CHECK(exteriorDerivative(pcFirstOrder(P("y1_[1]*y2_[2] - y1_[2]*y2_[1]", c2), c2)).isZero());
  auto vol = pcFirstOrder(c2.constant(Rational(1, 2)), c2);
  CHECK(vol.coefficient({Covector::dx(1), Covector::dx(2)}) == c2.constant(1));
  CHECK(exteriorDerivative(vol).isZero());
  CHECK_THROWS_AS(pcFirstOrder(P("y1_[12]", c2), c2), PreconditionError);
  CHECK_THROWS_AS(pcFirstOrder(P("y1", c2), JetContext(2, 2, 3)), PreconditionError);
}

TEST_CASE("mechanics Poincare-Cartan form examples") {
  auto c1 = JetContext::fromLagrangianOrder(1, 1, 1);
  auto L = P("1/2*q1_1^2", c1);
  DiffForm expect(c1, 1);
  expect.addTerm({Covector::dx(1)}, L);
  expect.addTerm({Covector::omega(1, MultiIndex(1))}, P("q1_1", c1));
  CHECK(pcMechanics(L, c1) == expect);
  DiffForm da(c1, 2);
  da.addTerm({Covector::omega(1, MultiIndex(1)), Covector::dx(1)}, P("-q1_2", c1));
  da.addTerm({Covector::omega(1, oracle::ones(1)), Covector::omega(1, MultiIndex(1))}, c1.constant(1));
  CHECK(exteriorDerivative(pcMechanics(L, c1)) == da);

  auto c2 = JetContext::fromLagrangianOrder(1, 1, 2);
  auto theta = pcMechanics(P("1/2*q1_2^2", c2), c2);
  CHECK(theta.coefficient({Covector::omega(1, oracle::ones(0))}) == P("-q1_3", c2));
  CHECK(theta.coefficient({Covector::omega(1, oracle::ones(1))}) == P("q1_2", c2));
  CHECK(elComponent(exteriorDerivative(theta), 1) == P("q1_4", c2));
  CHECK(pcMechanics(c2.zero(), c2).isZero());

  JetContext odd(1, 1, 3);
  CHECK_THROWS_AS(pcMechanics(P("q1_2^2", odd), odd), PreconditionError);
  CHECK_NOTHROW(pcMechanics(P("q1*q1_2 + q1_1^2", odd), odd));
  CHECK_THROWS_AS(pcMechanics(P("q1", c2), JetContext(2, 1, 2)), PreconditionError);
}

TEST_CASE("mechanics form agrees with the principal form at n = 1") {
  Rng rng(109);
  for (int t = 0; t < 10; ++t) {
    auto ctx = JetContext::fromLagrangianOrder(1, rng.uniform(1, 2), rng.uniform(1, 2));
    auto L = testsupport::randomPoly(ctx, ctx.r, rng, 5, 3);
    CHECK(pcMechanics(L, ctx) == pcPrincipal(L, ctx));
  }
}

TEST_CASE("n = 1 closedness system and the T^ij formula") {
  Rng rng(113);
  for (int t = 0; t < 8; ++t) {
    const int r = rng.uniform(1, 2), m = rng.uniform(1, 2);
    const int s = rng.coin() ? 2 * r : 2 * r - 1;
    JetContext ctx(1, m, s);
    FieldPoly L = testsupport::randomPoly(ctx, r, rng, 6, 3);
    if (s == 2 * r - 1) {
      auto pool = testsupport::variablePool(ctx, r - 1);
      L = testsupport::randomPoly(ctx, pool, rng, 4, 3) +
          testsupport::randomPoly(ctx, pool, rng, 3, 2) * ctx.y(rng.uniform(1, m), std::vector<int>(r, 1));
    }
    auto F = oracle::mechanicsSystem(exteriorDerivative(pcMechanics(L, ctx)));
    CHECK(F.empty());
    for (const auto& f : F.list) MESSAGE(f);
  }
}

TEST_CASE("s = 2 closedness system, Lepage condition and low-order relation") {
  Rng rng(127);
  JetContext ctx(2, 2, 2);
  for (int t = 0; t < 6; ++t) {
    auto L = testsupport::randomPoly(ctx, 1, rng, 6, 3);
    auto alpha = exteriorDerivative(pcFirstOrder(L, ctx));
    auto F = oracle::firstOrderSystem(alpha);
    CHECK(F.empty());
    for (const auto& f : F.list) MESSAGE(f);
    // T^{l,[]}_{s1 s2, i3} = -(n/2) sum_{i2} d^{l i2}_{s1} T_{s2, i2 i3}
    auto A = formToEnsemble(alpha);
    MultiIndex e(2);
    for (int l = 1; l <= 2; ++l)
      for (int s1 = 1; s1 <= 2; ++s1)
        for (int s2 = 1; s2 <= 2; ++s2)
          for (int i3 = 1; i3 <= 2; ++i3) {
            FieldPoly rhs = ctx.zero();
            for (int i2 = 1; i2 <= 2; ++i2)
              rhs += weightedPartial(A.get({{{e, s2}}, {i2, i3}, false}), s1, mi(2, {l, i2}));
            CHECK(A.get({{{mi(2, {l}), s1}, {e, s2}}, {i3}, false}) == rhs * ctx.constant(-1));
          }
  }
}

TEST_CASE("form JSON and text") {
  auto ctx = JetContext::fromLagrangianOrder(1, 1, 1);
  auto theta = pcPrincipal(P("1/2*q1_1^2", ctx), ctx);
  CHECK(theta.str() == "(1/2*y1_[1]^2) * dx1 + (y1_[1]) * omega1_[]");
  CHECK(theta.str(true) == "(1/2*q1_1^2) * dx1 + (q1_1) * omega1_[]");
  auto j = formToJson(theta);
  CHECK(j["degree"] == 1);
  CHECK(j["terms"].size() == 2);
}
