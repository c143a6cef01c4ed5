#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "jetvar/forms.hpp"
#include "jetvar/jetcalc.hpp"
#include "jetvar/liegroup.hpp"
#include "jetvar/tensors.hpp"

namespace testsupport {

using namespace jetvar;

// Deterministic across platforms: no std distributions.
struct Rng {
  std::mt19937_64 g;
  explicit Rng(std::uint64_t seed) : g(seed) {}
  int uniform(int lo, int hi) { return lo + static_cast<int>(g() % static_cast<std::uint64_t>(hi - lo + 1)); }
  bool coin() { return (g() & 1u) != 0; }
  Rational coeff() {
    int num = uniform(-5, 5);
    if (num == 0) num = 1;
    return ratio(num, uniform(1, 3));
  }
};

inline std::vector<Var> variablePool(const JetContext& ctx, int maxOrder, bool withX = true) {
  std::vector<Var> pool;
  if (withX)
    for (int i = 1; i <= ctx.n; ++i) pool.push_back(Var::x(i));
  for (int sigma = 1; sigma <= ctx.m; ++sigma)
    for (const auto& J : multiIndicesUpTo(ctx.n, maxOrder)) pool.push_back(Var::y(sigma, J));
  return pool;
}

inline FieldPoly randomPoly(const JetContext& ctx, const std::vector<Var>& pool, Rng& rng, int maxTerms,
                            int maxDegree) {
  FieldPoly p = ctx.zero();
  const int terms = rng.uniform((maxTerms + 1) / 2, maxTerms);
  for (int t = 0; t < terms; ++t) {
    FieldPoly term = ctx.constant(rng.coeff());
    const int deg = rng.uniform(0, 5) == 0 ? 0 : rng.uniform(1, maxDegree);
    for (int d = 0; d < deg; ++d)
      term = term * FieldPoly::variable(ctx.family(), pool[rng.uniform(0, static_cast<int>(pool.size()) - 1)]);
    p += term;
  }
  return p;
}

inline FieldPoly randomPoly(const JetContext& ctx, int maxOrder, Rng& rng, int maxTerms = 4, int maxDegree = 3) {
  return randomPoly(ctx, variablePool(ctx, maxOrder), rng, maxTerms, maxDegree);
}

// Random ensemble of grading q on the chart of order ctx.s, components of order <= maxOrder.
inline TensorEnsemble randomEnsemble(const JetContext& ctx, int q, int maxOrder, Rng& rng, int maxComponents = 4,
                                     int maxTerms = 3, int maxDegree = 2) {
  TensorEnsemble T(ctx, q);
  auto keys = allKeys(ctx.n, ctx.m, q, ctx.s - 1);
  if (keys.empty()) return T;
  const int count = rng.uniform(1, maxComponents);
  for (int c = 0; c < count; ++c) {
    const auto& key = keys[rng.uniform(0, static_cast<int>(keys.size()) - 1)];
    T.add(key, randomPoly(ctx, maxOrder, rng, maxTerms, maxDegree));
  }
  return T;
}

inline std::vector<Covector> covectorPool(const JetContext& ctx) {
  std::vector<Covector> pool;
  for (int i = 1; i <= ctx.n; ++i) pool.push_back(Covector::dx(i));
  for (int sigma = 1; sigma <= ctx.m; ++sigma) {
    for (const auto& J : multiIndicesUpTo(ctx.n, ctx.s - 1)) pool.push_back(Covector::omega(sigma, J));
    for (const auto& I : multiIndicesOfLength(ctx.n, ctx.s)) pool.push_back(Covector::dyTop(sigma, I));
  }
  return pool;
}

inline DiffForm randomForm(const JetContext& ctx, int degree, Rng& rng, int maxTerms = 3) {
  auto pool = covectorPool(ctx);
  DiffForm a(ctx, degree);
  const int terms = rng.uniform(1, maxTerms);
  for (int t = 0; t < terms; ++t) {
    Basis b;
    for (int d = 0; d < degree; ++d) b.push_back(pool[rng.uniform(0, static_cast<int>(pool.size()) - 1)]);
    a.addTerm(b, randomPoly(ctx, ctx.s, rng, 3, 2));
  }
  return a;
}

// identity plus small integer perturbations, det checked
inline GroupElement randomGroupElement(int r, int n, Rng& rng) {
  while (true) {
    GroupElement a = identityElement(r, n);
    for (const auto& J : multiIndicesUpTo(n, r)) {
      if (J.empty()) continue;
      for (int i = 1; i <= n; ++i) {
        Rational v = a.get(i, J) + rng.uniform(-2, 2);
        if (rng.uniform(0, 3) == 0) v += Rational(1, 2);
        a.set(i, J, v);
      }
    }
    if (a.det1() != 0) return a;
  }
}

inline Velocity randomVelocity(int r, int n, int N, Rng& rng) {
  Velocity x(r, n, N);
  for (int A = 1; A <= N; ++A)
    for (const auto& J : multiIndicesUpTo(n, r)) x.set(A, J, ratio(rng.uniform(-4, 4), rng.uniform(1, 2)));
  return x;
}

}  // namespace testsupport
