#pragma once

#include <vector>

#include "jetvar/jetpoly.hpp"
#include "jetvar/mindex.hpp"

namespace jetvar {

class TensorEnsemble;

struct JetContext {
  int n = 1;
  int m = 1;
  int s = 2;
  int r = 1;
  int cap = 4;

  JetContext() = default;
  // cap < 0 selects the default s + 2
  JetContext(int n_, int m_, int s_, int cap_ = -1);
  static JetContext fromLagrangianOrder(int n, int m, int r, int cap = -1) { return JetContext(n, m, 2 * r, cap); }

  VariableFamily family() const { return VariableFamily::grassmann(n, m, cap); }
  FieldPoly zero() const { return FieldPoly(family()); }
  FieldPoly constant(const Rational& c) const { return FieldPoly(family(), c); }
  FieldPoly x(int i) const { return FieldPoly::variable(family(), Var::x(i)); }
  FieldPoly y(int sigma, const MultiIndex& J) const { return FieldPoly::variable(family(), Var::y(sigma, J)); }
  FieldPoly y(int sigma, std::vector<int> J = {}) const { return y(sigma, MultiIndex(n, std::move(J))); }
};

// (prod r_k! / |J|!) d f / d y^sigma_J
FieldPoly weightedPartial(const FieldPoly& f, int sigma, const MultiIndex& J);

// d_i = d/dx^i + sum_{|J| <= cap-1} y^sigma_{iJ} d^J_sigma; requires order(f) <= cap-1
FieldPoly totalDerivative(const FieldPoly& f, int i, int cap);
FieldPoly totalDerivativeMulti(const FieldPoly& f, const MultiIndex& J, int cap);
// The same operator with the sum cut at |J| <= order-1, applied to f as is:
// dependence on variables of order >= `order` is not differentiated.
FieldPoly truncatedTotalDerivative(const FieldPoly& f, int i, int order);

std::vector<FieldPoly> eulerLagrange(const FieldPoly& L, const JetContext& ctx);

struct HelmholtzViolation {
  MultiIndex I;
  int sigma1 = 0;
  int sigma2 = 0;
  FieldPoly residual;
};

struct HelmholtzReport {
  bool pass = true;
  std::vector<HelmholtzViolation> violations;
};

HelmholtzReport helmholtzCheck(const std::vector<FieldPoly>& T, const JetContext& ctx);

struct SlotPair {
  MultiIndex I;
  int sigma = 1;
  auto operator<=>(const SlotPair& o) const {
    if (auto c = I <=> o.I; c != 0) return c;
    return sigma <=> o.sigma;
  }
  bool operator==(const SlotPair&) const = default;
};

// eps^{i1..in} prod_l y^{sigma_l}_{I_l i_l}; every |I_l| must equal order-1.
FieldPoly hyperJacobian(const JetContext& ctx, int order, const std::vector<SlotPair>& pairs,
                        const std::vector<int>& freeFermionic);
inline FieldPoly hyperJacobian(const JetContext& ctx, const std::vector<SlotPair>& pairs,
                               const std::vector<int>& freeFermionic) {
  return hyperJacobian(ctx, ctx.s, pairs, freeFermionic);
}

FieldPoly divergenceLagrangian(const std::vector<FieldPoly>& f, const JetContext& ctx);

// L = sum_k (delta' lambda)^{I_1..I_k}_{sigma.., i..} J^{sigma.., i..}_{I_1..I_k}, hyper-Jacobians
// of order r; lambda is graded q = n-1 with components of order <= r-1.
FieldPoly trivialFromLambda(const TensorEnsemble& lambda, const JetContext& ctx);

bool isVariationallyTrivial(const FieldPoly& L, const JetContext& ctx);

}  // namespace jetvar
