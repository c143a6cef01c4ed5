#include "jetvar/jetcalc.hpp"

#include <algorithm>

#include "jetvar/errors.hpp"

namespace jetvar {

JetContext::JetContext(int n_, int m_, int s_, int cap_) : n(n_), m(m_), s(s_), r((s_ + 1) / 2), cap(cap_) {
  if (n < 1 || m < 1 || s < 1) throw PreconditionError("context needs n, m, s >= 1");
  if (n > Var::kMaxDim) throw PreconditionError("n above " + std::to_string(Var::kMaxDim));
  if (cap < 0) cap = s + 2;
  if (cap > Var::kMaxLen) throw OrderCapError("order cap above " + std::to_string(Var::kMaxLen));
}

FieldPoly weightedPartial(const FieldPoly& f, int sigma, const MultiIndex& J) {
  return partialRaw(f, Var::y(sigma, J)) * partialWeight(J);
}

FieldPoly truncatedTotalDerivative(const FieldPoly& f, int i, int order) {
  const VariableFamily& fam = f.family();
  if (i < 1 || i > fam.n) throw PreconditionError("total derivative index out of range");
  VariableFamily outFam = fam;
  outFam.maxOrder = std::max(fam.maxOrder, order);
  FieldPoly out(outFam);
  const Var xi = Var::x(i);
  for (const auto& [mono, c] : f.terms()) {
    for (std::size_t p = 0; p < mono.factors.size(); ++p) {
      const auto [v, e] = mono.factors[p];
      Var repl;
      if (v == xi) {
        repl = Var();
      } else if (v.kind() == Var::Y && v.order() <= order - 1) {
        repl = Var::y(v.index(), addOne(v.multiIndex(fam.n), i));
      } else {
        continue;
      }
      Monomial m2;
      m2.degree = mono.degree;
      for (std::size_t q = 0; q < mono.factors.size(); ++q) {
        if (q == p) {
          if (e > 1) m2.factors.emplace_back(v, e - 1);
        } else {
          m2.factors.push_back(mono.factors[q]);
        }
      }
      if (v == xi) {
        m2.degree -= 1;
      } else {
        auto it = std::lower_bound(m2.factors.begin(), m2.factors.end(), repl,
                                   [](const auto& a, const Var& b) { return a.first < b; });
        if (it != m2.factors.end() && it->first == repl)
          ++it->second;
        else
          m2.factors.insert(it, {repl, 1u});
      }
      out.addTerm(m2, c * e);
    }
  }
  return out;
}

FieldPoly totalDerivative(const FieldPoly& f, int i, int cap) {
  if (f.order() > cap - 1)
    throw OrderCapError("total derivative of an order-" + std::to_string(f.order()) + " expression exceeds cap " +
                        std::to_string(cap));
  return truncatedTotalDerivative(f, i, cap);
}

FieldPoly totalDerivativeMulti(const FieldPoly& f, const MultiIndex& J, int cap) {
  FieldPoly g = f;
  for (int i : J.entries()) g = totalDerivative(g, i, cap);
  return g;
}

std::vector<FieldPoly> eulerLagrange(const FieldPoly& L, const JetContext& ctx) {
  if (L.order() > ctx.r)
    throw PreconditionError("Lagrangian of order " + std::to_string(L.order()) + " exceeds r=" + std::to_string(ctx.r));
  std::vector<FieldPoly> T;
  for (int sigma = 1; sigma <= ctx.m; ++sigma) {
    FieldPoly acc = ctx.zero();
    for (const auto& J : multiIndicesUpTo(ctx.n, ctx.r)) {
      // ordered-tuple sum: the tuple count cancels the weight of d^J
      FieldPoly g = partialRaw(L, Var::y(sigma, J));
      if (g.isZero()) continue;
      g = totalDerivativeMulti(g, J, ctx.cap);
      if (J.length() % 2) acc -= g;
      else acc += g;
    }
    T.push_back(std::move(acc));
  }
  return T;
}

HelmholtzReport helmholtzCheck(const std::vector<FieldPoly>& T, const JetContext& ctx) {
  if (static_cast<int>(T.size()) != ctx.m) throw PreconditionError("need one expression per fiber index");
  for (const auto& t : T)
    if (t.order() > ctx.s) throw PreconditionError("expression order exceeds s");
  // d_J with |J| <= s acting on order-s expressions reaches order 2s; this is exact
  const int cap = std::max(ctx.cap, 2 * ctx.s);
  HelmholtzReport rep;
  for (const auto& I : multiIndicesUpTo(ctx.n, ctx.s)) {
    const int li = I.length();
    for (int s1 = 1; s1 <= ctx.m; ++s1)
      for (int s2 = 1; s2 <= ctx.m; ++s2) {
        FieldPoly lhs = weightedPartial(T[s2 - 1], s1, I);
        FieldPoly rhs = ctx.zero();
        for (const auto& J : multiIndicesUpTo(ctx.n, ctx.s - li)) {
          FieldPoly g = weightedPartial(T[s1 - 1], s2, concat(I, J));
          if (g.isZero()) continue;
          g = totalDerivativeMulti(g, J, cap);
          Rational c = binomial(J.length() + li, J.length()) * static_cast<unsigned long>(orderedTupleCount(J));
          if (J.length() % 2) c = -c;
          rhs += g * c;
        }
        if (li % 2) rhs = -rhs;
        FieldPoly res = lhs - rhs;
        if (!res.isZero()) {
          rep.pass = false;
          rep.violations.push_back({I, s1, s2, res});
        }
      }
  }
  return rep;
}

FieldPoly hyperJacobian(const JetContext& ctx, int order, const std::vector<SlotPair>& pairs,
                        const std::vector<int>& freeFermionic) {
  const int k = static_cast<int>(pairs.size());
  if (k > ctx.n || static_cast<int>(freeFermionic.size()) != ctx.n - k)
    throw PreconditionError("hyper-Jacobian needs k <= n pairs and n-k free indices");
  for (const auto& p : pairs)
    if (p.I.length() != order - 1) throw PreconditionError("hyper-Jacobian multi-index must have length order-1");
  FieldPoly out = ctx.zero();
  std::vector<int> eps(ctx.n);
  for (int p = 0; p < ctx.n - k; ++p) eps[k + p] = freeFermionic[p];
  for (const auto& tup : allTuples(ctx.n, k)) {
    for (int l = 0; l < k; ++l) eps[l] = tup[l];
    int sign = leviCivita(eps);
    if (sign == 0) continue;
    FieldPoly term = ctx.constant(sign);
    for (int l = 0; l < k; ++l) term = term * ctx.y(pairs[l].sigma, addOne(pairs[l].I, tup[l]));
    out += term;
  }
  return out;
}

FieldPoly divergenceLagrangian(const std::vector<FieldPoly>& f, const JetContext& ctx) {
  if (static_cast<int>(f.size()) != ctx.n) throw PreconditionError("divergence needs n components");
  FieldPoly L = ctx.zero();
  for (int i = 1; i <= ctx.n; ++i) {
    if (f[i - 1].order() > ctx.r - 1) throw PreconditionError("divergence component exceeds order r-1");
    L += totalDerivative(f[i - 1], i, ctx.cap);
  }
  return L;
}

bool isVariationallyTrivial(const FieldPoly& L, const JetContext& ctx) {
  for (const auto& t : eulerLagrange(L, ctx))
    if (!t.isZero()) return false;
  return true;
}

}  // namespace jetvar
