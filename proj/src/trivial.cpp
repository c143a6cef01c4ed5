#include "jetvar/errors.hpp"
#include "jetvar/jetcalc.hpp"
#include "jetvar/tensors.hpp"

namespace jetvar {

FieldPoly trivialFromLambda(const TensorEnsemble& lambda, const JetContext& ctx) {
  const int r = ctx.r;
  if (lambda.n() != ctx.n || lambda.m() != ctx.m) throw PreconditionError("lambda context mismatch");
  if (lambda.q() != ctx.n - 1 || lambda.s() != r)
    throw PreconditionError("lambda must be graded q = n-1 with order bound r");
  if (!lambda.topComponents().empty()) throw PreconditionError("lambda carries dy-slot components");
  if (lambda.order() > r - 1) throw PreconditionError("lambda depends on variables of order >= r");
  TensorEnsemble dl = deltaPrime(lambda, r - 1);
  FieldPoly L = ctx.zero();
  for (const auto& [key, val] : dl.components()) {
    const int k = key.k();
    Rational mult = factorial(k) * factorial(ctx.n - k);
    bool full = true;
    for (const auto& p : key.pairs) {
      if (p.I.length() != r - 1) full = false;
      mult *= static_cast<unsigned long>(orderedTupleCount(p.I));
    }
    if (!full) continue;
    L += val * hyperJacobian(ctx, r, key.pairs, key.fermionic) * mult;
  }
  return L;
}

}  // namespace jetvar
