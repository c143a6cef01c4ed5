#pragma once

#include <map>
#include <utility>
#include <vector>

#include "jetvar/jetcalc.hpp"

namespace jetvar {

// pairs (I_p, sigma_p) followed by fermionic indices. When `top` is set the
// first pair is the dy-slot (|I_0| = s) and takes no part in the pair sort.
struct TensorKey {
  std::vector<SlotPair> pairs;
  std::vector<int> fermionic;
  bool top = false;

  int k() const { return static_cast<int>(pairs.size()); }
  int degree() const { return static_cast<int>(pairs.size() + fermionic.size()); }
  auto operator<=>(const TensorKey&) const = default;
  bool operator==(const TensorKey&) const = default;
};

// Canonical (|I|, I, sigma) pair order; returns the sign, 0 for a vanishing key.
// Pairs compare by (|I|, I) then sigma through SlotPair's ordering.
int canonicalize(TensorKey& key);

class TensorEnsemble {
 public:
  TensorEnsemble() = default;
  TensorEnsemble(int n, int m, int q, int s, int cap = -1);
  TensorEnsemble(const JetContext& ctx, int q) : TensorEnsemble(ctx.n, ctx.m, q, ctx.s, ctx.cap) {}

  int n() const { return n_; }
  int m() const { return m_; }
  int q() const { return q_; }
  int s() const { return s_; }
  const VariableFamily& family() const { return fam_; }
  JetContext context() const { return JetContext(n_, m_, s_, fam_.maxOrder); }

  // accumulate value at a raw key (canonicalized here)
  void add(TensorKey key, const FieldPoly& value);
  // component at a raw key, sign applied
  FieldPoly get(TensorKey key) const;

  const std::map<TensorKey, FieldPoly>& components() const { return comps_; }
  const std::map<TensorKey, FieldPoly>& topComponents() const { return top_; }
  bool isZero() const { return comps_.empty() && top_.empty(); }
  FieldPoly zeroPoly() const { return FieldPoly(fam_); }

  TensorEnsemble& operator+=(const TensorEnsemble& o);
  TensorEnsemble& operator-=(const TensorEnsemble& o);
  TensorEnsemble& operator*=(const Rational& c);
  friend TensorEnsemble operator+(TensorEnsemble a, const TensorEnsemble& b) { return a += b; }
  friend TensorEnsemble operator-(TensorEnsemble a, const TensorEnsemble& b) { return a -= b; }
  bool operator==(const TensorEnsemble& o) const { return comps_ == o.comps_ && top_ == o.top_; }

  // highest variable order among components
  int order() const;

 private:
  void checkKey(const TensorKey& key) const;
  int n_ = 1, m_ = 1, q_ = 0, s_ = 1;
  VariableFamily fam_;
  std::map<TensorKey, FieldPoly> comps_;
  std::map<TensorKey, FieldPoly> top_;
};

// Every canonical key of degree q with all |I_p| <= maxLen (fermions increasing).
std::vector<TensorKey> allKeys(int n, int m, int q, int maxLen);

TensorEnsemble delta1(const TensorEnsemble& T);
TensorEnsemble bOperator(const TensorEnsemble& T, int p);
TensorEnsemble bSum(const TensorEnsemble& T);
TensorEnsemble delta2(const TensorEnsemble& T);
TensorEnsemble delta(const TensorEnsemble& T);
// delta with d_i replaced by the truncated d'_i = d_i^{orderCap}; orderCap < 0 means s-1
TensorEnsemble delta2Prime(const TensorEnsemble& T, int orderCap = -1);
TensorEnsemble deltaPrime(const TensorEnsemble& T, int orderCap = -1);

struct TraceViolation {
  TensorKey key;  // first pair is the traced slot with l removed; fermions without l
  FieldPoly residual;
};

struct TraceReport {
  bool pass = true;
  std::vector<TraceViolation> violations;
};

TraceReport tracelessCheck(const TensorEnsemble& T);

TensorEnsemble buildFromJacobians(const TensorEnsemble& calL, const JetContext& ctx, int q);
TensorEnsemble lsResidual(const TensorEnsemble& L, const JetContext& ctx);

}  // namespace jetvar
