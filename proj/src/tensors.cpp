#include "jetvar/tensors.hpp"

#include <algorithm>

#include "jetvar/errors.hpp"

namespace jetvar {

namespace {

template <class T>
int sortWithSign(std::vector<T>& v, std::size_t from) {
  int sign = 1;
  for (std::size_t a = from + 1; a < v.size(); ++a)
    for (std::size_t b = a; b > from && v[b] < v[b - 1]; --b) {
      std::swap(v[b], v[b - 1]);
      sign = -sign;
    }
  for (std::size_t a = from + 1; a < v.size(); ++a)
    if (v[a] == v[a - 1]) return 0;
  return sign;
}

}  // namespace

int canonicalize(TensorKey& key) {
  int sign = sortWithSign(key.pairs, key.top ? 1 : 0);
  if (sign == 0) return 0;
  return sign * sortWithSign(key.fermionic, 0);
}

TensorEnsemble::TensorEnsemble(int n, int m, int q, int s, int cap) : n_(n), m_(m), q_(q), s_(s) {
  if (n < 1 || m < 1 || s < 1 || q < 0) throw PreconditionError("bad ensemble grading");
  fam_ = VariableFamily::grassmann(n, m, cap < 0 ? s + 2 : cap);
}

void TensorEnsemble::checkKey(const TensorKey& key) const {
  if (key.degree() != q_) throw PreconditionError("key degree differs from ensemble grading q");
  for (int p = 0; p < key.k(); ++p) {
    const auto& pr = key.pairs[p];
    if (pr.sigma < 1 || pr.sigma > m_) throw PreconditionError("fiber index out of range in key");
    if (pr.I.n() != n_) throw PreconditionError("multi-index dimension differs from ensemble");
    int bound = key.top && p == 0 ? s_ : s_ - 1;
    if (key.top && p == 0 ? pr.I.length() != s_ : pr.I.length() > bound)
      throw PreconditionError("multi-index length violates the order bound of the ensemble");
  }
  if (key.top && key.pairs.empty()) throw PreconditionError("top key without a dy-slot");
  for (int i : key.fermionic)
    if (i < 1 || i > n_) throw PreconditionError("fermionic index out of range");
}

void TensorEnsemble::add(TensorKey key, const FieldPoly& value) {
  if (value.isZero()) return;
  checkKey(key);
  int sign = canonicalize(key);
  if (sign == 0) return;
  auto& store = key.top ? top_ : comps_;
  auto it = store.find(key);
  if (it == store.end()) {
    FieldPoly v = value;
    if (sign < 0) v = -v;
    store.emplace(std::move(key), std::move(v));
    return;
  }
  if (sign > 0)
    it->second += value;
  else
    it->second -= value;
  if (it->second.isZero()) store.erase(it);
}

FieldPoly TensorEnsemble::get(TensorKey key) const {
  int sign = canonicalize(key);
  if (sign == 0) return zeroPoly();
  const auto& store = key.top ? top_ : comps_;
  auto it = store.find(key);
  if (it == store.end()) return zeroPoly();
  return sign > 0 ? it->second : -it->second;
}

TensorEnsemble& TensorEnsemble::operator+=(const TensorEnsemble& o) {
  if (o.n_ != n_ || o.m_ != m_ || o.q_ != q_) throw PreconditionError("ensemble grading mismatch");
  for (const auto& [k, v] : o.comps_) add(k, v);
  for (const auto& [k, v] : o.top_) add(k, v);
  return *this;
}

TensorEnsemble& TensorEnsemble::operator-=(const TensorEnsemble& o) {
  if (o.n_ != n_ || o.m_ != m_ || o.q_ != q_) throw PreconditionError("ensemble grading mismatch");
  for (const auto& [k, v] : o.comps_) add(k, -v);
  for (const auto& [k, v] : o.top_) add(k, -v);
  return *this;
}

TensorEnsemble& TensorEnsemble::operator*=(const Rational& c) {
  if (c == 0) {
    comps_.clear();
    top_.clear();
  }
  for (auto& [k, v] : comps_) v *= c;
  for (auto& [k, v] : top_) v *= c;
  return *this;
}

int TensorEnsemble::order() const {
  int o = -1;
  for (const auto& [k, v] : comps_) o = std::max(o, v.order());
  for (const auto& [k, v] : top_) o = std::max(o, v.order());
  return o;
}

std::vector<TensorKey> allKeys(int n, int m, int q, int maxLen) {
  std::vector<SlotPair> slots;
  for (const auto& I : multiIndicesUpTo(n, maxLen))
    for (int sigma = 1; sigma <= m; ++sigma) slots.push_back({I, sigma});
  std::sort(slots.begin(), slots.end());
  std::vector<TensorKey> out;
  // choose k strictly increasing slots and q-k strictly increasing fermions
  for (int k = 0; k <= q; ++k) {
    const int l = q - k;
    if (l > n || k > static_cast<int>(slots.size())) continue;
    std::vector<std::vector<int>> fermSets;
    for (const auto& t : allTuples(n, l)) {
      bool inc = true;
      for (int a = 1; a < l; ++a) inc = inc && t[a - 1] < t[a];
      if (inc) fermSets.push_back(t);
    }
    std::vector<int> sel(k);
    for (int p = 0; p < k; ++p) sel[p] = p;
    const int S = static_cast<int>(slots.size());
    while (true) {
      for (const auto& f : fermSets) {
        TensorKey key;
        for (int p : sel) key.pairs.push_back(slots[p]);
        key.fermionic = f;
        out.push_back(std::move(key));
      }
      int p = k - 1;
      while (p >= 0 && sel[p] == S - k + p) --p;
      if (p < 0) break;
      ++sel[p];
      for (int r = p + 1; r < k; ++r) sel[r] = sel[r - 1] + 1;
    }
  }
  return out;
}

namespace {

void requirePlain(const TensorEnsemble& T) {
  if (!T.topComponents().empty()) throw PreconditionError("operator not defined on dy-slot components");
}

TensorEnsemble shifted(const TensorEnsemble& T) {
  return TensorEnsemble(T.n(), T.m(), T.q() + 1, T.s(), T.family().maxOrder);
}

}  // namespace

TensorEnsemble delta1(const TensorEnsemble& T) {
  requirePlain(T);
  TensorEnsemble out = shifted(T);
  for (const auto& [key, val] : T.components()) {
    Rational w(1, static_cast<unsigned long>(key.k() + 1));
    for (Var v : val.variables()) {
      if (v.kind() != Var::Y || v.order() > T.s() - 1) continue;
      MultiIndex J = v.multiIndex(T.n());
      TensorKey nk;
      nk.pairs.push_back({J, v.index()});
      nk.pairs.insert(nk.pairs.end(), key.pairs.begin(), key.pairs.end());
      nk.fermionic = key.fermionic;
      out.add(std::move(nk), weightedPartial(val, v.index(), J) * w);
    }
  }
  return out;
}

namespace {

void addBSlot(const TensorEnsemble& T, const TensorKey& key, const FieldPoly& val, int p, TensorEnsemble& out) {
  const auto& I = key.pairs[p].I;
  if (I.length() + 1 > T.s() - 1) return;
  const int K = key.k();
  const int l = static_cast<int>(key.fermionic.size());
  for (int v = 1; v <= T.n(); ++v) {
    MultiIndex J = addOne(I, v);
    Rational c = ratio(J.multiplicity(v), J.length() * (l + 1));
    if (K % 2) c = -c;
    TensorKey nk = key;
    nk.pairs[p].I = J;
    nk.fermionic.insert(nk.fermionic.begin(), v);
    out.add(std::move(nk), val * c);
  }
}

TensorEnsemble delta2With(const TensorEnsemble& T, int dOrder) {
  requirePlain(T);
  TensorEnsemble out = shifted(T);
  for (const auto& [key, val] : T.components()) {
    Rational c(1, static_cast<unsigned long>(key.fermionic.size() + 1));
    if (T.q() % 2) c = -c;
    for (int i = 1; i <= T.n(); ++i) {
      TensorKey nk = key;
      nk.fermionic.push_back(i);
      out.add(std::move(nk), truncatedTotalDerivative(val, i, dOrder) * c);
    }
  }
  out += bSum(T);
  return out;
}

}  // namespace

TensorEnsemble bOperator(const TensorEnsemble& T, int p) {
  requirePlain(T);
  TensorEnsemble out = shifted(T);
  for (const auto& [key, val] : T.components())
    if (p >= 1 && p <= key.k()) addBSlot(T, key, val, p - 1, out);
  return out;
}

TensorEnsemble bSum(const TensorEnsemble& T) {
  requirePlain(T);
  TensorEnsemble out = shifted(T);
  for (const auto& [key, val] : T.components())
    for (int p = 0; p < key.k(); ++p) addBSlot(T, key, val, p, out);
  return out;
}

TensorEnsemble delta2(const TensorEnsemble& T) {
  if (T.order() > T.s()) throw OrderCapError("ensemble component above chart order s");
  return delta2With(T, T.s());
}

TensorEnsemble delta(const TensorEnsemble& T) { return delta1(T) + delta2(T); }

TensorEnsemble delta2Prime(const TensorEnsemble& T, int orderCap) {
  if (orderCap < 0) orderCap = T.s() - 1;
  if (T.order() > orderCap) throw OrderCapError("ensemble component above the d' order cap");
  return delta2With(T, orderCap);
}

TensorEnsemble deltaPrime(const TensorEnsemble& T, int orderCap) { return delta1(T) + delta2Prime(T, orderCap); }

TraceReport tracelessCheck(const TensorEnsemble& T) {
  requirePlain(T);
  std::map<TensorKey, FieldPoly> acc;
  for (const auto& [key, val] : T.components()) {
    for (int p = 0; p < key.k(); ++p) {
      const auto& pr = key.pairs[p];
      for (std::size_t a = 0; a < key.fermionic.size(); ++a) {
        int v = key.fermionic[a];
        if (pr.I.multiplicity(v) == 0) continue;
        TensorKey rk;
        rk.pairs.push_back({removeOne(pr.I, v), pr.sigma});
        for (int q = 0; q < key.k(); ++q)
          if (q != p) rk.pairs.push_back(key.pairs[q]);
        for (std::size_t b = 0; b < key.fermionic.size(); ++b)
          if (b != a) rk.fermionic.push_back(key.fermionic[b]);
        int sign = ((p + static_cast<int>(a)) % 2) ? -1 : 1;
        auto it = acc.find(rk);
        if (it == acc.end()) it = acc.emplace(rk, T.zeroPoly()).first;
        if (sign > 0)
          it->second += val;
        else
          it->second -= val;
      }
    }
  }
  TraceReport rep;
  for (auto& [k, v] : acc)
    if (!v.isZero()) {
      rep.pass = false;
      rep.violations.push_back({k, v});
    }
  return rep;
}

TensorEnsemble buildFromJacobians(const TensorEnsemble& calL, const JetContext& ctx, int q) {
  requirePlain(calL);
  const int n = ctx.n;
  if (q > n) throw PreconditionError("buildFromJacobians: q > n is not supported");
  if (calL.q() != q || calL.n() != n || calL.m() != ctx.m || calL.s() != ctx.s)
    throw PreconditionError("buildFromJacobians: grading of the input does not match");
  if (calL.order() > ctx.s - 1) throw PreconditionError("buildFromJacobians: input depends on order-s variables");
  TensorEnsemble out(ctx, q);
  const auto inner = multiIndicesOfLength(n, ctx.s - 1);
  std::map<std::pair<std::vector<SlotPair>, std::vector<int>>, FieldPoly> jcache;
  auto jac = [&](const std::vector<SlotPair>& pairs, const std::vector<int>& ferm) -> const FieldPoly& {
    auto key = std::make_pair(pairs, ferm);
    auto it = jcache.find(key);
    if (it == jcache.end()) it = jcache.emplace(key, hyperJacobian(ctx, ctx.s, pairs, ferm)).first;
    return it->second;
  };
  const Rational nfact = factorial(n);
  for (const auto& key : allKeys(n, ctx.m, q, ctx.s - 1)) {
    const int k = key.k();
    Rational pref = binomial(n, q - k) / nfact;
    if ((k * (q + 1)) % 2) pref = -pref;
    FieldPoly total = ctx.zero();
    for (const auto& head : allTuples(n, k))
      for (const auto& tail : allTuples(n, n - q)) {
        std::vector<int> eps = head;
        eps.insert(eps.end(), key.fermionic.begin(), key.fermionic.end());
        eps.insert(eps.end(), tail.begin(), tail.end());
        int e = leviCivita(eps);
        if (e == 0) continue;
        for (int l = k; l <= q; ++l) {
          Rational cl = binomial(l, k) * e;
          // new pairs (I_{k+1}..I_l, sigma_{k+1}..sigma_l), all |I| = s-1
          std::vector<SlotPair> slots;
          for (const auto& I : inner)
            for (int sigma = 1; sigma <= ctx.m; ++sigma) slots.push_back({I, sigma});
          for (const auto& pick : allTuples(static_cast<int>(slots.size()), l - k)) {
            std::vector<SlotPair> np;
            Rational w = cl;
            for (int t : pick) {
              np.push_back(slots[t - 1]);
              w *= static_cast<unsigned long>(orderedTupleCount(slots[t - 1].I));
            }
            for (const auto& js : allTuples(n, q - l)) {
              TensorKey lk;
              lk.pairs = key.pairs;
              lk.pairs.insert(lk.pairs.end(), np.begin(), np.end());
              lk.fermionic = js;
              FieldPoly lv = calL.get(lk);
              if (lv.isZero()) continue;
              std::vector<int> jf = js;
              jf.insert(jf.end(), head.begin(), head.end());
              jf.insert(jf.end(), tail.begin(), tail.end());
              const FieldPoly& jv = jac(np, jf);
              if (jv.isZero()) continue;
              total += lv * jv * w;
            }
          }
        }
      }
    out.add(key, total * pref);
  }
  return out;
}

TensorEnsemble lsResidual(const TensorEnsemble& L, const JetContext& ctx) {
  requirePlain(L);
  if (L.s() != ctx.s || L.n() != ctx.n || L.m() != ctx.m) throw PreconditionError("lsResidual: context mismatch");
  const int s = ctx.s;
  TensorEnsemble out(L.n(), L.m(), L.q() + 1, s, L.family().maxOrder);
  for (const auto& [key, val] : L.components()) {
    // d^{I_0}_{sigma_0} L, |I_0| = s
    for (Var v : val.variables()) {
      if (v.kind() != Var::Y || v.order() != s) continue;
      MultiIndex I0 = v.multiIndex(L.n());
      TensorKey nk;
      nk.top = true;
      nk.pairs.push_back({I0, v.index()});
      nk.pairs.insert(nk.pairs.end(), key.pairs.begin(), key.pairs.end());
      nk.fermionic = key.fermionic;
      out.add(std::move(nk), weightedPartial(val, v.index(), I0));
    }
    // (k+1) B_0 L_{k+1}: slot p of length s-1 moves to the dy-slot
    const int K = key.k();
    const int l = static_cast<int>(key.fermionic.size());
    for (int p = 0; p < K; ++p) {
      const auto& pr = key.pairs[p];
      if (pr.I.length() != s - 1) continue;
      for (int v = 1; v <= L.n(); ++v) {
        MultiIndex J = addOne(pr.I, v);
        Rational c = ratio(K * J.multiplicity(v), s * (l + 1));
        if ((K + p) % 2) c = -c;
        TensorKey nk;
        nk.top = true;
        nk.pairs.push_back({J, pr.sigma});
        for (int q = 0; q < K; ++q)
          if (q != p) nk.pairs.push_back(key.pairs[q]);
        nk.fermionic = key.fermionic;
        nk.fermionic.insert(nk.fermionic.begin(), v);
        out.add(std::move(nk), val * c);
      }
    }
  }
  return out;
}

}  // namespace jetvar
