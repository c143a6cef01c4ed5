#include "jetvar/forms.hpp"

#include <algorithm>

#include "jetvar/errors.hpp"

namespace jetvar {

namespace {

std::uint64_t pack(std::uint64_t tag, int index, const MultiIndex& J) {
  if (index < 1 || index > 255) throw PreconditionError("covector index out of range");
  if (J.length() > Var::kMaxLen) throw OrderCapError("covector multi-index too long");
  std::uint64_t key = (tag << 62) | (static_cast<std::uint64_t>(index) << 54) |
                      (static_cast<std::uint64_t>(J.length()) << 48);
  for (int p = 0; p < J.length(); ++p) key |= static_cast<std::uint64_t>(J[p]) << (44 - 4 * p);
  return key;
}

// sorts v, returns the permutation sign, 0 on a repeated covector
int sortSign(Basis& v) {
  int sign = 1;
  for (std::size_t a = 1; a < v.size(); ++a)
    for (std::size_t b = a; b > 0 && v[b] < v[b - 1]; --b) {
      std::swap(v[b], v[b - 1]);
      sign = -sign;
    }
  for (std::size_t a = 1; a < v.size(); ++a)
    if (v[a] == v[a - 1]) return 0;
  return sign;
}

bool sameChart(const JetContext& a, const JetContext& b) { return a.n == b.n && a.m == b.m && a.s == b.s; }

}  // namespace

Covector Covector::dx(int i) {
  Covector c;
  c.key_ = pack(DX, i, MultiIndex());
  return c;
}

Covector Covector::omega(int sigma, const MultiIndex& J) {
  Covector c;
  c.key_ = pack(OMEGA, sigma, J);
  return c;
}

Covector Covector::dyTop(int sigma, const MultiIndex& I) {
  Covector c;
  c.key_ = pack(DYTOP, sigma, I);
  return c;
}

MultiIndex Covector::multiIndex(int n) const {
  std::vector<int> e(order());
  for (int p = 0; p < order(); ++p) e[p] = static_cast<int>((key_ >> (44 - 4 * p)) & 0xf);
  return MultiIndex(n, std::move(e));
}

std::string Covector::name() const {
  std::string digits;
  for (int p = 0; p < order(); ++p) digits += std::to_string((key_ >> (44 - 4 * p)) & 0xf);
  switch (tag()) {
    case DX:
      return "dx" + std::to_string(index());
    case OMEGA:
      return "omega" + std::to_string(index()) + "_[" + digits + "]";
    case DYTOP:
      return "dy" + std::to_string(index()) + "_[" + digits + "]";
  }
  return "?";
}

DiffForm DiffForm::function(const FieldPoly& f, const JetContext& ctx) {
  DiffForm a(ctx, 0);
  a.addTerm({}, f);
  return a;
}

DiffForm DiffForm::covector(Covector c, const JetContext& ctx) {
  DiffForm a(ctx, 1);
  a.addTerm({c}, ctx.constant(1));
  return a;
}

void DiffForm::addTerm(Basis raw, const FieldPoly& c) {
  if (c.isZero()) return;
  if (static_cast<int>(raw.size()) != degree_) throw PreconditionError("term degree differs from form degree");
  for (const auto& e : raw) {
    bool ok = true;
    if (e.tag() == Covector::DX) ok = e.index() <= ctx_.n;
    if (e.tag() == Covector::OMEGA) ok = e.index() <= ctx_.m && e.order() <= ctx_.s - 1;
    if (e.tag() == Covector::DYTOP) ok = e.index() <= ctx_.m && e.order() == ctx_.s;
    if (!ok) throw PreconditionError("covector " + e.name() + " not in the chart basis");
  }
  int sign = sortSign(raw);
  if (sign == 0) return;
  auto it = terms_.find(raw);
  if (it == terms_.end()) {
    terms_.emplace(std::move(raw), sign > 0 ? c : -c);
    return;
  }
  if (sign > 0)
    it->second += c;
  else
    it->second -= c;
  if (it->second.isZero()) terms_.erase(it);
}

FieldPoly DiffForm::coefficient(Basis raw) const {
  int sign = sortSign(raw);
  if (sign == 0) return ctx_.zero();
  auto it = terms_.find(raw);
  if (it == terms_.end()) return ctx_.zero();
  return sign > 0 ? it->second : -it->second;
}

void DiffForm::checkContext(const DiffForm& o) const {
  if (!sameChart(ctx_, o.ctx_)) throw PreconditionError("forms from different charts");
}

DiffForm& DiffForm::operator+=(const DiffForm& o) {
  checkContext(o);
  if (o.isZero()) return *this;
  if (isZero()) degree_ = o.degree_;
  if (degree_ != o.degree_) throw PreconditionError("adding forms of different degree");
  for (const auto& [b, c] : o.terms_) addTerm(b, c);
  return *this;
}

DiffForm& DiffForm::operator-=(const DiffForm& o) {
  checkContext(o);
  if (o.isZero()) return *this;
  if (isZero()) degree_ = o.degree_;
  if (degree_ != o.degree_) throw PreconditionError("subtracting forms of different degree");
  for (const auto& [b, c] : o.terms_) addTerm(b, -c);
  return *this;
}

DiffForm DiffForm::operator*(const FieldPoly& f) const {
  DiffForm out(ctx_, degree_);
  for (const auto& [b, c] : terms_) out.addTerm(b, c * f);
  return out;
}

std::string DiffForm::str(bool mech) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [b, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str(mech) + ")";
    for (std::size_t p = 0; p < b.size(); ++p) s += (p == 0 ? " * " : "^") + b[p].name();
  }
  return s;
}

DiffForm wedge(const DiffForm& a, const DiffForm& b) {
  if (!sameChart(a.context(), b.context())) throw PreconditionError("wedge: forms from different charts");
  DiffForm out(a.context(), a.degree() + b.degree());
  for (const auto& [ba, ca] : a.terms())
    for (const auto& [bb, cb] : b.terms()) {
      Basis raw = ba;
      raw.insert(raw.end(), bb.begin(), bb.end());
      out.addTerm(std::move(raw), ca * cb);
    }
  return out;
}

namespace {

// df as (covector, coefficient) pairs in the contact basis
std::vector<std::pair<Covector, FieldPoly>> differential(const FieldPoly& f, const JetContext& ctx) {
  std::map<Covector, FieldPoly> acc;
  auto bump = [&](Covector c, const FieldPoly& v) {
    if (v.isZero()) return;
    auto it = acc.find(c);
    if (it == acc.end())
      acc.emplace(c, v);
    else
      it->second += v;
  };
  for (Var v : f.variables()) {
    FieldPoly dv = partialRaw(f, v);
    if (v.kind() == Var::X) {
      bump(Covector::dx(v.index()), dv);
      continue;
    }
    const int o = v.order();
    MultiIndex J = v.multiIndex(ctx.n);
    if (o > ctx.s) throw OrderCapError("coefficient of order " + std::to_string(o) + " above chart order s");
    if (o == ctx.s) {
      bump(Covector::dyTop(v.index(), J), dv);
      continue;
    }
    bump(Covector::omega(v.index(), J), dv);
    for (int i = 1; i <= ctx.n; ++i) bump(Covector::dx(i), dv * ctx.y(v.index(), addOne(J, i)));
  }
  std::vector<std::pair<Covector, FieldPoly>> out;
  for (auto& [c, v] : acc)
    if (!v.isZero()) out.emplace_back(c, v);
  return out;
}

}  // namespace

DiffForm exteriorDerivative(const DiffForm& a) {
  const JetContext& ctx = a.context();
  DiffForm out(ctx, a.degree() + 1);
  for (const auto& [b, c] : a.terms()) {
    for (const auto& [cov, dc] : differential(c, ctx)) {
      Basis raw{cov};
      raw.insert(raw.end(), b.begin(), b.end());
      out.addTerm(std::move(raw), dc);
    }
    for (std::size_t p = 0; p < b.size(); ++p) {
      if (b[p].tag() != Covector::OMEGA) continue;
      const int sigma = b[p].index();
      MultiIndex J = b[p].multiIndex(ctx.n);
      FieldPoly coef = (p % 2) ? c : -c;
      for (int i = 1; i <= ctx.n; ++i) {
        MultiIndex Ji = addOne(J, i);
        Covector head = J.length() <= ctx.s - 2 ? Covector::omega(sigma, Ji) : Covector::dyTop(sigma, Ji);
        Basis raw;
        for (std::size_t q = 0; q < b.size(); ++q) {
          if (q == p) {
            raw.push_back(head);
            raw.push_back(Covector::dx(i));
          } else {
            raw.push_back(b[q]);
          }
        }
        out.addTerm(std::move(raw), coef);
      }
    }
  }
  return out;
}

std::map<int, DiffForm> contactDegreeSplit(const DiffForm& a) {
  std::map<int, DiffForm> out;
  for (const auto& [b, c] : a.terms()) {
    int k = 0;
    for (const auto& e : b)
      if (e.tag() != Covector::DX) ++k;
    auto it = out.find(k);
    if (it == out.end()) it = out.emplace(k, DiffForm(a.context(), a.degree())).first;
    it->second.addTerm(b, c);
  }
  return out;
}

DiffForm sectionPullback(const DiffForm& a, const std::vector<FieldPoly>& g) {
  const JetContext& ctx = a.context();
  if (static_cast<int>(g.size()) != ctx.m) throw PreconditionError("section needs one polynomial per fiber index");
  for (const auto& gs : g)
    for (Var v : gs.variables())
      if (v.kind() != Var::X) throw PreconditionError("section components must depend on x only");
  std::map<std::pair<int, MultiIndex>, FieldPoly> jets;
  auto jet = [&](int sigma, const MultiIndex& J) -> FieldPoly {
    auto key = std::make_pair(sigma, J);
    auto it = jets.find(key);
    if (it != jets.end()) return it->second;
    FieldPoly d = g[sigma - 1];
    for (int j : J.entries()) d = partialRaw(d, Var::x(j));
    VariableFamily fam = ctx.family();
    fam.maxOrder = std::max(fam.maxOrder, J.length());
    d = d + FieldPoly(fam);
    jets.emplace(key, d);
    return d;
  };
  auto pullCoef = [&](const FieldPoly& f) {
    std::map<Var, FieldPoly> bind;
    for (Var v : f.variables())
      if (v.kind() == Var::Y) bind.emplace(v, jet(v.index(), v.multiIndex(ctx.n)));
    return substitute(f, bind);
  };
  auto image = [&](const Covector& e) {
    DiffForm img(ctx, 1);
    if (e.tag() == Covector::DX) {
      img.addTerm({e}, ctx.constant(1));
      return img;
    }
    MultiIndex J = e.multiIndex(ctx.n);
    for (int i = 1; i <= ctx.n; ++i) {
      // dy_J -> d_{Ji} g dx^i
      img.addTerm({Covector::dx(i)}, jet(e.index(), addOne(J, i)));
      if (e.tag() == Covector::OMEGA)
        img.addTerm({Covector::dx(i)}, -pullCoef(ctx.y(e.index(), addOne(J, i))));
    }
    return img;
  };
  DiffForm out(ctx, a.degree());
  for (const auto& [b, c] : a.terms()) {
    DiffForm t = DiffForm::function(pullCoef(c), ctx);
    for (const auto& e : b) t = wedge(t, image(e));
    out += t;
  }
  return out;
}

DiffForm ensembleToForm(const TensorEnsemble& T) {
  JetContext ctx = T.context();
  DiffForm out(ctx, T.q());
  auto emit = [&](const TensorKey& key, const FieldPoly& val) {
    Basis raw;
    Rational mult = factorial(static_cast<int>(key.fermionic.size()));
    int bosons = 0;
    for (int p = 0; p < key.k(); ++p) {
      const auto& pr = key.pairs[p];
      mult *= static_cast<unsigned long>(orderedTupleCount(pr.I));
      if (key.top && p == 0) {
        raw.push_back(Covector::dyTop(pr.sigma, pr.I));
      } else {
        raw.push_back(Covector::omega(pr.sigma, pr.I));
        ++bosons;
      }
    }
    mult *= factorial(bosons);
    for (int i : key.fermionic) raw.push_back(Covector::dx(i));
    out.addTerm(std::move(raw), val * mult);
  };
  for (const auto& [k, v] : T.components()) emit(k, v);
  for (const auto& [k, v] : T.topComponents()) emit(k, v);
  return out;
}

TensorEnsemble formToEnsemble(const DiffForm& a) {
  const JetContext& ctx = a.context();
  TensorEnsemble out(ctx, a.degree());
  for (const auto& [b, c] : a.terms()) {
    TensorKey key;
    std::vector<SlotPair> omegas;
    int tops = 0;
    for (const auto& e : b) {
      if (e.tag() == Covector::DX) {
        key.fermionic.push_back(e.index());
      } else if (e.tag() == Covector::OMEGA) {
        omegas.push_back({e.multiIndex(ctx.n), e.index()});
      } else {
        ++tops;
        key.top = true;
        key.pairs.insert(key.pairs.begin(), SlotPair{e.multiIndex(ctx.n), e.index()});
      }
    }
    if (tops > 1) throw PreconditionError("form term with two dy-slots has no tensor counterpart");
    std::sort(omegas.begin(), omegas.end());
    key.pairs.insert(key.pairs.end(), omegas.begin(), omegas.end());
    // sign taking the tensor-ordered wedge to the stored basis order
    Basis ordered;
    Rational mult = factorial(static_cast<int>(key.fermionic.size())) * factorial(static_cast<int>(omegas.size()));
    for (int p = 0; p < key.k(); ++p) {
      const auto& pr = key.pairs[p];
      ordered.push_back(key.top && p == 0 ? Covector::dyTop(pr.sigma, pr.I) : Covector::omega(pr.sigma, pr.I));
      mult *= static_cast<unsigned long>(orderedTupleCount(pr.I));
    }
    for (int i : key.fermionic) ordered.push_back(Covector::dx(i));
    int sign = sortSign(ordered);
    FieldPoly v = c * (1 / mult);
    out.add(std::move(key), sign > 0 ? v : -v);
  }
  return out;
}

DiffForm pcPrincipal(const FieldPoly& L, const JetContext& ctx) {
  if (L.order() > ctx.r) throw PreconditionError("Lagrangian exceeds order r");
  const int n = ctx.n;
  TensorEnsemble theta(ctx, n);
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i + 1;
  theta.add({{}, all, false}, L);
  for (const auto& I1 : multiIndicesUpTo(n, ctx.r - 1))
    for (int sigma = 1; sigma <= ctx.m; ++sigma)
      for (int skip = 1; skip <= n; ++skip) {
        // fermions i_2..i_n: the n-1 indices other than `skip`
        std::vector<int> rest;
        for (int i = 1; i <= n; ++i)
          if (i != skip) rest.push_back(i);
        std::vector<int> eps{skip};
        eps.insert(eps.end(), rest.begin(), rest.end());
        const int e = leviCivita(eps);
        FieldPoly acc = ctx.zero();
        for (const auto& J : multiIndicesUpTo(n, ctx.r - 1 - I1.length())) {
          FieldPoly g = weightedPartial(L, sigma, addOne(concat(I1, J), skip));
          if (g.isZero()) continue;
          g = totalDerivativeMulti(g, J, ctx.cap);
          Rational c = static_cast<unsigned long>(orderedTupleCount(J));
          if (J.length() % 2) c = -c;
          acc += g * c;
        }
        theta.add({{{I1, sigma}}, rest, false}, acc * Rational(n * e));
      }
  return ensembleToForm(theta);
}

DiffForm lagrangeSouriau(const DiffForm& theta) { return exteriorDerivative(theta); }

DiffForm pcFirstOrder(const FieldPoly& L, const JetContext& ctx) {
  if (ctx.s != 2) throw PreconditionError("first-order Poincare-Cartan form needs s = 2");
  if (L.order() > 1) throw PreconditionError("Lagrangian depends on second-order variables");
  const int n = ctx.n;
  TensorEnsemble theta(ctx, n);
  for (const auto& key : allKeys(n, ctx.m, n, 0)) {
    const int k = key.k();
    Rational pref = binomial(n, k) / factorial(k);
    FieldPoly acc = ctx.zero();
    for (const auto& head : allTuples(n, k)) {
      std::vector<int> eps = head;
      eps.insert(eps.end(), key.fermionic.begin(), key.fermionic.end());
      const int e = leviCivita(eps);
      if (e == 0) continue;
      FieldPoly g = L;
      for (int p = 0; p < k && !g.isZero(); ++p)
        g = weightedPartial(g, key.pairs[p].sigma, MultiIndex(n, {head[p]}));
      acc += g * Rational(e);
    }
    theta.add(key, acc * pref);
  }
  return ensembleToForm(theta);
}

DiffForm pcMechanics(const FieldPoly& L, const JetContext& ctx) {
  if (ctx.n != 1) throw PreconditionError("mechanics form needs n = 1");
  if (L.order() > ctx.r) throw PreconditionError("Lagrangian exceeds order r");
  auto q = [](int k) { return MultiIndex(1, std::vector<int>(k, 1)); };
  if (ctx.s == 2 * ctx.r - 1)
    for (int sigma = 1; sigma <= ctx.m; ++sigma)
      if (L.degreeIn(Var::y(sigma, q(ctx.r))) > 1)
        throw PreconditionError("for odd s the Lagrangian must be at most linear in the top velocities");
  DiffForm theta(ctx, 1);
  theta.addTerm({Covector::dx(1)}, L);
  for (int j = 0; j <= ctx.r - 1; ++j)
    for (int sigma = 1; sigma <= ctx.m; ++sigma) {
      FieldPoly Lj = ctx.zero();
      for (int i = 0; i <= ctx.r - 1 - j; ++i) {
        FieldPoly g = partialRaw(L, Var::y(sigma, q(i + j + 1)));
        for (int t = 0; t < i; ++t) g = totalDerivative(g, 1, ctx.cap);
        if (i % 2)
          Lj -= g;
        else
          Lj += g;
      }
      theta.addTerm({Covector::omega(sigma, q(j))}, Lj);
    }
  return theta;
}

}  // namespace jetvar
