#include "jetvar/jetpoly.hpp"

#include <algorithm>

#include "jetvar/errors.hpp"

namespace jetvar {

Var Var::make(Kind k, int index, const MultiIndex& J) {
  if (index < 1 || index > 255) throw PreconditionError("variable index out of range");
  if (J.length() > kMaxLen) throw OrderCapError("multi-index longer than " + std::to_string(kMaxLen));
  Var v;
  v.key_ = (static_cast<std::uint64_t>(k) << 62) | (static_cast<std::uint64_t>(index) << 54) |
           (static_cast<std::uint64_t>(J.length()) << 48);
  for (int p = 0; p < J.length(); ++p) {
    if (J[p] > kMaxDim) throw PreconditionError("base index above " + std::to_string(kMaxDim));
    v.key_ |= static_cast<std::uint64_t>(J[p]) << (44 - 4 * p);
  }
  return v;
}

Var Var::x(int i) { return make(X, i, MultiIndex()); }
Var Var::y(int sigma, const MultiIndex& J) { return make(Y, sigma, J); }
Var Var::v(int A, const MultiIndex& J) { return make(V, A, J); }

MultiIndex Var::multiIndex(int n) const {
  std::vector<int> e(order());
  for (int p = 0; p < order(); ++p) e[p] = digit(p);
  return MultiIndex(n, std::move(e));
}

std::string Var::name(bool mech) const {
  std::string digits;
  for (int p = 0; p < order(); ++p) digits += std::to_string(digit(p));
  switch (kind()) {
    case X:
      return mech && index() == 1 ? "t" : "x" + std::to_string(index());
    case Y: {
      if (mech && order() == 0) return "q" + std::to_string(index());
      if (mech && std::all_of(digits.begin(), digits.end(), [](char c) { return c == '1'; }))
        return "q" + std::to_string(index()) + "_" + std::to_string(order());
      std::string s = "y" + std::to_string(index());
      if (order() > 0) s += "_[" + digits + "]";
      return s;
    }
    case V: {
      std::string s = "x" + std::to_string(index());
      if (order() > 0) s += "_[" + digits + "]";
      return s;
    }
  }
  return "?";
}

unsigned Monomial::exponent(Var v) const {
  for (const auto& [w, e] : factors)
    if (w == v) return e;
  return 0;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree != b.degree) return a.degree > b.degree;
  auto ia = a.factors.rbegin();
  auto ib = b.factors.rbegin();
  for (; ia != a.factors.rend() && ib != b.factors.rend(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first > ib->first;
    if (ia->second != ib->second) return ia->second > ib->second;
  }
  return ia == a.factors.rend() ? false : true;
}

FieldPoly::FieldPoly(const VariableFamily& fam, const Rational& c) : fam_(fam) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

FieldPoly FieldPoly::variable(const VariableFamily& fam, Var v) {
  FieldPoly p(fam);
  Monomial mono;
  mono.factors.emplace_back(v, 1);
  mono.degree = 1;
  p.terms_.emplace(std::move(mono), Rational(1));
  return p;
}

bool FieldPoly::isConstant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree == 0); }

Rational FieldPoly::constantTerm() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

int FieldPoly::order() const {
  int o = -1;
  for (const auto& [mono, c] : terms_)
    for (const auto& [v, e] : mono.factors)
      if (v.kind() != Var::X) o = std::max(o, v.order());
  return o;
}

unsigned FieldPoly::totalDegree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree; }

unsigned FieldPoly::degreeIn(Var v) const {
  unsigned d = 0;
  for (const auto& [mono, c] : terms_) d = std::max(d, mono.exponent(v));
  return d;
}

std::vector<Var> FieldPoly::variables() const {
  std::vector<Var> out;
  for (const auto& [mono, c] : terms_)
    for (const auto& [v, e] : mono.factors) out.push_back(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void FieldPoly::addTerm(const Monomial& mono, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void FieldPoly::checkFamily(const FieldPoly& o) const {
  if (!fam_.compatible(o.fam_)) throw FamilyMismatch("polynomials from different variable families");
}

FieldPoly& FieldPoly::operator+=(const FieldPoly& o) {
  checkFamily(o);
  fam_.maxOrder = std::max(fam_.maxOrder, o.fam_.maxOrder);
  for (const auto& [mono, c] : o.terms_) addTerm(mono, c);
  return *this;
}

FieldPoly& FieldPoly::operator-=(const FieldPoly& o) {
  checkFamily(o);
  fam_.maxOrder = std::max(fam_.maxOrder, o.fam_.maxOrder);
  for (const auto& [mono, c] : o.terms_) addTerm(mono, -c);
  return *this;
}

FieldPoly& FieldPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, v] : terms_) v *= c;
  return *this;
}

FieldPoly FieldPoly::operator-() const {
  FieldPoly r = *this;
  for (auto& [mono, v] : r.terms_) v = -v;
  return r;
}

namespace {

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.degree = a.degree + b.degree;
  out.factors.reserve(a.factors.size() + b.factors.size());
  auto ia = a.factors.begin();
  auto ib = b.factors.begin();
  while (ia != a.factors.end() || ib != b.factors.end()) {
    if (ib == b.factors.end() || (ia != a.factors.end() && ia->first < ib->first)) {
      out.factors.push_back(*ia++);
    } else if (ia == a.factors.end() || ib->first < ia->first) {
      out.factors.push_back(*ib++);
    } else {
      out.factors.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace

FieldPoly operator*(const FieldPoly& a, const FieldPoly& b) {
  a.checkFamily(b);
  FieldPoly out(a.fam_);
  out.fam_.maxOrder = std::max(a.fam_.maxOrder, b.fam_.maxOrder);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.addTerm(multiply(ma, mb), ca * cb);
  return out;
}

std::string FieldPoly::str(bool mech) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string body;
    for (auto it = mono.factors.rbegin(); it != mono.factors.rend(); ++it) {
      if (!body.empty()) body += "*";
      body += it->first.name(mech);
      if (it->second > 1) body += "^" + std::to_string(it->second);
    }
    if (body.empty()) {
      s += toString(mag);
    } else {
      if (mag != 1) s += toString(mag) + "*";
      s += body;
    }
  }
  return s;
}

FieldPoly polyPow(const FieldPoly& a, unsigned k) {
  FieldPoly result(a.family(), Rational(1));
  FieldPoly base = a;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

namespace {

void checkRegistered(const VariableFamily& fam, Var v) {
  bool ok = false;
  switch (v.kind()) {
    case Var::X:
      ok = fam.kind == FamilyKind::Grassmann && v.index() <= fam.n;
      break;
    case Var::Y:
      ok = fam.kind == FamilyKind::Grassmann && v.index() <= fam.m;
      break;
    case Var::V:
      ok = fam.kind == FamilyKind::Velocity && v.index() <= fam.m;
      break;
  }
  for (int p = 0; ok && p < v.order(); ++p) ok = v.digit(p) <= fam.n;
  if (!ok) throw PreconditionError("variable " + v.name() + " not registered in family");
}

}  // namespace

FieldPoly partialRaw(const FieldPoly& f, Var v) {
  checkRegistered(f.family(), v);
  FieldPoly out(f.family());
  for (const auto& [mono, c] : f.terms()) {
    for (std::size_t p = 0; p < mono.factors.size(); ++p) {
      if (mono.factors[p].first != v) continue;
      unsigned e = mono.factors[p].second;
      Monomial m2 = mono;
      m2.degree -= 1;
      if (e == 1)
        m2.factors.erase(m2.factors.begin() + static_cast<long>(p));
      else
        m2.factors[p].second = e - 1;
      out.addTerm(m2, c * e);
      break;
    }
  }
  return out;
}

FieldPoly substitute(const FieldPoly& f, const std::map<Var, FieldPoly>& bindings) {
  VariableFamily fam = f.family();
  for (const auto& [v, g] : bindings) {
    if (!g.isConstant()) {
      fam = g.family();
      break;
    }
  }
  FieldPoly out(fam);
  std::map<std::pair<Var, unsigned>, FieldPoly> powers;
  for (const auto& [mono, c] : f.terms()) {
    FieldPoly term(fam, c);
    Monomial rest;
    for (const auto& [v, e] : mono.factors) {
      auto it = bindings.find(v);
      if (it == bindings.end()) {
        rest.factors.emplace_back(v, e);
        rest.degree += e;
        continue;
      }
      auto key = std::make_pair(v, e);
      auto pit = powers.find(key);
      if (pit == powers.end()) {
        FieldPoly g = it->second;
        if (g.isConstant()) g = FieldPoly(fam, g.constantTerm());
        pit = powers.emplace(key, polyPow(g, e)).first;
      }
      term = term * pit->second;
    }
    if (!rest.factors.empty()) {
      FieldPoly r(fam);
      r.addTerm(rest, Rational(1));
      term = term * r;
    }
    out += term;
  }
  return out;
}

}  // namespace jetvar
