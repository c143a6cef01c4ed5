#include "jetvar/liegroup.hpp"

#include <algorithm>

#include "jetvar/errors.hpp"

namespace jetvar {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Matrix invertMatrix(Matrix a) {
  const std::size_t n = a.size();
  Matrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw PreconditionError("singular first-order block");
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    Rational d = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= d;
      inv[c][j] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

Rational determinant(Matrix a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

void putCoord(std::map<JetCoord, Rational>& coords, int i, const MultiIndex& J, const Rational& v) {
  auto key = std::make_pair(i, J);
  if (v == 0)
    coords.erase(key);
  else
    coords[key] = v;
}

Rational getCoord(const std::map<JetCoord, Rational>& coords, int i, const MultiIndex& J) {
  auto it = coords.find(std::make_pair(i, J));
  return it == coords.end() ? Rational(0) : it->second;
}

// sum over set partitions of the positions of I of
// prod_t inner(j_t, I_t) * outer(j_1..j_p)
template <class Inner, class Outer>
Rational partitionSum(const MultiIndex& I, int n, Inner inner, Outer outer) {
  Rational total = 0;
  for (const auto& part : setPartitions(I.length())) {
    const int p = static_cast<int>(part.size());
    std::vector<std::vector<Rational>> blockVals(p, std::vector<Rational>(n));
    bool allZero = false;
    for (int t = 0; t < p; ++t) {
      std::vector<int> sub;
      for (int pos : part[t]) sub.push_back(I[pos]);
      MultiIndex It(n, sub);
      bool any = false;
      for (int j = 1; j <= n; ++j) {
        blockVals[t][j - 1] = inner(j, It);
        any = any || blockVals[t][j - 1] != 0;
      }
      if (!any) allZero = true;
    }
    if (allZero) continue;
    for (const auto& js : allTuples(n, p)) {
      Rational prod = 1;
      for (int t = 0; t < p && prod != 0; ++t) prod *= blockVals[t][js[t] - 1];
      if (prod == 0) continue;
      total += prod * outer(MultiIndex(n, js));
    }
  }
  return total;
}

}  // namespace

GroupElement::GroupElement(int r, int n) : r_(r), n_(n) {
  if (r < 1 || n < 1) throw PreconditionError("group element needs r, n >= 1");
}

Rational GroupElement::get(int i, const MultiIndex& J) const { return getCoord(coords_, i, J); }

void GroupElement::set(int i, const MultiIndex& J, const Rational& v) {
  if (i < 1 || i > n_ || J.length() < 1 || J.length() > r_ || J.n() != n_)
    throw PreconditionError("group coordinate out of range");
  putCoord(coords_, i, J, v);
}

Rational GroupElement::det1() const {
  Matrix a(n_, std::vector<Rational>(n_));
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) a[i - 1][j - 1] = get(i, MultiIndex(n_, {j}));
  return determinant(a);
}

Velocity::Velocity(int r, int n, int N) : r_(r), n_(n), N_(N) {
  if (r < 1 || n < 1 || N < 0) throw PreconditionError("velocity needs r, n >= 1");
}

Rational Velocity::get(int A, const MultiIndex& J) const { return getCoord(coords_, A, J); }

void Velocity::set(int A, const MultiIndex& J, const Rational& v) {
  if (A < 1 || A > N_ || J.length() > r_ || J.n() != n_) throw PreconditionError("velocity coordinate out of range");
  putCoord(coords_, A, J, v);
}

GroupElement compose(const GroupElement& a, const GroupElement& b) {
  if (a.r() != b.r() || a.n() != b.n()) throw PreconditionError("compose: order or dimension mismatch");
  const int n = a.n();
  GroupElement out(a.r(), n);
  for (const auto& I : multiIndicesUpTo(n, a.r())) {
    if (I.empty()) continue;
    for (int k = 1; k <= n; ++k) {
      Rational v = partitionSum(
          I, n, [&](int j, const MultiIndex& It) { return b.get(j, It); },
          [&](const MultiIndex& js) { return a.get(k, js); });
      out.set(k, I, v);
    }
  }
  return out;
}

GroupElement identityElement(int r, int n) {
  GroupElement e(r, n);
  for (int i = 1; i <= n; ++i) e.set(i, MultiIndex(n, {i}), 1);
  return e;
}

GroupElement inverse(const GroupElement& a) {
  const int n = a.n();
  Matrix A(n, std::vector<Rational>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) A[i - 1][j - 1] = a.get(i, MultiIndex(n, {j}));
  Matrix Ainv = invertMatrix(A);
  GroupElement z(a.r(), n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) z.set(i, MultiIndex(n, {j}), Ainv[i - 1][j - 1]);
  for (int ord = 2; ord <= a.r(); ++ord) {
    GroupElement rest = compose(a, z);  // order-ord entries of z are still zero
    for (const auto& I : multiIndicesOfLength(n, ord))
      for (int j = 1; j <= n; ++j) {
        Rational v = 0;
        for (int k = 1; k <= n; ++k) v -= Ainv[j - 1][k - 1] * rest.get(k, I);
        z.set(j, I, v);
      }
  }
  return z;
}

Velocity act(const Velocity& x, const GroupElement& a) {
  if (x.r() != a.r() || x.n() != a.n()) throw PreconditionError("act: order or dimension mismatch");
  const int n = x.n();
  Velocity out(x.r(), n, x.N());
  for (int A = 1; A <= x.N(); ++A) {
    out.set(A, MultiIndex(n), x.get(A, MultiIndex(n)));
    for (const auto& I : multiIndicesUpTo(n, x.r())) {
      if (I.empty()) continue;
      Rational v = partitionSum(
          I, n, [&](int j, const MultiIndex& It) { return a.get(j, It); },
          [&](const MultiIndex& js) { return x.get(A, js); });
      out.set(A, I, v);
    }
  }
  return out;
}

namespace {

void checkSelection(const Velocity& x, const std::vector<int>& sel) {
  if (static_cast<int>(sel.size()) != x.n()) throw PreconditionError("selection must list n coordinates");
  std::vector<int> s = sel;
  std::sort(s.begin(), s.end());
  for (std::size_t p = 0; p < s.size(); ++p)
    if (s[p] < 1 || s[p] > x.N() || (p > 0 && s[p] == s[p - 1]))
      throw PreconditionError("selection must be distinct indices in 1..N");
}

}  // namespace

bool isRegular(const Velocity& x, const std::vector<int>& selection) {
  checkSelection(x, selection);
  const int n = x.n();
  Matrix a(n, std::vector<Rational>(n));
  for (int k = 0; k < n; ++k)
    for (int j = 1; j <= n; ++j) a[k][j - 1] = x.get(selection[k], MultiIndex(n, {j}));
  return determinant(a) != 0;
}

GroupElement selectedBlock(const Velocity& x, const std::vector<int>& selection) {
  checkSelection(x, selection);
  GroupElement g(x.r(), x.n());
  for (int k = 0; k < x.n(); ++k)
    for (const auto& J : multiIndicesUpTo(x.n(), x.r()))
      if (!J.empty()) g.set(k + 1, J, x.get(selection[k], J));
  return g;
}

Velocity invariants(const Velocity& x, const std::vector<int>& selection) {
  if (!isRegular(x, selection)) throw PreconditionError("velocity is not regular for this selection");
  const int n = x.n();
  GroupElement X = selectedBlock(x, selection);
  std::vector<int> others;
  for (int A = 1; A <= x.N(); ++A)
    if (std::find(selection.begin(), selection.end(), A) == selection.end()) others.push_back(A);
  Matrix Xm(n, std::vector<Rational>(n));
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n; ++i) Xm[j - 1][i - 1] = X.get(j, MultiIndex(n, {i}));
  Matrix Z = invertMatrix(Xm);
  Velocity y(x.r(), n, static_cast<int>(others.size()));
  for (std::size_t s = 0; s < others.size(); ++s) y.set(static_cast<int>(s) + 1, MultiIndex(n), x.get(others[s], MultiIndex(n)));
  for (int ord = 1; ord <= x.r(); ++ord) {
    Velocity partial = act(y, X);  // order-ord entries of y are still zero
    for (std::size_t s = 0; s < others.size(); ++s) {
      const int sigma = static_cast<int>(s) + 1;
      auto R = [&](const std::vector<int>& tup) -> Rational {
        MultiIndex I(n, tup);
        return x.get(others[s], I) - partial.get(sigma, I);
      };
      for (const auto& Jp : multiIndicesOfLength(n, ord)) {
        Rational v = 0;
        for (const auto& is : allTuples(n, ord)) {
          Rational w = 1;
          for (int t = 0; t < ord && w != 0; ++t) w *= Z[is[t] - 1][Jp[t] - 1];
          if (w != 0) v += w * R(is);
        }
        y.set(sigma, Jp, v);
      }
    }
  }
  return y;
}

FieldPoly formalDerivative(const FieldPoly& f, int i, int r) {
  const VariableFamily& fam = f.family();
  if (fam.kind != FamilyKind::Velocity) throw FamilyMismatch("formal derivative needs a velocity-chart polynomial");
  if (i < 1 || i > fam.n) throw PreconditionError("formal derivative index out of range");
  if (f.order() > r - 1) throw OrderCapError("formal derivative exceeds order cap r");
  VariableFamily outFam = fam;
  outFam.maxOrder = std::max(fam.maxOrder, r);
  FieldPoly out(outFam);
  for (Var v : f.variables()) {
    FieldPoly d = partialRaw(f, v);
    out += d * FieldPoly::variable(outFam, Var::v(v.index(), addOne(v.multiIndex(fam.n), i)));
  }
  return out;
}

std::map<JetCoord, FieldPoly> chartProlong(const std::vector<FieldPoly>& F, int n, int r) {
  const int N = static_cast<int>(F.size());
  std::map<JetCoord, FieldPoly> out;
  VariableFamily fam = VariableFamily::velocity(n, N, r);
  for (int A = 1; A <= N; ++A) {
    if (!F[A - 1].family().compatible(fam)) throw FamilyMismatch("chart map must be a velocity-chart polynomial");
    if (F[A - 1].order() > 0) throw PreconditionError("chart map may only depend on x^A");
    out.emplace(std::make_pair(A, MultiIndex(n)), F[A - 1] + FieldPoly(fam));
  }
  for (int ord = 1; ord <= r; ++ord)
    for (const auto& I : multiIndicesOfLength(n, ord)) {
      int last = I[ord - 1];
      MultiIndex prev = removeOne(I, last);
      for (int A = 1; A <= N; ++A)
        out.emplace(std::make_pair(A, I), formalDerivative(out.at({A, prev}), last, r));
    }
  return out;
}

}  // namespace jetvar
