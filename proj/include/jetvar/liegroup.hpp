#pragma once

#include <map>
#include <utility>
#include <vector>

#include "jetvar/jetpoly.hpp"
#include "jetvar/mindex.hpp"
#include "jetvar/rational.hpp"

namespace jetvar {

using JetCoord = std::pair<int, MultiIndex>;  // (upper index, lower multi-index)

// a^i_J, 1 <= |J| <= r
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(int r, int n);

  int r() const { return r_; }
  int n() const { return n_; }
  Rational get(int i, const MultiIndex& J) const;
  void set(int i, const MultiIndex& J, const Rational& v);
  const std::map<JetCoord, Rational>& coords() const { return coords_; }
  Rational det1() const;

  bool operator==(const GroupElement& o) const { return r_ == o.r_ && n_ == o.n_ && coords_ == o.coords_; }

 private:
  int r_ = 1, n_ = 1;
  std::map<JetCoord, Rational> coords_;  // zeros not stored
};

// x^A_J, 0 <= |J| <= r
class Velocity {
 public:
  Velocity() = default;
  Velocity(int r, int n, int N);

  int r() const { return r_; }
  int n() const { return n_; }
  int N() const { return N_; }
  Rational get(int A, const MultiIndex& J) const;
  void set(int A, const MultiIndex& J, const Rational& v);
  const std::map<JetCoord, Rational>& coords() const { return coords_; }

  bool operator==(const Velocity& o) const {
    return r_ == o.r_ && n_ == o.n_ && N_ == o.N_ && coords_ == o.coords_;
  }

 private:
  int r_ = 1, n_ = 1, N_ = 1;
  std::map<JetCoord, Rational> coords_;
};

GroupElement compose(const GroupElement& a, const GroupElement& b);
GroupElement identityElement(int r, int n);
GroupElement inverse(const GroupElement& a);
Velocity act(const Velocity& x, const GroupElement& a);

bool isRegular(const Velocity& x, const std::vector<int>& selection);
// Invariants y^sigma_I for the coordinates outside `selection`, numbered
// sigma = 1..N-n in increasing coordinate order.
Velocity invariants(const Velocity& x, const std::vector<int>& selection);
// the L^r_n element built from the selected rows of x
GroupElement selectedBlock(const Velocity& x, const std::vector<int>& selection);

// D_i = sum_{|J| <= r-1} x^A_{iJ} d/dx^A_J on a velocity-chart polynomial
FieldPoly formalDerivative(const FieldPoly& f, int i, int r);
// F^A_I for 0 <= |I| <= r, F given as N polynomials in x^1..x^N
std::map<JetCoord, FieldPoly> chartProlong(const std::vector<FieldPoly>& F, int n, int r);

}  // namespace jetvar
