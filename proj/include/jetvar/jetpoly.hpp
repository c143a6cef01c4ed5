#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jetvar/mindex.hpp"
#include "jetvar/rational.hpp"

namespace jetvar {

enum class FamilyKind { Grassmann, Velocity };

struct VariableFamily {
  FamilyKind kind = FamilyKind::Grassmann;
  int n = 1;
  int m = 1;  // fiber count m, or N for velocity charts
  int maxOrder = 0;

  static VariableFamily grassmann(int n, int m, int maxOrder) { return {FamilyKind::Grassmann, n, m, maxOrder}; }
  static VariableFamily velocity(int n, int N, int maxOrder) { return {FamilyKind::Velocity, n, N, maxOrder}; }

  // maxOrder is a bound for admitted variables, not part of identity
  bool compatible(const VariableFamily& o) const { return kind == o.kind && n == o.n && m == o.m; }
};

// A jet variable packed into a sortable 64-bit key:
// kind | index | |J| | J digits (4 bits each).
class Var {
 public:
  enum Kind : std::uint64_t { X = 0, Y = 1, V = 2 };

  static constexpr int kMaxLen = 10;
  static constexpr int kMaxDim = 15;

  Var() = default;
  static Var x(int i);
  static Var y(int sigma, const MultiIndex& J);
  static Var v(int A, const MultiIndex& J);

  Kind kind() const { return static_cast<Kind>(key_ >> 62); }
  int index() const { return static_cast<int>((key_ >> 54) & 0xff); }
  int order() const { return static_cast<int>((key_ >> 48) & 0x3f); }
  int digit(int p) const { return static_cast<int>((key_ >> (44 - 4 * p)) & 0xf); }
  MultiIndex multiIndex(int n) const;
  std::uint64_t key() const { return key_; }

  std::string name(bool mech = false) const;

  auto operator<=>(const Var&) const = default;

 private:
  static Var make(Kind k, int index, const MultiIndex& J);
  std::uint64_t key_ = 0;
};

struct Monomial {
  std::vector<std::pair<Var, unsigned>> factors;  // ascending by Var
  unsigned degree = 0;

  bool operator==(const Monomial& o) const { return factors == o.factors; }
  unsigned exponent(Var v) const;
};

// Printing order: higher degree first, then by the largest variables.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class FieldPoly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  FieldPoly() = default;
  explicit FieldPoly(const VariableFamily& fam) : fam_(fam) {}
  FieldPoly(const VariableFamily& fam, const Rational& c);
  static FieldPoly variable(const VariableFamily& fam, Var v);

  const VariableFamily& family() const { return fam_; }
  const TermMap& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  bool isConstant() const;
  Rational constantTerm() const;
  std::size_t size() const { return terms_.size(); }

  // max |J| over y (or velocity) variables present; -1 when none
  int order() const;
  unsigned totalDegree() const;
  unsigned degreeIn(Var v) const;
  std::vector<Var> variables() const;

  void addTerm(const Monomial& mono, const Rational& c);

  FieldPoly& operator+=(const FieldPoly& o);
  FieldPoly& operator-=(const FieldPoly& o);
  FieldPoly& operator*=(const Rational& c);

  friend FieldPoly operator+(FieldPoly a, const FieldPoly& b) { return a += b; }
  friend FieldPoly operator-(FieldPoly a, const FieldPoly& b) { return a -= b; }
  friend FieldPoly operator*(const FieldPoly& a, const FieldPoly& b);
  friend FieldPoly operator*(FieldPoly a, const Rational& c) { return a *= c; }
  friend FieldPoly operator*(const Rational& c, FieldPoly a) { return a *= c; }
  FieldPoly operator-() const;

  bool operator==(const FieldPoly& o) const { return terms_ == o.terms_; }

  std::string str(bool mech = false) const;

 private:
  void checkFamily(const FieldPoly& o) const;
  VariableFamily fam_;
  TermMap terms_;
};

FieldPoly polyPow(const FieldPoly& a, unsigned k);
FieldPoly partialRaw(const FieldPoly& f, Var v);
FieldPoly substitute(const FieldPoly& f, const std::map<Var, FieldPoly>& bindings);

}  // namespace jetvar
