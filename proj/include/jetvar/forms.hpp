#pragma once

#include <map>
#include <string>
#include <vector>

#include "jetvar/jetcalc.hpp"
#include "jetvar/tensors.hpp"

namespace jetvar {

// dx^i < omega^sigma_J (|J| <= s-1) < dy^sigma_I (|I| = s), packed like Var.
class Covector {
 public:
  enum Tag : std::uint64_t { DX = 0, OMEGA = 1, DYTOP = 2 };

  Covector() = default;
  static Covector dx(int i);
  static Covector omega(int sigma, const MultiIndex& J);
  static Covector dyTop(int sigma, const MultiIndex& I);

  Tag tag() const { return static_cast<Tag>(key_ >> 62); }
  int index() const { return static_cast<int>((key_ >> 54) & 0xff); }
  int order() const { return static_cast<int>((key_ >> 48) & 0x3f); }
  MultiIndex multiIndex(int n) const;
  std::string name() const;

  auto operator<=>(const Covector&) const = default;

 private:
  std::uint64_t key_ = 0;
};

using Basis = std::vector<Covector>;

class DiffForm {
 public:
  DiffForm() = default;
  DiffForm(const JetContext& ctx, int degree) : ctx_(ctx), degree_(degree) {}
  static DiffForm function(const FieldPoly& f, const JetContext& ctx);
  static DiffForm covector(Covector c, const JetContext& ctx);

  const JetContext& context() const { return ctx_; }
  int degree() const { return degree_; }
  const std::map<Basis, FieldPoly>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }

  // accumulate c * e_1 ^ ... ^ e_k given in any order
  void addTerm(Basis raw, const FieldPoly& c);
  FieldPoly coefficient(Basis raw) const;

  DiffForm& operator+=(const DiffForm& o);
  DiffForm& operator-=(const DiffForm& o);
  friend DiffForm operator+(DiffForm a, const DiffForm& b) { return a += b; }
  friend DiffForm operator-(DiffForm a, const DiffForm& b) { return a -= b; }
  DiffForm operator*(const FieldPoly& f) const;
  bool operator==(const DiffForm& o) const { return degree_ == o.degree_ && terms_ == o.terms_; }

  std::string str(bool mech = false) const;

 private:
  void checkContext(const DiffForm& o) const;
  JetContext ctx_;
  int degree_ = 0;
  std::map<Basis, FieldPoly> terms_;
};

DiffForm wedge(const DiffForm& a, const DiffForm& b);
DiffForm exteriorDerivative(const DiffForm& a);
std::map<int, DiffForm> contactDegreeSplit(const DiffForm& a);
DiffForm sectionPullback(const DiffForm& a, const std::vector<FieldPoly>& g);

// sum over all orderings of the tensor keys: omegas first, then dx's
DiffForm ensembleToForm(const TensorEnsemble& T);
TensorEnsemble formToEnsemble(const DiffForm& a);

DiffForm pcPrincipal(const FieldPoly& L, const JetContext& ctx);
DiffForm lagrangeSouriau(const DiffForm& theta);
DiffForm pcFirstOrder(const FieldPoly& L, const JetContext& ctx);
DiffForm pcMechanics(const FieldPoly& L, const JetContext& ctx);

}  // namespace jetvar
