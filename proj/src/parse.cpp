#include "jetvar/parse.hpp"

#include <cctype>

#include "jetvar/errors.hpp"

namespace jetvar {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const VariableFamily& fam) : s_(text), fam_(fam) {}

  FieldPoly run() {
    FieldPoly p = expr();
    skip();
    if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    int line = 1;
    int col = 1;
    for (std::size_t p = 0; p < pos_ && p < s_.size(); ++p) {
      if (s_[p] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool digitAt() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }

  std::string nat() {
    skip();
    if (!digitAt()) fail("expected a natural number");
    std::string d;
    while (digitAt()) d += s_[pos_++];
    return d;
  }

  long smallNat(const std::string& d) {
    if (d.size() > 6) fail("number too large");
    return std::stol(d);
  }

  FieldPoly expr() {
    FieldPoly acc = term();
    while (true) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  FieldPoly term() {
    FieldPoly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  // unary minus binds looser than '^' so that -y^2 is -(y^2)
  FieldPoly factor() {
    skip();
    if (pos_ < s_.size() && s_[pos_] == '-') {
      ++pos_;
      return -factor();
    }
    FieldPoly a = atom();
    if (accept('^')) {
      long e = smallNat(nat());
      a = polyPow(a, static_cast<unsigned>(e));
    }
    return a;
  }

  FieldPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      FieldPoly e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = nat();
      if (accept('/')) {
        std::string den = nat();
        if (mpz_class(den) == 0) fail("zero denominator");
        Rational q{mpz_class(num), mpz_class(den)};
        q.canonicalize();
        return FieldPoly(fam_, q);
      }
      return FieldPoly(fam_, Rational(mpz_class(num)));
    }
    return variable();
  }

  MultiIndex bracketIndex() {
    expect('[');
    std::vector<int> e;
    while (digitAt()) {
      int d = s_[pos_] - '0';
      if (d < 1 || d > fam_.n) fail("index " + std::to_string(d) + " exceeds n=" + std::to_string(fam_.n));
      e.push_back(d);
      ++pos_;
    }
    if (!accept(']')) fail("expected ']'");
    if (static_cast<int>(e.size()) > fam_.maxOrder)
      fail("multi-index order " + std::to_string(e.size()) + " exceeds cap " + std::to_string(fam_.maxOrder));
    return MultiIndex(fam_.n, std::move(e));
  }

  int fiberIndex(const std::string& d) {
    long v = smallNat(d);
    if (v < 1 || v > fam_.m) fail("fiber index " + d + " exceeds " + std::to_string(fam_.m));
    return static_cast<int>(v);
  }

  FieldPoly variable() {
    std::size_t start = pos_;
    char c = s_[pos_++];
    if (fam_.kind == FamilyKind::Velocity) {
      if (c != 'x') {
        pos_ = start;
        fail("expected a velocity variable x<A>");
      }
      int A = fiberIndex(nat());
      MultiIndex J(fam_.n);
      if (pos_ < s_.size() && s_[pos_] == '_') {
        ++pos_;
        J = bracketIndex();
      }
      return FieldPoly::variable(fam_, Var::v(A, J));
    }
    if (c == 'x') {
      std::string d = nat();
      long i = smallNat(d);
      if (i < 1 || i > fam_.n) fail("base index " + d + " exceeds n=" + std::to_string(fam_.n));
      return FieldPoly::variable(fam_, Var::x(static_cast<int>(i)));
    }
    if (c == 't' && fam_.n == 1) return FieldPoly::variable(fam_, Var::x(1));
    if (c == 'y') {
      int sigma = fiberIndex(nat());
      MultiIndex J(fam_.n);
      if (pos_ < s_.size() && s_[pos_] == '_') {
        ++pos_;
        J = bracketIndex();
      }
      return FieldPoly::variable(fam_, Var::y(sigma, J));
    }
    if (c == 'q' && fam_.n == 1) {
      int sigma = fiberIndex(nat());
      long k = 0;
      if (pos_ < s_.size() && s_[pos_] == '_') {
        ++pos_;
        k = smallNat(nat());
      }
      if (k > fam_.maxOrder) fail("order " + std::to_string(k) + " exceeds cap " + std::to_string(fam_.maxOrder));
      return FieldPoly::variable(fam_, Var::y(sigma, MultiIndex(1, std::vector<int>(k, 1))));
    }
    pos_ = start;
    fail("unknown symbol '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  VariableFamily fam_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldPoly parsePoly(const std::string& text, const VariableFamily& fam) { return Parser(text, fam).run(); }

}  // namespace jetvar
