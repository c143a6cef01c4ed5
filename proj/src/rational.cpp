#include "jetvar/rational.hpp"

#include "jetvar/errors.hpp"

namespace jetvar {

std::string toString(const Rational& q) { return q.get_str(); }

Rational parseRational(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) throw PreconditionError("bad rational '" + s + "'");
  if (q.get_den() == 0) throw PreconditionError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

Rational ratio(long num, long den) {
  if (den == 0) throw PreconditionError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational factorial(int k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return Rational(f);
}

Rational binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

}  // namespace jetvar
