#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace jetvar {

using Rational = mpq_class;

std::string toString(const Rational& q);
Rational parseRational(const std::string& s);

// canonical num/den
Rational ratio(long num, long den);

Rational factorial(int k);
Rational binomial(int n, int k);

}  // namespace jetvar
