#pragma once

#include <gmpxx.h>

#include "ttab/error.hpp"

namespace ttab {

// All counts and limits are exact; no floating point on authoritative paths.
using ExactInt = mpz_class;
using ExactRat = mpq_class;

ExactInt factorial(long n);
ExactInt binomial(long n, long k);  // 0 outside 0 <= k <= n

// mpq_class(a, b) does not canonicalize on its own.
ExactRat make_rat(const ExactInt& num, const ExactInt& den);

bool is_integer(const ExactRat& r);
// Raises NonIntegerResult when r is not a nonnegative integer.
ExactInt to_count(const ExactRat& r);

}  // namespace ttab
