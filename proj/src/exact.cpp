#include "ttab/exact.hpp"

namespace ttab {

ExactInt factorial(long n) {
  if (n < 0) raise(Errc::domain_error, "factorial of negative argument");
  ExactInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

ExactInt binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  ExactInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

ExactRat make_rat(const ExactInt& num, const ExactInt& den) {
  if (den == 0) raise(Errc::domain_error, "zero denominator");
  ExactRat r(num, den);
  r.canonicalize();
  return r;
}

bool is_integer(const ExactRat& r) { return r.get_den() == 1; }

ExactInt to_count(const ExactRat& r) {
  if (!is_integer(r) || r < 0) {
    raise(Errc::non_integer_result, "expected a nonnegative integer, got " + r.get_str());
  }
  return r.get_num();
}

}  // namespace ttab
