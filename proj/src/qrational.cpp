#include "ttab/qrational.hpp"

#include <cmath>

namespace ttab {

QRationalFn& QRationalFn::mul_num(const QPoly& p) {
  num_ = num_ * p;
  return *this;
}

QRationalFn& QRationalFn::mul_den(int a, int mult) {
  if (a < 1) raise(Errc::domain_error, "denominator factor needs a >= 1");
  if (mult < 0) raise(Errc::domain_error, "negative multiplicity");
  if (mult > 0) den_[a] += mult;
  return *this;
}

QRationalFn QRationalFn::operator*(const QRationalFn& o) const {
  QRationalFn r(num_ * o.num_);
  r.den_ = den_;
  for (auto [a, m] : o.den_) r.den_[a] += m;
  return r;
}

QSeries QRationalFn::expand(int M) const {
  QSeries s = QSeries::from_poly(num_, M);
  for (auto [a, mult] : den_) {
    for (int t = 0; t < mult; ++t) {
      if (a <= M) s.mul_geometric(a);
    }
  }
  return s;
}

ExactRat QRationalFn::limit_at_one(int N) const {
  if (N < 0) raise(Errc::domain_error, "limit order must be >= 0");
  if (num_.is_zero()) return ExactRat(0);
  int vden = 0;
  for (auto [a, mult] : den_) {
    (void)a;
    vden += mult;
  }
  QPoly residual;
  int vnum = num_.one_minus_q_valuation(&residual);
  if (vden - vnum != N) {
    raise(Errc::valuation_mismatch,
          "(1-q)-valuation is " + std::to_string(vden - vnum) + ", expected " + std::to_string(N));
  }
  ExactInt den_residual = 1;
  for (auto [a, mult] : den_) {
    for (int t = 0; t < mult; ++t) den_residual *= a;
  }
  return make_rat(residual.eval_one(), den_residual);
}

ExactInt QRationalFn::count_from_gf(long cells) const {
  ExactRat lim = limit_at_one(static_cast<int>(cells));
  return to_count(ExactRat(factorial(cells)) * lim);
}

double QRationalFn::eval_double(double q) const {
  double v = num_.eval_double(q);
  for (auto [a, mult] : den_) {
    double f = 1.0 - std::pow(q, a);
    for (int t = 0; t < mult; ++t) v /= f;
  }
  return v;
}

QPoly qbinom(int a, int b) {
  if (a < 0) raise(Errc::domain_error, "qbinom needs a >= 0");
  if (b < 0 || b > a) return QPoly();
  QPoly r(1L);
  for (int i = 1; i <= b; ++i) {
    r = (r * QPoly::one_minus_power(a - b + i)).divexact(QPoly::one_minus_power(i));
  }
  return r;
}

QSeries expand(const QRationalFn& f, int M) { return f.expand(M); }
ExactRat limit_at_one(const QRationalFn& f, int N) { return f.limit_at_one(N); }
ExactInt count_from_gf(const QRationalFn& f, long cells) { return f.count_from_gf(cells); }

}  // namespace ttab
