#pragma once

#include <map>

#include "ttab/qseries.hpp"

namespace ttab {

/// num(q) / prod_a (1 - q^a)^mult. Every generating function in scope has a
/// denominator of this form, which keeps (1-q)-valuations and q -> 1
/// residuals exact: each factor contributes valuation 1 and residual value a.
class QRationalFn {
 public:
  QRationalFn() : num_(1L) {}
  explicit QRationalFn(QPoly num) : num_(std::move(num)) {}

  QRationalFn& mul_num(const QPoly& p);
  QRationalFn& mul_den(int a, int mult = 1);
  QRationalFn operator*(const QRationalFn& o) const;

  const QPoly& num() const { return num_; }
  const std::map<int, int>& den() const { return den_; }

  QSeries expand(int M) const;
  ExactRat limit_at_one(int N) const;
  ExactInt count_from_gf(long cells) const;

  double eval_double(double q) const;

 private:
  QPoly num_;
  std::map<int, int> den_;
};

/// Gaussian binomial coefficient [a over b]_q; zero polynomial outside range.
QPoly qbinom(int a, int b);

QSeries expand(const QRationalFn& f, int M);
ExactRat limit_at_one(const QRationalFn& f, int N);
ExactInt count_from_gf(const QRationalFn& f, long cells);

}  // namespace ttab
