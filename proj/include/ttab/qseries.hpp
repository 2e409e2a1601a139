#pragma once

#include <string>
#include <vector>

#include "ttab/qpoly.hpp"

namespace ttab {

/// Power series in q truncated at a recorded order M (coefficients of
/// q^0..q^M are exact). Arithmetic between series takes the minimum order.
class QSeries {
 public:
  explicit QSeries(int order);
  static QSeries one(int order);
  static QSeries from_poly(const QPoly& p, int order);

  int order() const { return order_; }
  const ExactInt& coeff(int d) const;
  ExactInt& coeff_mut(int d) { return c_[d]; }

  QSeries operator+(const QSeries& o) const;
  QSeries operator-(const QSeries& o) const;
  QSeries operator*(const QSeries& o) const;

  QSeries& mul_poly(const QPoly& p);
  QSeries& mul_scalar(const ExactInt& s);
  /// *= 1/(1 - q^a), a >= 1.
  QSeries& mul_geometric(int a);
  /// += q^shift * other. Needs other.order() >= order() - shift.
  QSeries& add_shifted(const QSeries& other, int shift);
  QSeries& add_poly_shifted(const QPoly& p, int shift);

  /// Divide by q^k; the first k coefficients must vanish. Order drops by k.
  QSeries shifted_down(int k) const;
  QSeries truncated(int M) const;
  /// Division by a series with constant term +-1. Minimum order.
  QSeries divided_by(const QSeries& b) const;

  bool operator==(const QSeries&) const = default;
  std::string to_string() const;
  std::vector<std::string> coeff_strings() const;

 private:
  int order_;
  std::vector<ExactInt> c_;
};

inline constexpr int kDefaultSeriesOrder = 20;

}  // namespace ttab
