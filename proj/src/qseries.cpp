#include "ttab/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace ttab {

QSeries::QSeries(int order) : order_(order) {
  if (order < 0) raise(Errc::domain_error, "series order must be >= 0");
  c_.assign(order + 1, ExactInt(0));
}

QSeries QSeries::one(int order) {
  QSeries s(order);
  s.c_[0] = 1;
  return s;
}

QSeries QSeries::from_poly(const QPoly& p, int order) {
  QSeries s(order);
  for (int d = 0; d <= std::min(order, p.degree()); ++d) s.c_[d] = p.coeff(d);
  return s;
}

const ExactInt& QSeries::coeff(int d) const {
  if (d < 0 || d > order_) raise(Errc::domain_error, "series coefficient out of range");
  return c_[d];
}

QSeries QSeries::operator+(const QSeries& o) const {
  QSeries r(std::min(order_, o.order_));
  for (int d = 0; d <= r.order_; ++d) r.c_[d] = c_[d] + o.c_[d];
  return r;
}

QSeries QSeries::operator-(const QSeries& o) const {
  QSeries r(std::min(order_, o.order_));
  for (int d = 0; d <= r.order_; ++d) r.c_[d] = c_[d] - o.c_[d];
  return r;
}

QSeries QSeries::operator*(const QSeries& o) const {
  QSeries r(std::min(order_, o.order_));
  for (int i = 0; i <= r.order_; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; i + j <= r.order_; ++j) {
      if (o.c_[j] == 0) continue;
      r.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  return r;
}

QSeries& QSeries::mul_poly(const QPoly& p) {
  std::vector<ExactInt> out(order_ + 1, ExactInt(0));
  for (int i = 0; i <= std::min(order_, p.degree()); ++i) {
    if (p.coeff(i) == 0) continue;
    for (int j = 0; i + j <= order_; ++j) {
      if (c_[j] == 0) continue;
      out[i + j] += p.coeff(i) * c_[j];
    }
  }
  c_ = std::move(out);
  return *this;
}

QSeries& QSeries::mul_scalar(const ExactInt& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

QSeries& QSeries::mul_geometric(int a) {
  if (a < 1) raise(Errc::domain_error, "geometric factor needs exponent >= 1");
  for (int d = a; d <= order_; ++d) c_[d] += c_[d - a];
  return *this;
}

QSeries& QSeries::add_shifted(const QSeries& other, int shift) {
  if (other.order_ + shift < order_) {
    raise(Errc::domain_error, "add_shifted: operand order too small");
  }
  for (int d = shift; d <= order_; ++d) c_[d] += other.c_[d - shift];
  return *this;
}

QSeries& QSeries::add_poly_shifted(const QPoly& p, int shift) {
  for (int d = 0; d <= p.degree() && d + shift <= order_; ++d) {
    if (d + shift >= 0) c_[d + shift] += p.coeff(d);
  }
  return *this;
}

QSeries QSeries::shifted_down(int k) const {
  if (k == 0) return *this;
  if (k < 0 || k > order_) raise(Errc::domain_error, "shifted_down out of range");
  for (int d = 0; d < k; ++d) {
    if (c_[d] != 0) {
      raise(Errc::domain_error, "shifted_down: nonzero coefficient below the shift");
    }
  }
  QSeries r(order_ - k);
  for (int d = 0; d <= r.order_; ++d) r.c_[d] = c_[d + k];
  return r;
}

QSeries QSeries::truncated(int M) const {
  if (M > order_) raise(Errc::domain_error, "cannot truncate a series upward");
  QSeries r(M);
  for (int d = 0; d <= M; ++d) r.c_[d] = c_[d];
  return r;
}

QSeries QSeries::divided_by(const QSeries& b) const {
  if (b.c_[0] != 1 && b.c_[0] != -1) {
    raise(Errc::domain_error, "series division needs a unit constant term");
  }
  QSeries r(std::min(order_, b.order_));
  for (int d = 0; d <= r.order_; ++d) {
    ExactInt x = c_[d];
    for (int t = 1; t <= d; ++t) {
      if (b.c_[t] == 0) continue;
      x -= b.c_[t] * r.c_[d - t];
    }
    r.c_[d] = (b.c_[0] == 1) ? x : -x;
  }
  return r;
}

std::string QSeries::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int d = 0; d <= order_; ++d) {
    if (d) os << ',';
    os << c_[d].get_str();
  }
  os << ']';
  return os.str();
}

std::vector<std::string> QSeries::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(order_ + 1);
  for (int d = 0; d <= order_; ++d) out.push_back(c_[d].get_str());
  return out;
}

}  // namespace ttab
