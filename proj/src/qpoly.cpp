#include "ttab/qpoly.hpp"

#include <sstream>

namespace ttab {

namespace {
const ExactInt kZero = 0;
}

QPoly::QPoly(const ExactInt& constant) {
  if (constant != 0) c_.push_back(constant);
}

QPoly::QPoly(long constant) : QPoly(ExactInt(constant)) {}

QPoly::QPoly(std::vector<ExactInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

QPoly QPoly::monomial(const ExactInt& coeff, int deg) {
  QPoly p;
  if (coeff != 0) {
    p.c_.assign(deg + 1, ExactInt(0));
    p.c_[deg] = coeff;
  }
  return p;
}

QPoly QPoly::one_minus_power(int a) {
  QPoly p;
  p.c_.assign(a + 1, ExactInt(0));
  p.c_[0] = 1;
  p.c_[a] -= 1;  // a = 0 gives the zero polynomial
  p.normalize();
  return p;
}

void QPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int QPoly::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

const ExactInt& QPoly::coeff(int d) const {
  if (d < 0 || d > degree()) return kZero;
  return c_[d];
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), ExactInt(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), ExactInt(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

QPoly QPoly::operator+(const QPoly& o) const {
  QPoly r = *this;
  r += o;
  return r;
}

QPoly QPoly::operator-(const QPoly& o) const {
  QPoly r = *this;
  r -= o;
  return r;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly();
  QPoly r;
  r.c_.assign(c_.size() + o.c_.size() - 1, ExactInt(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      r.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  r.normalize();
  return r;
}

QPoly QPoly::operator*(const ExactInt& s) const {
  if (s == 0) return QPoly();
  QPoly r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

QPoly QPoly::shifted(int k) const {
  if (is_zero() || k == 0) return k == 0 ? *this : QPoly();
  QPoly r;
  r.c_.assign(c_.size() + k, ExactInt(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
  return r;
}

QPoly QPoly::divexact(const QPoly& d) const {
  if (d.is_zero()) raise(Errc::domain_error, "division by zero polynomial");
  if (is_zero()) return QPoly();
  int dr = degree(), dd = d.degree();
  if (dr < dd) raise(Errc::domain_error, "inexact polynomial division (degree)");
  std::vector<ExactInt> rem = c_;
  std::vector<ExactInt> quot(dr - dd + 1, ExactInt(0));
  const ExactInt& lead = d.c_[dd];
  for (int t = dr - dd; t >= 0; --t) {
    ExactInt& top = rem[t + dd];
    if (top == 0) continue;
    if (top % lead != 0) raise(Errc::domain_error, "inexact polynomial division");
    ExactInt qc = top / lead;
    quot[t] = qc;
    for (int i = 0; i <= dd; ++i) rem[t + i] -= qc * d.c_[i];
  }
  for (const auto& x : rem) {
    if (x != 0) raise(Errc::domain_error, "inexact polynomial division (remainder)");
  }
  return QPoly(std::move(quot));
}

ExactInt QPoly::eval_one() const {
  ExactInt s = 0;
  for (const auto& x : c_) s += x;
  return s;
}

double QPoly::eval_double(double q) const {
  double acc = 0.0;
  for (int d = degree(); d >= 0; --d) acc = acc * q + c_[d].get_d();
  return acc;
}

int QPoly::one_minus_q_valuation(QPoly* residual) const {
  if (is_zero()) raise(Errc::domain_error, "valuation of zero polynomial");
  QPoly cur = *this;
  int mult = 0;
  while (cur.eval_one() == 0) {
    // (1 - q) s = p  <=>  s_d = sum_{j <= d} p_j, with top coefficient 0.
    std::vector<ExactInt> s(cur.c_.size(), ExactInt(0));
    ExactInt run = 0;
    for (size_t d = 0; d < cur.c_.size(); ++d) {
      run += cur.c_[d];
      s[d] = run;
    }
    cur = QPoly(std::move(s));
    ++mult;
  }
  if (residual) *residual = cur;
  return mult;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = 0; d <= degree(); ++d) {
    if (c_[d] == 0) continue;
    if (!first) os << " + ";
    os << c_[d].get_str();
    if (d > 0) os << "*q^" << d;
    first = false;
  }
  return os.str();
}

}  // namespace ttab
