#pragma once

#include <string>
#include <vector>

#include "ttab/exact.hpp"

namespace ttab {

/// Dense polynomial in q over ExactInt, no trailing zero coefficient.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(const ExactInt& constant);
  explicit QPoly(long constant);
  explicit QPoly(std::vector<ExactInt> coeffs);

  static QPoly monomial(const ExactInt& coeff, int deg);
  static QPoly one_minus_power(int a);  // 1 - q^a

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  int valuation() const;                                          // -1 for zero
  const ExactInt& coeff(int d) const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator-() const;
  QPoly operator*(const QPoly& o) const;
  QPoly operator*(const ExactInt& s) const;
  QPoly shifted(int k) const;  // * q^k

  /// Exact division; raises DomainError if the division does not come out even.
  QPoly divexact(const QPoly& d) const;

  ExactInt eval_one() const;
  double eval_double(double q) const;

  /// Multiplicity of the root q = 1; fills *residual with this / (1-q)^mult.
  int one_minus_q_valuation(QPoly* residual = nullptr) const;

  bool operator==(const QPoly&) const = default;
  std::string to_string() const;

 private:
  std::vector<ExactInt> c_;
  void normalize();
};

}  // namespace ttab
