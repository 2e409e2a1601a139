#pragma once

#include <utility>
#include <vector>

#include "ttab/qrational.hpp"
#include "ttab/tableau.hpp"

namespace ttab {

/// Variable list (q^{a_1}, ..., q^{a_p}).
struct QPowerSpec {
  std::vector<int> exps;

  static QPowerSpec consecutive(int first, int count);
  int size() const { return static_cast<int>(exps.size()); }
  bool all_distinct() const;
  int min_exp() const;  // raises on empty
};

/// Schur polynomial at a q-power specialization. Bialternant when the
/// exponents are distinct, tableau enumeration otherwise. Zero polynomial
/// when l(lambda) exceeds the number of variables.
QPoly schur_eval(const Partition& lam, const QPowerSpec& spec);

/// Skew Schur polynomial by direct SSYT enumeration.
QPoly skew_schur_eval(const Partition& lam, const Partition& mu, const QPowerSpec& spec);

/// Complete homogeneous symmetric polynomial h_l at the specialization.
QPoly homog_eval(int l, const QPowerSpec& spec);

/// c_s = sum_l h_l h_{l+s} (c_{-s} = c_s), truncated at order M. All
/// exponents must be >= 1 so the sum converges order by order.
QSeries c_series(int s, const QPowerSpec& spec, int M);

struct IntMatrix {
  std::vector<std::vector<long>> a;

  int rows() const { return static_cast<int>(a.size()); }
  int cols() const { return a.empty() ? 0 : static_cast<int>(a[0].size()); }
  long at(int i, int j) const { return a[i][j]; }  // 0-based
  bool valid() const;

  bool operator==(const IntMatrix&) const = default;
};

struct RskPair {
  SkewSsyt p;  // inner empty, regular convention
  SkewSsyt q;
};

RskPair rsk(const IntMatrix& A);
/// Inverse correspondence. Output size is max biword letter unless rows/cols
/// request padding with zero rows/columns.
IntMatrix rsk_inverse(const SkewSsyt& P, const SkewSsyt& Q, int rows = 0, int cols = 0);

/// (longest weakly increasing subsequence length, longest strictly decreasing
/// length) of the two-line array of A; equals (lambda_1, l(lambda)) of the
/// RSK shape.
std::pair<int, int> schensted_stats(const IntMatrix& A);

/// Sum of s_lambda(spec) over l(lambda) <= rmax, truncated at order M.
QSeries schur_sum_restricted_series(int rmax, const QPowerSpec& spec, int M);

/// Specialization x = (q^{1+s}, ..., q^{p+s}).
QSeries restricted_schur_sum(int r, int p, int s, int M);

/// Closed-form limit kernel for length-restricted Schur sums.
ExactRat E1(int r, int p, int s);

/// lim (1-q)^N sum_{l(lambda)<=r} s_lambda(q^{1+s},...,q^{p+s}) with
/// N = rp - r(r-1)/2.
ExactRat restricted_schur_limit(int r, int p, int s);

/// Length-restricted Schur sum as a determinant ratio (rational form).
QRationalFn king_rational(int mmax, const QPowerSpec& spec);
QSeries king_restricted_sum(int mmax, const QPowerSpec& spec, int M);

}  // namespace ttab
