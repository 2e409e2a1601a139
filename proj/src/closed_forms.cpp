#include "ttab/closed_forms.hpp"

#include <algorithm>

#include "ttab/oracle.hpp"
#include "ttab/symfunc.hpp"

namespace ttab {

ExactInt f_straight(const Partition& lam) {
  Partition conj = lam.conjugate();
  ExactInt hooks = 1;
  for (int i = 1; i <= lam.length(); ++i) {
    for (int j = 1; j <= lam.part(i); ++j) {
      hooks *= (lam.part(i) - j) + (conj.part(j) - i) + 1;
    }
  }
  return to_count(make_rat(factorial(lam.sum()), hooks));
}

ExactInt g_shifted(const Partition& lam) {
  if (!lam.strictly_decreasing()) {
    raise(Errc::shifted_needs_distinct_parts, "needs distinct parts, got " + lam.to_string());
  }
  // |lam|! * prod_{i<j} (lam_i - lam_j)/(lam_i + lam_j) / prod_i lam_i!
  ExactRat v(factorial(lam.sum()));
  for (int i = 1; i <= lam.length(); ++i) {
    for (int j = i + 1; j <= lam.length(); ++j) {
      v *= make_rat(lam.part(i) - lam.part(j), lam.part(i) + lam.part(j));
    }
    v /= ExactRat(factorial(lam.part(i)));
  }
  return to_count(v);
}

ExactInt g_staircase(int n) {
  if (n < 0) raise(Errc::domain_error, "needs n >= 0");
  ExactInt den = 1;
  for (int i = 0; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) den *= (i + j);
  }
  return to_count(make_rat(factorial(n * (n + 1L) / 2), den));
}

ExactInt catalan(int m) {
  if (m < 0) raise(Errc::domain_error, "needs m >= 0");
  return to_count(make_rat(binomial(2L * m, m), m + 1));
}

ExactInt count_staircase_minus_box(int n) {
  if (n < 2) raise(Errc::domain_error, "needs n >= 2");
  ExactRat v(g_staircase(n));
  v *= ExactRat(catalan(n)) * ExactRat(catalan(n - 2));
  v /= ExactRat(2) * ExactRat(catalan(2 * n - 3));
  return to_count(v);
}

namespace {

Partition descending_run(int top, int count) {
  std::vector<int> parts;
  for (int i = 0; i < count; ++i) parts.push_back(top - i);
  return Partition(std::move(parts));
}

void check_rect_staircase_domain(int n, int m, int k) {
  if (!(k >= 0 && k + 1 <= n && n <= m)) {
    raise(Errc::domain_error, "needs 1 <= k+1 <= n <= m");
  }
}

}  // namespace

ExactInt count_rect_minus_staircase(int n, int m, int k) {
  check_rect_staircase_domain(n, m, k);
  long half = static_cast<long>(k + 1) * k / 2;
  long cells = static_cast<long>(m) * n - half;
  ExactInt f = f_straight(rectangle(n - k - 1, m));
  ExactInt g = g_shifted(descending_run(m, k + 1));
  ExactRat eratio = E1(k + 1, m, n - k - 1) / E1(k + 1, m, 0);

  // Binomial form and factorial form of the same product formula.
  ExactRat a = ExactRat(binomial(cells, static_cast<long>(m) * (n - k - 1))) * ExactRat(f) *
               ExactRat(g) * eratio;
  ExactRat b = ExactRat(factorial(cells)) * make_rat(f, factorial(static_cast<long>(m) * (n - k - 1))) *
               make_rat(g, factorial(static_cast<long>(k + 1) * m - half)) * eratio;
  if (a != b) raise(Errc::non_integer_result, "the two printed forms disagree");
  return to_count(a);
}

ExactInt count_rect_minus_almost_square(int n, int m, int k) {
  if (n > m) std::swap(n, m);
  if (!(k >= 1 && k <= n && 2 * k <= n + 1 && n <= m)) {
    raise(Errc::domain_error, "needs 1 <= k, 2k <= n+1, n <= m (after reflection)");
  }
  long cells = static_cast<long>(n) * m - static_cast<long>(k) * k + 1;
  ExactRat v(binomial(cells, static_cast<long>(m) * (n - k)));
  v /= ExactRat(binomial(static_cast<long>(k) * (m + n - 2 * k) + 1,
                         static_cast<long>(k) * n - static_cast<long>(k) * k));
  v *= ExactRat(f_straight(rectangle(m, n - k))) * ExactRat(f_straight(rectangle(m - k, k)));
  return to_count(v);
}

QSeries gf_staircase_minus_box(int n, int M) {
  if (n < 3) raise(Errc::domain_error, "needs n >= 3");
  QRationalFn pref;
  for (int i = 1; i <= n - 2; ++i) pref.mul_den(i);
  for (int i = 1; i <= n - 2; ++i) {
    for (int j = i + 1; j <= n - 2; ++j) pref.mul_den(i + j);
  }
  pref.mul_den(2 * (n - 1));
  QPowerSpec u = QPowerSpec::consecutive(n - 1, n - 1);
  QSeries kernel = c_series(1, u, M) + c_series(0, u, M);
  return pref.expand(M) * kernel;
}

QSeries gf_rect_minus_staircase(int n, int m, int k, int M) {
  check_rect_staircase_domain(n, m, k);
  QRationalFn pref;
  for (int i = 1; i <= n - k - 1; ++i) {
    for (int j = 0; j <= m - 1; ++j) pref.mul_den(i + j);
  }
  return pref.expand(M) * restricted_schur_sum(k + 1, m, n - k - 1, M);
}

std::vector<QPoly> fq_poly(int k, int m) {
  if (!(k >= 1 && k <= m)) raise(Errc::domain_error, "needs 1 <= k <= m");
  int base = k * (k - 1) / 2;
  std::vector<QPoly> a(base + 1);
  a[base] = QPoly(1L);
  for (int i = 1; i <= k; ++i) {
    for (int j = k + 1; j <= m; ++j) {
      std::vector<QPoly> next(a.size() + 1);
      for (size_t d = 0; d < a.size(); ++d) {
        if (a[d].is_zero()) continue;
        next[d + 1] += a[d].shifted(m - i);
        next[d] -= a[d].shifted(m - j);
      }
      a = std::move(next);
    }
  }
  return a;
}

namespace {

// Core of the rank-row sum; needs every occurring geometric exponent i+s >= 1.
QSeries rank_row_core(int k, int m, int s, int M) {
  auto a = fq_poly(k, m);
  int base = k * (k - 1) / 2;
  if (base + s < 1) raise(Errc::domain_error, "sum does not converge order by order");
  // prod over m-k <= i < m, 0 <= j < m-k of 1/(q^i - q^j)
  //   = (-1)^{k(m-k)} q^{-k C(m-k,2)} prod 1/(1 - q^{i-j}).
  long shift = static_cast<long>(k) * (m - k) * (m - k - 1) / 2;
  int inner_order = M + static_cast<int>(shift);
  QSeries acc(inner_order);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    QSeries term = QSeries::from_poly(a[i], inner_order);
    term.mul_geometric(static_cast<int>(i) + s);
    acc = acc + term;
  }
  for (int i = m - k; i <= m - 1; ++i) {
    for (int j = 0; j <= m - k - 1; ++j) acc.mul_geometric(i - j);
  }
  if ((static_cast<long>(k) * (m - k)) % 2 == 1) acc.mul_scalar(ExactInt(-1));
  return acc.shifted_down(static_cast<int>(shift));
}

}  // namespace

QSeries rank_row_schur_sum(int k, int m, int s, int M) {
  if (!(k >= 1 && k <= m)) raise(Errc::domain_error, "needs 1 <= k <= m");
  if (s < 1) raise(Errc::domain_error, "needs s >= 1");
  if (M < 0) raise(Errc::domain_error, "series order must be >= 0");
  return rank_row_core(k, m, s, M);
}

ExactRat beta_integral(long a, long b) {
  if (a < 0 || b < 0) raise(Errc::domain_error, "needs a, b >= 0");
  ExactInt den = 1;
  for (long t = a + 1; t <= a + b + 1; ++t) den *= t;
  ExactRat v = make_rat(factorial(b), den);
  if (b % 2 == 1) v = -v;
  return v;
}

ExactRat rank_row_schur_limit(int k, int m, int s) {
  if (!(k >= 1 && k <= m)) raise(Errc::domain_error, "needs 1 <= k <= m");
  long base = static_cast<long>(k) * (k - 1) / 2;
  if (base + s < 1) raise(Errc::domain_error, "limit undefined for this exponent");
  // (1-q) * sum_i a_i(1)/(i+s) is the beta integral of v^{base+s-1}(v-1)^{k(m-k)};
  // the remaining mk-k^2 factors each contribute 1/(i-j), sign cancelling
  // against the integral's (-1)^{k(m-k)}.
  ExactRat v = beta_integral(base + s - 1, static_cast<long>(k) * (m - k));
  if ((static_cast<long>(k) * (m - k)) % 2 == 1) v = -v;
  for (int i = m - k; i <= m - 1; ++i) {
    for (int j = 0; j <= m - k - 1; ++j) v /= ExactRat(i - j);
  }
  return v;
}

int almost_square_t_exponent(int n, int k, AlmostSqExponent v) {
  int half = k * (k + 1) / 2;
  switch (v) {
    case AlmostSqExponent::wide: return k * (n - k + 1) - half + 1;
    case AlmostSqExponent::narrow: return k * (n - k) - half + 1;
  }
  raise(Errc::domain_error, "unknown exponent variant");
}

QSeries gf_rect_minus_almost_square(int n, int m, int k, int M, AlmostSqExponent v) {
  if (!(k >= 1 && k <= n && n <= m && 2 * k <= n + 1)) {
    raise(Errc::domain_error, "needs 1 <= k <= n <= m and 2k <= n+1");
  }
  QRationalFn pref;
  for (int i = 0; i <= m - 1; ++i) {
    for (int j = 1; j <= n - k; ++j) pref.mul_den(i + j);
  }
  return pref.expand(M) * rank_row_core(k, m, almost_square_t_exponent(n, k, v), M);
}

ExactInt count_staircase_minus_box_via_limit(int n) {
  if (n < 3) raise(Errc::domain_error, "limit route needs n >= 3");
  long cells = static_cast<long>(n) * (n + 1) / 2 - 1;
  ExactRat lim(1);
  for (int i = 1; i <= n - 2; ++i) lim /= ExactRat(i);
  for (int i = 1; i <= n - 2; ++i) {
    for (int j = i + 1; j <= n - 2; ++j) lim /= ExactRat(i + j);
  }
  lim /= ExactRat(2 * (n - 1));
  // Saturated-path count of the c-kernel limit.
  ExactRat kernel = ExactRat(2) * ExactRat(binomial(2L * n - 4, n - 2));
  for (int i = 2; i <= 2 * n - 2; ++i) kernel /= ExactRat(2 * n - 4 + i);
  return to_count(ExactRat(factorial(cells)) * lim * kernel);
}

ExactInt count_rect_minus_staircase_via_limit(int n, int m, int k) {
  check_rect_staircase_domain(n, m, k);
  long cells = static_cast<long>(m) * n - static_cast<long>(k + 1) * k / 2;
  ExactRat lim(1);
  for (int i = 1; i <= n - k - 1; ++i) {
    for (int j = 0; j <= m - 1; ++j) lim /= ExactRat(i + j);
  }
  lim *= restricted_schur_limit(k + 1, m, n - k - 1);
  return to_count(ExactRat(factorial(cells)) * lim);
}

ExactInt count_rect_minus_almost_square_via_limit(int n, int m, int k) {
  if (n > m) std::swap(n, m);
  if (!(k >= 1 && k <= n && 2 * k <= n + 1 && n <= m)) {
    raise(Errc::domain_error, "needs 1 <= k, 2k <= n+1, n <= m (after reflection)");
  }
  long cells = static_cast<long>(n) * m - static_cast<long>(k) * k + 1;
  ExactRat lim(1);
  for (int i = 0; i <= m - 1; ++i) {
    for (int j = 1; j <= n - k; ++j) lim /= ExactRat(i + j);
  }
  lim *= rank_row_schur_limit(k, m, almost_square_t_exponent(n, k, AlmostSqExponent::wide));
  return to_count(ExactRat(factorial(cells)) * lim);
}

CornerRatioReport corner_ratio_check(int n, int b, int M) {
  if (n < 1 || b < 0 || M < 0) raise(Errc::domain_error, "needs n >= 1, b >= 0, M >= 0");
  TruncatedShape square = make_shape(rectangle(n, n), Partition(), ShapeKind::straight);
  QSeries numer = pp_series_constrained(square, {{{1, n}, b}}, M);
  QSeries denom = pp_series_oracle(square, M);
  CornerRatioReport rep{false, false, 0, QSeries(M), QSeries(M)};
  rep.lhs = numer.divided_by(denom);
  QPoly claimed = qbinom(n + b - 1, b);
  for (int i = 1; i <= n; ++i) claimed = claimed * QPoly::one_minus_power(n - 1 + i);
  rep.rhs = QSeries::from_poly(claimed, M);
  rep.matched = (rep.lhs == rep.rhs);
  if (!rep.matched) {
    for (int shift = 1; shift <= M; ++shift) {
      QSeries shifted(M);
      shifted.add_poly_shifted(claimed, shift);
      if (shifted == rep.lhs) {
        rep.shifted_match = true;
        rep.shift = shift;
        break;
      }
    }
  }
  return rep;
}

QSeries fixed_diagonal_gf(int n, int k, const Partition& mu, int M) {
  if (!(n >= 1 && k >= 1 && k <= n && mu.length() <= k)) {
    raise(Errc::domain_error, "needs 1 <= k <= n and l(mu) <= k");
  }
  // q^{(n-k+1)|mu|} s_mu(1..q^{n-1}) s_mu(1..q^{k-1}) / prod (1 - q^{i+j}),
  // i.e. the two bialternant products with balanced index ranges; the
  // enumeration oracle confirms this normalization.
  long shift = (n - k + 1L) * mu.sum();
  QSeries s(M);
  if (shift > M) return s;
  QPoly num = schur_eval(mu, QPowerSpec::consecutive(0, n)) *
              schur_eval(mu, QPowerSpec::consecutive(0, k));
  s.add_poly_shifted(num, static_cast<int>(shift));
  for (int i = 1; i <= n - k; ++i) {
    for (int j = 0; j <= n - 1; ++j) s.mul_geometric(i + j);
  }
  return s;
}

}  // namespace ttab
