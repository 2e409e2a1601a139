#include "ttab/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "ttab/closed_forms.hpp"

namespace ttab {

QPowerSpec QPowerSpec::consecutive(int first, int count) {
  QPowerSpec s;
  for (int i = 0; i < count; ++i) s.exps.push_back(first + i);
  return s;
}

bool QPowerSpec::all_distinct() const {
  std::set<int> seen(exps.begin(), exps.end());
  return seen.size() == exps.size();
}

int QPowerSpec::min_exp() const {
  if (exps.empty()) raise(Errc::domain_error, "empty specialization");
  return *std::min_element(exps.begin(), exps.end());
}

namespace {

// Diagram columns are plain grid columns for straight skew shapes.
QPoly skew_ssyt_weight_sum(const Partition& lam, const Partition& mu, const QPowerSpec& spec) {
  int p = spec.size();
  int nrows = lam.length();
  std::vector<std::vector<int>> fill(nrows);
  for (int i = 1; i <= nrows; ++i) fill[i - 1].assign(lam.part(i) - mu.part(i), 0);

  QPoly acc;
  std::function<void(int, int, long)> rec = [&](int i, int pos, long wexp) {
    if (i > nrows) {
      acc += QPoly::monomial(ExactInt(1), static_cast<int>(wexp));
      return;
    }
    if (pos > lam.part(i)) {
      rec(i + 1, mu.part(i + 1) + 1, wexp);
      return;
    }
    int lo = 1;
    if (pos > mu.part(i) + 1) lo = std::max(lo, fill[i - 1][pos - mu.part(i) - 2]);
    if (i > 1 && pos > mu.part(i - 1) && pos <= lam.part(i - 1)) {
      lo = std::max(lo, fill[i - 2][pos - mu.part(i - 1) - 1] + 1);
    }
    for (int e = lo; e <= p; ++e) {
      fill[i - 1][pos - mu.part(i) - 1] = e;
      rec(i, pos + 1, wexp + spec.exps[e - 1]);
    }
  };
  if (nrows == 0) return QPoly(1L);
  rec(1, mu.part(1) + 1, 0);
  return acc;
}

QPoly vandermonde(const QPowerSpec& spec) {
  QPoly v(1L);
  for (int i = 0; i < spec.size(); ++i) {
    for (int j = i + 1; j < spec.size(); ++j) {
      v = v * (QPoly::monomial(ExactInt(1), spec.exps[i]) -
               QPoly::monomial(ExactInt(1), spec.exps[j]));
    }
  }
  return v;
}

int permutation_sign(const std::vector<int>& w) {
  int inv = 0;
  for (size_t i = 0; i < w.size(); ++i) {
    for (size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] > w[j]) ++inv;
    }
  }
  return (inv % 2 == 0) ? 1 : -1;
}

QPoly bialternant(const Partition& lam, const QPowerSpec& spec) {
  int p = spec.size();
  std::vector<long> b(p);
  for (int j = 1; j <= p; ++j) b[j - 1] = lam.part(j) + p - j;
  std::vector<int> w(p);
  std::iota(w.begin(), w.end(), 0);
  QPoly num;
  do {
    long deg = 0;
    for (int i = 0; i < p; ++i) deg += static_cast<long>(spec.exps[i]) * b[w[i]];
    num += QPoly::monomial(ExactInt(permutation_sign(w)), static_cast<int>(deg));
  } while (std::next_permutation(w.begin(), w.end()));
  return num.divexact(vandermonde(spec));
}

}  // namespace

QPoly schur_eval(const Partition& lam, const QPowerSpec& spec) {
  if (lam.length() > spec.size()) return QPoly();
  if (lam.empty()) return QPoly(1L);
  if (spec.size() <= 8 && spec.all_distinct()) return bialternant(lam, spec);
  return skew_ssyt_weight_sum(lam, Partition(), spec);
}

QPoly skew_schur_eval(const Partition& lam, const Partition& mu, const QPowerSpec& spec) {
  if (!lam.contains(mu)) {
    raise(Errc::inner_not_contained, mu.to_string() + " not inside " + lam.to_string());
  }
  return skew_ssyt_weight_sum(lam, mu, spec);
}

QPoly homog_eval(int l, const QPowerSpec& spec) {
  if (l < 0) raise(Errc::domain_error, "homog_eval needs l >= 0");
  std::vector<QPoly> h(l + 1);
  h[0] = QPoly(1L);
  for (int a : spec.exps) {
    for (int t = 1; t <= l; ++t) h[t] += h[t - 1].shifted(a);
  }
  return h[l];
}

QSeries c_series(int s, const QPowerSpec& spec, int M) {
  if (M < 0) raise(Errc::domain_error, "series order must be >= 0");
  s = std::abs(s);
  int minexp = spec.min_exp();
  if (minexp < 1) raise(Errc::nonconvergent_spec, "all exponents must be >= 1");
  // Term l has lowest degree (2l+s)*minexp.
  int lmax = -1;
  while ((2L * (lmax + 1) + s) * minexp <= M) ++lmax;
  if (lmax + s < 0) return QSeries(M);
  std::vector<QPoly> h(lmax + s + 1);
  h[0] = QPoly(1L);
  for (int a : spec.exps) {
    for (int t = 1; t <= lmax + s; ++t) h[t] += h[t - 1].shifted(a);
  }
  QSeries acc(M);
  for (int l = 0; l <= lmax; ++l) acc.add_poly_shifted(h[l] * h[l + s], 0);
  return acc;
}

bool IntMatrix::valid() const {
  for (const auto& row : a) {
    if (static_cast<int>(row.size()) != cols()) return false;
    for (long v : row) {
      if (v < 0) return false;
    }
  }
  return true;
}

namespace {

std::vector<std::pair<int, int>> biword(const IntMatrix& A) {
  std::vector<std::pair<int, int>> w;
  for (int i = 0; i < A.rows(); ++i) {
    for (int j = 0; j < A.cols(); ++j) {
      for (long t = 0; t < A.at(i, j); ++t) w.emplace_back(i + 1, j + 1);
    }
  }
  return w;
}

SkewSsyt straight_tableau(std::vector<std::vector<int>> rows) {
  SkewSsyt t;
  t.reverse = false;
  std::vector<int> shape;
  for (const auto& r : rows) shape.push_back(static_cast<int>(r.size()));
  t.outer = Partition(std::move(shape));
  t.rows = std::move(rows);
  return t;
}

}  // namespace

RskPair rsk(const IntMatrix& A) {
  if (!A.valid()) raise(Errc::domain_error, "matrix must be rectangular and nonnegative");
  std::vector<std::vector<int>> p, q;
  for (auto [i, j] : biword(A)) {
    int x = j;
    size_t r = 0;
    for (;; ++r) {
      if (r == p.size()) {
        p.emplace_back();
        q.emplace_back();
      }
      auto& row = p[r];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        q[r].push_back(i);
        break;
      }
      std::swap(*it, x);
    }
  }
  return {straight_tableau(std::move(p)), straight_tableau(std::move(q))};
}

IntMatrix rsk_inverse(const SkewSsyt& P, const SkewSsyt& Q, int rows, int cols) {
  if (P.outer != Q.outer) raise(Errc::shape_mismatch, "P and Q must have the same shape");
  if (P.reverse || Q.reverse || !P.inner.empty() || !Q.inner.empty()) {
    raise(Errc::shape_mismatch, "needs straight-shape SSYT in the increasing convention");
  }
  if (!P.valid() || !Q.valid()) raise(Errc::shape_mismatch, "invalid tableau");
  std::vector<std::vector<int>> p = P.rows, q = Q.rows;
  std::vector<std::pair<int, int>> w;
  long remaining = P.outer.sum();
  while (remaining-- > 0) {
    // The cell removed is the rightmost among those holding the maximum
    // recording entry; with equal entries forming a horizontal strip it is a
    // removable corner.
    int best_row = -1, best_col = -1, best_val = -1;
    for (size_t r = 0; r < q.size(); ++r) {
      if (q[r].empty()) continue;
      int v = q[r].back();
      int c = static_cast<int>(q[r].size()) - 1;
      if (v > best_val || (v == best_val && c > best_col)) {
        best_val = v;
        best_col = c;
        best_row = static_cast<int>(r);
      }
    }
    q[best_row].pop_back();
    int x = p[best_row].back();
    p[best_row].pop_back();
    for (int r = best_row - 1; r >= 0; --r) {
      auto& row = p[r];
      auto it = std::lower_bound(row.begin(), row.end(), x);
      if (it == row.begin()) raise(Errc::shape_mismatch, "pair is not an insertion image");
      --it;  // rightmost entry strictly below x
      std::swap(*it, x);
    }
    w.emplace_back(best_val, x);
    while (!p.empty() && p.back().empty()) {
      p.pop_back();
      q.pop_back();
    }
  }
  std::reverse(w.begin(), w.end());
  int nr = rows, nc = cols;
  for (auto [i, j] : w) {
    nr = std::max(nr, i);
    nc = std::max(nc, j);
  }
  IntMatrix A;
  A.a.assign(nr, std::vector<long>(nc, 0));
  for (auto [i, j] : w) ++A.a[i - 1][j - 1];
  return A;
}

std::pair<int, int> schensted_stats(const IntMatrix& A) {
  if (!A.valid()) raise(Errc::domain_error, "matrix must be rectangular and nonnegative");
  auto w = biword(A);
  int L = static_cast<int>(w.size());
  int best_inc = 0, best_dec = 0;
  std::vector<int> inc(L, 1), dec(L, 1);
  for (int t = 0; t < L; ++t) {
    for (int u = 0; u < t; ++u) {
      if (w[u].second <= w[t].second) inc[t] = std::max(inc[t], inc[u] + 1);
      if (w[u].first < w[t].first && w[u].second > w[t].second) {
        dec[t] = std::max(dec[t], dec[u] + 1);
      }
    }
    best_inc = std::max(best_inc, inc[t]);
    best_dec = std::max(best_dec, dec[t]);
  }
  return {best_inc, best_dec};
}

QSeries schur_sum_restricted_series(int rmax, const QPowerSpec& spec, int M) {
  if (M < 0) raise(Errc::domain_error, "series order must be >= 0");
  if (rmax < 0) raise(Errc::domain_error, "length bound must be >= 0");
  if (spec.min_exp() < 1) raise(Errc::nonconvergent_spec, "all exponents must be >= 1");
  std::vector<int> sorted = spec.exps;
  std::sort(sorted.begin(), sorted.end());
  int maxlen = std::min(rmax, spec.size());
  QSeries acc = QSeries::one(M);  // empty partition
  std::vector<int> parts;
  // Row i filled with entry i gives the minimal SSYT weight; prune on it.
  std::function<void(int, long)> rec = [&](int cap, long minw) {
    int i = static_cast<int>(parts.size());
    if (i == maxlen) return;
    for (int v = 1; v <= cap; ++v) {
      long w = minw + static_cast<long>(v) * sorted[i];
      if (w > M) break;
      parts.push_back(v);
      acc.add_poly_shifted(schur_eval(Partition(parts), spec), 0);
      rec(v, w);
      parts.pop_back();
    }
  };
  if (maxlen > 0) rec(M / sorted[0], 0);
  return acc;
}

QSeries restricted_schur_sum(int r, int p, int s, int M) {
  if (r < 1 || p < 1) raise(Errc::domain_error, "needs r, p >= 1");
  if (s < 0) raise(Errc::domain_error, "needs s >= 0");
  return schur_sum_restricted_series(r, QPowerSpec::consecutive(1 + s, p), M);
}

ExactRat E1(int r, int p, int s) {
  if (r < 0 || r > p || s < 0) raise(Errc::domain_error, "E1 needs 0 <= r <= p, s >= 0");
  if (r == 0) return ExactRat(1);
  if (r % 2 == 1) {
    ExactRat head = make_rat(factorial((r - 1) / 2 + s), factorial(p - (r - 1) / 2 + s));
    return head * E1(r - 1, p, s);
  }
  ExactInt den = 1;
  for (int l = r + 1; l < 2 * p - r + 2; ++l) {
    for (int t = 0; t < r / 2; ++t) den *= (l + 2 * s);
  }
  for (int l = 2; l <= r; ++l) {
    ExactInt f = static_cast<long>(l + 2 * s) * static_cast<long>(2 * p - l + 2 + 2 * s);
    for (int t = 0; t < l / 2; ++t) den *= f;
  }
  return make_rat(1, den);
}

ExactRat restricted_schur_limit(int r, int p, int s) {
  if (r < 1 || r > p) raise(Errc::domain_error, "needs 1 <= r <= p");
  if (s < 0) raise(Errc::domain_error, "needs s >= 0");
  long N = static_cast<long>(r) * p - static_cast<long>(r) * (r - 1) / 2;
  std::vector<int> parts;
  for (int i = 0; i < r; ++i) parts.push_back(p - i);
  ExactRat g(g_shifted(Partition(parts)));
  return g / ExactRat(factorial(N)) * E1(r, p, s) / E1(r, p, 0);
}

QRationalFn king_rational(int mmax, const QPowerSpec& spec) {
  int n = spec.size();
  if (n == 0 || mmax < 0) raise(Errc::domain_error, "needs variables and mmax >= 0");
  if (!spec.all_distinct()) raise(Errc::singular_denominator, "exponents must be distinct");
  for (int a : spec.exps) {
    if (a < 1) raise(Errc::singular_denominator, "exponents must be >= 1");
  }
  // det[ x_i^{n-j} - (-1)^mmax [j > mmax] x_i^{n-mmax+j-1} ] over the
  // Vandermonde and the Cauchy-type product.
  auto entry = [&](int i, int j) {  // 1-based
    QPoly e = QPoly::monomial(ExactInt(1), spec.exps[i - 1] * (n - j));
    if (j > mmax) {
      ExactInt sign = (mmax % 2 == 0) ? -1 : 1;  // -(-1)^mmax
      e += QPoly::monomial(sign, spec.exps[i - 1] * (n - mmax + j - 1));
    }
    return e;
  };
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 0);
  QPoly det;
  do {
    QPoly term(static_cast<long>(permutation_sign(w)));
    for (int i = 1; i <= n; ++i) term = term * entry(i, w[i - 1] + 1);
    det += term;
  } while (std::next_permutation(w.begin(), w.end()));

  QRationalFn f(det.divexact(vandermonde(spec)));
  for (int i = 0; i < n; ++i) {
    f.mul_den(spec.exps[i]);
    for (int j = i + 1; j < n; ++j) f.mul_den(spec.exps[i] + spec.exps[j]);
  }
  return f;
}

QSeries king_restricted_sum(int mmax, const QPowerSpec& spec, int M) {
  return king_rational(mmax, spec).expand(M);
}

}  // namespace ttab
