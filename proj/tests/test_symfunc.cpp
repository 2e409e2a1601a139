#include <doctest.h>

#include <functional>

#include "ttab/symfunc.hpp"

using namespace ttab;

namespace {

QPoly poly(std::vector<long> coeffs) {
  std::vector<ExactInt> c(coeffs.begin(), coeffs.end());
  return QPoly(std::move(c));
}

QSeries series(std::vector<long> coeffs) {
  QSeries s(static_cast<int>(coeffs.size()) - 1);
  for (size_t d = 0; d < coeffs.size(); ++d) s.coeff_mut(static_cast<int>(d)) = coeffs[d];
  return s;
}

void for_each_small_partition(int maxsum, const std::function<void(const Partition&)>& fn) {
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int cap, int left) {
    fn(Partition(parts));
    for (int v = std::min(cap, left); v >= 1; --v) {
      parts.push_back(v);
      rec(v, left - v);
      parts.pop_back();
    }
  };
  rec(maxsum, maxsum);
}

}  // namespace

TEST_CASE("schur evaluations") {
  CHECK(schur_eval(make_partition({1}), QPowerSpec{{0, 1}}) == poly({1, 1}));
  // Eight tableaux of shape (2,1) with entries <= 3.
  CHECK(schur_eval(make_partition({2, 1}), QPowerSpec{{0, 1, 2}}) ==
        poly({0, 1, 2, 2, 2, 1}));
  CHECK(schur_eval(make_partition({1, 1, 1}), QPowerSpec{{0, 1}}).is_zero());
}

TEST_CASE("bialternant equals tableau enumeration") {
  for (int p = 1; p <= 3; ++p) {
    QPowerSpec spec = QPowerSpec::consecutive(0, p);
    for_each_small_partition(6, [&](const Partition& lam) {
      CHECK(schur_eval(lam, spec) == skew_schur_eval(lam, Partition(), spec));
    });
  }
}

TEST_CASE("skew schur evaluations") {
  CHECK(skew_schur_eval(make_partition({2, 1}), make_partition({1}), QPowerSpec{{0, 1}}) ==
        poly({1, 2, 1}));
  CHECK(skew_schur_eval(make_partition({2, 1}), make_partition({2, 1}), QPowerSpec{{0}}) ==
        poly({1}));
  CHECK_THROWS_AS(skew_schur_eval(make_partition({1}), make_partition({2}), QPowerSpec{{0}}),
                  Error);
}

TEST_CASE("complete homogeneous evaluations") {
  CHECK(homog_eval(2, QPowerSpec{{0, 1}}) == poly({1, 1, 1}));
  CHECK(homog_eval(0, QPowerSpec{{5, 7}}) == poly({1}));
  CHECK(homog_eval(1, QPowerSpec{{1, 2, 3}}) == poly({0, 1, 1, 1}));
}

TEST_CASE("c kernel series") {
  CHECK(c_series(0, QPowerSpec{{1}}, 4) == series({1, 0, 1, 0, 1}));
  CHECK(c_series(1, QPowerSpec{{1}}, 4) == series({0, 1, 0, 1, 0}));
  CHECK(c_series(-1, QPowerSpec{{2, 3}}, 10) == c_series(1, QPowerSpec{{2, 3}}, 10));
  CHECK_THROWS_AS(c_series(0, QPowerSpec{{0, 1}}, 4), Error);
}

TEST_CASE("cauchy identity at small specializations") {
  QPowerSpec a{{1, 2}}, b{{1}};
  int M = 10;
  QSeries lhs(M);
  for_each_small_partition(M, [&](const Partition& lam) {
    lhs.add_poly_shifted(schur_eval(lam, a) * schur_eval(lam, b), 0);
  });
  QRationalFn rhs;
  for (int i : a.exps) {
    for (int j : b.exps) rhs.mul_den(i + j);
  }
  CHECK(lhs == rhs.expand(M));
}

TEST_CASE("insertion correspondence on the worked example") {
  IntMatrix A{{{1, 0, 2}, {0, 2, 0}, {1, 1, 0}}};
  auto [P, Q] = rsk(A);
  CHECK(P.rows == std::vector<std::vector<int>>{{1, 1, 2, 2}, {2, 3}, {3}});
  CHECK(Q.rows == std::vector<std::vector<int>>{{1, 1, 1, 3}, {2, 2}, {3}});
  CHECK(rsk_inverse(P, Q, 3, 3) == A);
  CHECK(schensted_stats(A) == std::pair<int, int>{4, 3});
}

TEST_CASE("insertion correspondence edge cases") {
  IntMatrix zero{{{0, 0}, {0, 0}}};
  auto [P, Q] = rsk(zero);
  CHECK(P.rows.empty());
  CHECK(rsk_inverse(P, Q, 2, 2) == zero);
  CHECK(schensted_stats(zero) == std::pair<int, int>{0, 0});
  CHECK(schensted_stats(IntMatrix{{{2}}}) == std::pair<int, int>{2, 1});
  IntMatrix identity{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  auto [P2, Q2] = rsk(identity);
  CHECK(P2.rows == std::vector<std::vector<int>>{{1, 2, 3}});
  CHECK(P2.rows == Q2.rows);
}

TEST_CASE("limit kernel values") {
  CHECK(E1(2, 3, 0) == make_rat(1, 720));
  CHECK(E1(2, 3, 1) == make_rat(1, 6720));
  CHECK(E1(1, 1, 0) == ExactRat(1));
  CHECK_THROWS_AS(E1(4, 3, 0), Error);
}

TEST_CASE("restricted schur limits") {
  CHECK(restricted_schur_limit(1, 1, 0) == ExactRat(1));
  CHECK(restricted_schur_limit(2, 3, 1) == make_rat(1, 560));
  // Void restriction at r = p = 2: limit of the two-variable product form.
  QRationalFn cauchy;
  cauchy.mul_den(1);
  cauchy.mul_den(2);
  cauchy.mul_den(3);
  CHECK(restricted_schur_limit(2, 2, 0) == limit_at_one(cauchy, 3));
}

TEST_CASE("restricted schur sums") {
  CHECK(restricted_schur_sum(1, 1, 0, 5) == series({1, 1, 1, 1, 1, 1}));
  // Restriction void at r = p.
  QRationalFn cauchy;
  cauchy.mul_den(1);
  cauchy.mul_den(2);
  cauchy.mul_den(3);
  CHECK(restricted_schur_sum(2, 2, 0, 8) == cauchy.expand(8));
}

TEST_CASE("length-restricted determinant form") {
  QRationalFn one_var = king_rational(1, QPowerSpec{{1}});
  CHECK(one_var.expand(6) == QRationalFn().mul_den(1).expand(6));
  CHECK(king_restricted_sum(1, QPowerSpec{{1, 2}}, 6) ==
        schur_sum_restricted_series(1, QPowerSpec{{1, 2}}, 6));
  CHECK_THROWS_AS(king_rational(1, QPowerSpec{{1, 1}}), Error);
  CHECK_THROWS_AS(king_rational(1, QPowerSpec{{0, 1}}), Error);
}
