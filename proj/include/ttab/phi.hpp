#pragma once

#include <utility>

#include "ttab/filling.hpp"
#include "ttab/tableau.hpp"

namespace ttab {

/// Diagonal-slicing map from a reverse plane partition of shifted staircase
/// shape delta_n \ delta_k to a reverse skew SSYT of shape lam^1 / lam^{n-k}
/// with entries in [1, n-k-1]. Entry sums satisfy
///   sum T = sum P + |inner| * (n - k).
SkewSsyt phi_shifted(const Filling& T);

/// Inverse map: T[i,j] = last position of an entry >= j in row i of P, with
/// the inner cells counting as arbitrarily large.
Filling phi_shifted_inverse(const SkewSsyt& P, int n, int k);

/// Extension to rectangles: splits T (shape n^m \ delta_k, n <= m) along the
/// main diagonal and maps both halves. Entry sums satisfy
///   sum T = sum P + sum Q - |lambda| + |inner(P)| * (n - k).
std::pair<SkewSsyt, SkewSsyt> phi_straight(const Filling& T);

Filling phi_straight_inverse(const SkewSsyt& P, const SkewSsyt& Q, int n, int m, int k);

}  // namespace ttab
