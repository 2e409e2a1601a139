#include "ttab/phi.hpp"

#include <algorithm>
#include <tuple>

namespace ttab {

namespace {

// Detect (n, k) such that shape is delta_n \ delta_k of the given kind.
std::pair<int, int> staircase_family(const TruncatedShape& shape, ShapeKind kind) {
  if (shape.kind() != kind) raise(Errc::shape_mismatch, "wrong shape kind");
  int n = shape.outer().length();
  if (shape.outer() != staircase(n)) {
    raise(Errc::shape_mismatch, "outer shape is not a staircase: " + shape.outer().to_string());
  }
  int k = shape.trunc().length() == 0 ? 0 : shape.trunc().part(1);
  if (shape.trunc() != staircase(k) || k > n) {
    raise(Errc::shape_mismatch, "truncation is not a staircase: " + shape.trunc().to_string());
  }
  return {n, k};
}

// Detect (n, m, k) such that shape is n^m \ delta_k, straight.
std::tuple<int, int, int> rect_family(const TruncatedShape& shape) {
  if (shape.kind() != ShapeKind::straight) raise(Errc::shape_mismatch, "needs a straight shape");
  int m = shape.outer().length();
  if (m == 0) raise(Errc::shape_mismatch, "empty rectangle");
  int n = shape.outer().part(1);
  if (shape.outer() != rectangle(n, m)) {
    raise(Errc::shape_mismatch, "outer shape is not a rectangle: " + shape.outer().to_string());
  }
  int k = shape.trunc().length() == 0 ? 0 : shape.trunc().part(1);
  if (shape.trunc() != staircase(k)) {
    raise(Errc::shape_mismatch, "truncation is not a staircase: " + shape.trunc().to_string());
  }
  if (k >= n) raise(Errc::shape_mismatch, "staircase truncation must leave the first row");
  return {n, m, k};
}

// lam[j][i-1] = entry of the j-th diagonal in row i, from rows stored with
// within-row position = diagonal index.
std::vector<std::vector<long>> diagonal_seqs(const std::vector<std::vector<long>>& rows,
                                             int ndiags) {
  std::vector<std::vector<long>> lam(ndiags + 1);
  for (int j = 1; j <= ndiags; ++j) {
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) >= j) lam[j].push_back(row[j - 1]);
    }
  }
  return lam;
}

Partition to_partition(const std::vector<long>& seq, const char* what) {
  std::vector<int> parts;
  parts.reserve(seq.size());
  for (size_t i = 0; i < seq.size(); ++i) {
    if (i > 0 && seq[i] > seq[i - 1]) {
      raise(Errc::shape_mismatch,
            std::string(what) + " is not weakly decreasing (degenerate truncation)");
    }
    parts.push_back(static_cast<int>(seq[i]));
  }
  return Partition(std::move(parts));
}

// Entry j fills lam^j / lam^{j+1}; the tableau has shape lam^1 / lam^{cut}
// and entries 1..cut-1.
SkewSsyt tableau_from_diagonals(const std::vector<std::vector<long>>& lam, int cut) {
  auto part_at = [&](int j) {
    if (j >= static_cast<int>(lam.size()) || j < 1) return Partition();
    return to_partition(lam[j], "diagonal sequence");
  };
  SkewSsyt out;
  out.reverse = true;
  out.outer = part_at(1);
  out.inner = part_at(cut);
  out.rows.resize(out.outer.length());
  std::vector<Partition> parts(cut + 1);
  for (int j = 1; j <= cut; ++j) parts[j] = part_at(j);
  for (int i = 1; i <= out.outer.length(); ++i) {
    auto& row = out.rows[i - 1];
    for (int j = cut - 1; j >= 1; --j) {
      int count = parts[j].part(i) - parts[j + 1].part(i);
      row.insert(row.end(), count, j);
    }
  }
  return out;
}

// T[i,j] = inner_i + #(entries >= j in row i); rows beyond the tableau are 0.
long reconstruct_entry(const SkewSsyt& P, int i, int j) {
  long v = P.inner.part(i);
  if (i <= static_cast<int>(P.rows.size())) {
    for (int e : P.rows[i - 1]) {
      if (e >= j) ++v;
    }
  }
  return v;
}

}  // namespace

SkewSsyt phi_shifted(const Filling& T) {
  auto [n, k] = staircase_family(T.shape, ShapeKind::shifted);
  if (!T.is_reverse_pp()) raise(Errc::shape_mismatch, "input is not a reverse plane partition");
  if (n == k) return SkewSsyt::empty();
  auto lam = diagonal_seqs(T.rows, n - k);
  return tableau_from_diagonals(lam, n - k);
}

Filling phi_shifted_inverse(const SkewSsyt& P, int n, int k) {
  if (n < 0 || k < 0 || k > n) raise(Errc::domain_error, "needs 0 <= k <= n");
  if (!P.reverse || !P.valid()) raise(Errc::shape_mismatch, "input is not a reverse skew SSYT");
  if (P.max_entry() > n - k - 1) {
    raise(Errc::entry_out_of_range, "entries must lie in [1, n-k-1]");
  }
  if (P.outer.length() > n || P.inner.length() > k + 1) {
    raise(Errc::length_restriction, "needs l(outer) <= n and l(inner) <= k+1");
  }
  TruncatedShape shape = make_shape(staircase(n), staircase(k), ShapeKind::shifted);
  Filling T = Filling::zeros(shape);
  for (int i = 1; i <= shape.rows(); ++i) {
    for (int j = 1; j <= shape.row_length(i); ++j) T.at(i, j) = reconstruct_entry(P, i, j);
  }
  if (!T.is_reverse_pp()) raise(Errc::shape_mismatch, "inverse image is not a plane partition");
  return T;
}

std::pair<SkewSsyt, SkewSsyt> phi_straight(const Filling& T) {
  auto [n, m, k] = rect_family(T.shape);
  if (n > m) raise(Errc::requires_n_leq_m, "needs n <= m (reflect the shape first)");
  if (!T.is_reverse_pp()) raise(Errc::shape_mismatch, "input is not a reverse plane partition");

  // Upper-left half including the diagonal, read as a shifted filling.
  std::vector<std::vector<long>> t1(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= T.shape.row_length(i); ++j) t1[i - 1].push_back(T.at(i, j));
  }
  // Transposed lower half including the diagonal.
  std::vector<std::vector<long>> t2(n);
  for (int j = 1; j <= n; ++j) {
    for (int i = j; i <= m; ++i) t2[j - 1].push_back(T.at(i, j));
  }
  SkewSsyt P = tableau_from_diagonals(diagonal_seqs(t1, n - k), n - k);
  SkewSsyt Q = tableau_from_diagonals(diagonal_seqs(t2, m), m + 1);
  return {std::move(P), std::move(Q)};
}

Filling phi_straight_inverse(const SkewSsyt& P, const SkewSsyt& Q, int n, int m, int k) {
  if (n < 1 || m < 1 || k < 0 || k >= n) raise(Errc::domain_error, "needs 0 <= k < n, m >= 1");
  if (n > m) raise(Errc::requires_n_leq_m, "needs n <= m");
  if (!P.reverse || !P.valid()) raise(Errc::shape_mismatch, "P is not a reverse skew SSYT");
  if (!Q.reverse || !Q.valid()) raise(Errc::shape_mismatch, "Q is not a reverse SSYT");
  if (!Q.inner.empty()) raise(Errc::shape_mismatch, "Q must have straight shape");
  if (Q.outer != P.outer) raise(Errc::shape_mismatch, "P and Q must share the outer shape");
  if (P.max_entry() > n - k - 1) raise(Errc::entry_out_of_range, "P entries exceed n-k-1");
  if (Q.max_entry() > m) raise(Errc::entry_out_of_range, "Q entries exceed m");
  if (P.outer.length() > n || P.inner.length() > k + 1) {
    raise(Errc::length_restriction, "needs l(outer) <= n and l(inner) <= k+1");
  }

  TruncatedShape shape = make_shape(rectangle(n, m), staircase(k), ShapeKind::straight);
  Filling T = Filling::zeros(shape);
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= shape.row_length(i); ++j) {
      if (j >= i) {
        T.at(i, j) = reconstruct_entry(P, i, j - i + 1);
      } else {
        T.at(i, j) = reconstruct_entry(Q, j, i - j + 1);
      }
    }
  }
  if (!T.is_reverse_pp()) raise(Errc::shape_mismatch, "inverse image is not a plane partition");
  return T;
}

}  // namespace ttab
