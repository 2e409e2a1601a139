#include "ttab/oracle.hpp"

#include <algorithm>
#include <unordered_map>

#include "ttab/symfunc.hpp"

namespace ttab {

namespace {

struct VecHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

using Frontier = std::vector<int>;

// Largest prefix of row i whose above-in-column predecessors are all filled.
int max_row_fill(const TruncatedShape& shape, const Frontier& a, int i) {
  int best = 0;
  for (int j = 1; j <= shape.row_length(i); ++j) {
    if (auto up = shape.above_in_column(i, j)) {
      if (a[up->row - 1] < up->pos) break;
    }
    best = j;
  }
  return best;
}

void ideals_rec(const TruncatedShape& shape, Frontier& a, int i,
                std::vector<Frontier>& out) {
  if (i > shape.rows()) {
    out.push_back(a);
    return;
  }
  int cap = max_row_fill(shape, a, i);
  for (int v = 0; v <= cap; ++v) {
    a[i - 1] = v;
    ideals_rec(shape, a, i + 1, out);
  }
  a[i - 1] = 0;
}

std::vector<Frontier> enumerate_ideals(const TruncatedShape& shape) {
  std::vector<Frontier> out;
  Frontier a(shape.rows(), 0);
  ideals_rec(shape, a, 1, out);
  return out;
}

int frontier_size(const Frontier& a) {
  int s = 0;
  for (int x : a) s += x;
  return s;
}

bool frontier_leq(const Frontier& a, const Frontier& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

// All partitions with at most maxlen parts and size at most maxsum.
void for_each_partition(int maxlen, long maxsum,
                        const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> parts;
  std::function<void(int, long)> rec = [&](int cap, long left) {
    fn(parts);
    if (static_cast<int>(parts.size()) == maxlen) return;
    for (int v = static_cast<int>(std::min<long>(cap, left)); v >= 1; --v) {
      parts.push_back(v);
      rec(v, left - v);
      parts.pop_back();
    }
  };
  if (maxlen >= 0 && maxsum >= 0) rec(static_cast<int>(std::min<long>(maxsum, 1 << 28)), maxsum);
}

// All lambda containing mu with at most maxlen parts and |lambda|-|mu| <= extra.
void for_each_partition_over(const Partition& mu, int maxlen, long extra,
                             const std::function<void(const Partition&)>& fn) {
  if (mu.length() > maxlen) return;
  std::vector<int> lam(maxlen, 0);
  std::function<void(int, long)> rec = [&](int i, long left) {
    if (i > maxlen) {
      fn(Partition(std::vector<int>(lam.begin(), lam.begin() + maxlen)));
      return;
    }
    int lo = mu.part(i);
    int hi = static_cast<int>(std::min<long>(i == 1 ? mu.part(1) + left : lam[i - 2],
                                             mu.part(i) + left));
    for (int v = lo; v <= hi; ++v) {
      lam[i - 1] = v;
      rec(i + 1, left - (v - mu.part(i)));
    }
    lam[i - 1] = 0;
  };
  rec(1, extra);
}

}  // namespace

ExactInt count_syt_oracle(const TruncatedShape& shape, long max_cells) {
  long n = shape.cell_count();
  if (n > max_cells) {
    raise(Errc::too_large, "shape has " + std::to_string(n) + " cells, budget " +
                               std::to_string(max_cells));
  }
  if (n == 0) return 1;
  std::unordered_map<Frontier, ExactInt, VecHash> cur;
  cur.emplace(Frontier(shape.rows(), 0), ExactInt(1));
  for (long step = 0; step < n; ++step) {
    std::unordered_map<Frontier, ExactInt, VecHash> next;
    for (const auto& [a, ways] : cur) {
      for (int i = 1; i <= shape.rows(); ++i) {
        int j = a[i - 1] + 1;
        if (j > shape.row_length(i)) continue;
        if (auto up = shape.above_in_column(i, j)) {
          if (a[up->row - 1] < up->pos) continue;
        }
        Frontier b = a;
        b[i - 1] = j;
        next[std::move(b)] += ways;
      }
    }
    cur = std::move(next);
  }
  return cur.begin()->second;
}

QSeries pp_series_oracle(const TruncatedShape& shape, int M) {
  if (M < 0) raise(Errc::domain_error, "series order must be >= 0");
  if (shape.cell_count() * static_cast<long>(M) > 50000) {
    raise(Errc::too_large, "cells x order exceeds the series budget");
  }
  auto ideals = enumerate_ideals(shape);
  if (ideals.size() > 20000) {
    raise(Errc::too_large, "too many order ideals: " + std::to_string(ideals.size()));
  }
  std::stable_sort(ideals.begin(), ideals.end(), [](const Frontier& a, const Frontier& b) {
    return frontier_size(a) < frontier_size(b);
  });
  std::vector<int> sizes(ideals.size());
  for (size_t i = 0; i < ideals.size(); ++i) sizes[i] = frontier_size(ideals[i]);

  // F_I satisfies F_I (1 - q^{|I|}) = sum over proper sub-ideals J of
  // q^{|J|} F_J: the set of cells >= 1 in a reverse plane partition is an
  // order ideal and peeling one unit off it recurses.
  std::vector<QSeries> G(ideals.size(), QSeries(M));
  for (size_t idx = 0; idx < ideals.size(); ++idx) {
    if (sizes[idx] == 0) {
      G[idx] = QSeries::one(M);
      continue;
    }
    QSeries acc(M);
    for (size_t jdx = 0; jdx < idx && sizes[jdx] < sizes[idx]; ++jdx) {
      if (sizes[jdx] > M) break;
      if (frontier_leq(ideals[jdx], ideals[idx])) acc.add_shifted(G[jdx], sizes[jdx]);
    }
    if (sizes[idx] <= M) acc.mul_geometric(sizes[idx]);
    G[idx] = std::move(acc);
  }
  return G.back();  // the full frontier is the unique maximal ideal
}

QSeries pp_series_constrained(const TruncatedShape& shape,
                              const std::map<std::pair<int, int>, long>& fixed, int M) {
  if (M < 0) raise(Errc::domain_error, "series order must be >= 0");
  for (const auto& [cell, v] : fixed) {
    if (!shape.has_cell(cell.first, cell.second)) {
      raise(Errc::shape_mismatch, "fixed cell outside shape");
    }
    if (v < 0) raise(Errc::domain_error, "fixed value must be >= 0");
  }
  QSeries out(M);
  Filling f = Filling::zeros(shape);
  auto cells = shape.cells();
  std::function<void(size_t, long)> rec = [&](size_t idx, long sum) {
    if (idx == cells.size()) {
      out.coeff_mut(static_cast<int>(sum)) += 1;
      return;
    }
    Cell c = cells[idx];
    long cap = M - sum;
    if (c.pos > 1) cap = std::min(cap, f.at(c.row, c.pos - 1));
    if (auto up = shape.above_in_column(c.row, c.pos)) {
      cap = std::min(cap, f.at(up->row, up->pos));
    }
    auto it = fixed.find({c.row, c.pos});
    if (it != fixed.end()) {
      long v = it->second;
      if (v > cap) return;
      f.at(c.row, c.pos) = v;
      rec(idx + 1, sum + v);
      f.at(c.row, c.pos) = 0;
      return;
    }
    for (long v = 0; v <= cap; ++v) {
      f.at(c.row, c.pos) = v;
      rec(idx + 1, sum + v);
    }
    f.at(c.row, c.pos) = 0;
  };
  rec(0, 0);
  return out;
}

QSeries s_sum_oracle(int n, int k, int M) {
  if (n < 1 || k < 0 || k >= n) raise(Errc::domain_error, "s_sum_oracle needs 0 <= k < n");
  if (M < 0) raise(Errc::domain_error, "series order must be >= 0");
  if (static_cast<long>(n) * M > 4000) raise(Errc::too_large, "s_sum_oracle budget exceeded");
  int t_exp = n - k;
  QPowerSpec spec = QPowerSpec::consecutive(1, n - k - 1);
  QSeries acc(M);
  for_each_partition(k + 1, M / t_exp, [&](const std::vector<int>& mu_parts) {
    Partition mu(mu_parts);
    long base = t_exp * mu.sum();
    for_each_partition_over(mu, n, M - base, [&](const Partition& lam) {
      QPoly s = skew_schur_eval(lam, mu, spec);
      acc.add_poly_shifted(s, static_cast<int>(base));
    });
  });
  return acc;
}

QSeries d_sum_oracle(int n, int m, int k, int M) {
  if (n < 1 || m < 1 || k < 0 || k >= n) {
    raise(Errc::domain_error, "d_sum_oracle needs 0 <= k < n and m >= 1");
  }
  if (M < 0) raise(Errc::domain_error, "series order must be >= 0");
  if (static_cast<long>(n) * m * M > 8000) raise(Errc::too_large, "d_sum_oracle budget exceeded");
  int t_exp = n - k;
  QPowerSpec spec_x = QPowerSpec::consecutive(1, n - k - 1);
  QPowerSpec spec_z = QPowerSpec::consecutive(0, m);
  QSeries acc(M);
  for_each_partition(k + 1, M / t_exp, [&](const std::vector<int>& mu_parts) {
    Partition mu(mu_parts);
    long base = t_exp * mu.sum();
    for_each_partition_over(mu, n, M - base, [&](const Partition& lam) {
      long minw = base + (lam.sum() - mu.sum());
      for (int i = 1; i <= lam.length(); ++i) minw += static_cast<long>(i - 1) * lam.part(i);
      if (minw > M) return;
      QPoly term = schur_eval(lam, spec_z) * skew_schur_eval(lam, mu, spec_x);
      acc.add_poly_shifted(term, static_cast<int>(base));
    });
  });
  return acc;
}

}  // namespace ttab
