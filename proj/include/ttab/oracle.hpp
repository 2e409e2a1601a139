#pragma once

#include <map>
#include <utility>

#include "ttab/filling.hpp"
#include "ttab/qseries.hpp"

namespace ttab {

/// Linear-extension count of the cell poset via order-ideal DP keyed by
/// per-row filled prefix lengths. Exact ground truth for SYT counts.
ExactInt count_syt_oracle(const TruncatedShape& shape, long max_cells = 22);

/// Coefficient of q^m = number of reverse plane partitions with entry sum m.
QSeries pp_series_oracle(const TruncatedShape& shape, int M);

/// Same series with some cells pinned to fixed values ((row, pos) -> value).
QSeries pp_series_constrained(const TruncatedShape& shape,
                              const std::map<std::pair<int, int>, long>& fixed, int M);

/// Direct enumeration of the skew-tableau sum for the shifted staircase family
/// at x = (q, ..., q^{n-k-1}), t = q^{n-k}.
QSeries s_sum_oracle(int n, int k, int M);

/// Direct enumeration of the paired sum for the rectangular family at
/// x = (q, ..., q^{n-k-1}), z = (1, q, ..., q^{m-1}), t = q^{n-k}.
QSeries d_sum_oracle(int n, int m, int k, int M);

}  // namespace ttab
