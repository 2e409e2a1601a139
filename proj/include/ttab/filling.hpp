#pragma once

#include <functional>
#include <vector>

#include "ttab/shape.hpp"

namespace ttab {

/// Assignment cell -> nonnegative integer over a truncated shape. Validators
/// decide whether it is a (reverse) plane partition or a standard tableau.
struct Filling {
  TruncatedShape shape;
  std::vector<std::vector<long>> rows;  // rows[i-1][j-1]

  static Filling zeros(const TruncatedShape& shape);
  static Filling from_rows(const TruncatedShape& shape, std::vector<std::vector<long>> rows);

  long at(int i, int j) const { return rows[i - 1][j - 1]; }
  long& at(int i, int j) { return rows[i - 1][j - 1]; }

  long sum() const;
  /// Entries weakly decrease along rows and down grid columns.
  bool is_reverse_pp() const;
  /// Entries are a bijection onto 1..N, increasing along rows and down columns.
  bool is_syt() const;

  bool operator==(const Filling&) const = default;
};

/// Visit every reverse plane partition of the shape with entries <= max_entry.
void for_each_reverse_pp(const TruncatedShape& shape, long max_entry,
                         const std::function<void(const Filling&)>& fn);

}  // namespace ttab
