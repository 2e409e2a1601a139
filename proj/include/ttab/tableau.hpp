#pragma once

#include <vector>

#include "ttab/partition.hpp"

namespace ttab {

/// Skew semistandard tableau of shape outer/inner. `reverse` selects the
/// convention: reverse means weakly decreasing rows and strictly decreasing
/// columns; otherwise the usual weakly increasing / strictly increasing.
struct SkewSsyt {
  Partition outer;
  Partition inner;
  std::vector<std::vector<int>> rows;  // rows[i-1] holds positions inner_i+1 .. outer_i
  bool reverse = true;

  static SkewSsyt empty(bool reverse = true) { return SkewSsyt{{}, {}, {}, reverse}; }

  int entry(int i, int pos) const {  // pos is the 1-based position in the diagram
    return rows[i - 1][pos - inner.part(i) - 1];
  }
  long sum() const;
  int max_entry() const;  // 0 when empty
  bool valid() const;

  bool operator==(const SkewSsyt&) const = default;
};

}  // namespace ttab
