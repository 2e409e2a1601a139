#pragma once

#include <string>
#include <vector>

#include "ttab/error.hpp"

namespace ttab {

/// Weakly decreasing sequence of nonnegative integers, trailing zeros stripped.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int length() const { return static_cast<int>(parts_.size()); }
  long sum() const;
  bool empty() const { return parts_.empty(); }

  /// 1-based part access; 0 beyond the length.
  int part(int i) const {
    return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
  }
  const std::vector<int>& parts() const { return parts_; }

  bool contains(const Partition& mu) const;
  bool strictly_decreasing() const;
  Partition conjugate() const;

  bool operator==(const Partition&) const = default;

  std::string to_string() const;

 private:
  std::vector<int> parts_;
};

Partition make_partition(const std::vector<int>& parts);

/// delta_k = (k, k-1, ..., 1); empty for k = 0.
Partition staircase(int k);

/// (width^height): `height` rows of `width`. Empty if either is 0.
Partition rectangle(int width, int height);

/// (k^{k-1}, k-1); empty for k = 1.
Partition almost_square(int k);

}  // namespace ttab
