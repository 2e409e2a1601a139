#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ttab/partition.hpp"

namespace ttab {

enum class ShapeKind { straight, shifted };

/// Box (i, j): row i from the top, j-th box of that row, both 1-based.
struct Cell {
  int row = 0;
  int pos = 0;
  bool operator==(const Cell&) const = default;
};

/// Diagram of outer \ trunc: row i keeps outer_i - trunc_i boxes at the row's
/// left end; a shifted row i starts at grid column i (straight rows at 1).
class TruncatedShape {
 public:
  TruncatedShape(Partition outer, Partition trunc, ShapeKind kind);

  const Partition& outer() const { return outer_; }
  const Partition& trunc() const { return trunc_; }
  ShapeKind kind() const { return kind_; }

  int rows() const { return outer_.length(); }
  int row_length(int i) const { return outer_.part(i) - trunc_.part(i); }
  int row_start_col(int i) const { return kind_ == ShapeKind::shifted ? i : 1; }
  int grid_col(int i, int j) const { return row_start_col(i) + j - 1; }

  long cell_count() const;
  bool has_cell(int i, int j) const {
    return i >= 1 && i <= rows() && j >= 1 && j <= row_length(i);
  }
  std::vector<Cell> cells() const;  // row-major

  /// Nearest cell above (i, j) in the same grid column, if any.
  std::optional<Cell> above_in_column(int i, int j) const;
  /// Nearest cell below (i, j) in the same grid column, if any.
  std::optional<Cell> below_in_column(int i, int j) const;

  bool operator==(const TruncatedShape&) const = default;

  std::string to_string() const;

 private:
  Partition outer_;
  Partition trunc_;
  ShapeKind kind_;
};

TruncatedShape make_shape(const Partition& outer, const Partition& trunc, ShapeKind kind);

/// Elements in row-major order; covers are row successors and grid-column
/// successors present in the shape.
struct ShapePoset {
  std::vector<Cell> elements;
  std::vector<std::pair<int, int>> covers;  // indices into elements, (smaller, larger)

  int index_of(const Cell& c) const;
  bool topo_sort(std::vector<int>* order = nullptr) const;
};

ShapePoset poset_of(const TruncatedShape& shape);

}  // namespace ttab
