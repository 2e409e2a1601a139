#include "ttab/shape.hpp"

#include <algorithm>
#include <sstream>

namespace ttab {

TruncatedShape::TruncatedShape(Partition outer, Partition trunc, ShapeKind kind)
    : outer_(std::move(outer)), trunc_(std::move(trunc)), kind_(kind) {
  int upto = std::max(outer_.length(), trunc_.length());
  for (int i = 1; i <= upto; ++i) {
    if (outer_.part(i) < trunc_.part(i)) {
      raise(Errc::truncation_too_large,
            "row " + std::to_string(i) + ": " + trunc_.to_string() + " does not fit inside " +
                outer_.to_string());
    }
  }
  if (kind_ == ShapeKind::shifted && !outer_.strictly_decreasing()) {
    raise(Errc::shifted_needs_distinct_parts,
          "shifted shape needs strictly decreasing parts, got " + outer_.to_string());
  }
}

long TruncatedShape::cell_count() const { return outer_.sum() - trunc_.sum(); }

std::vector<Cell> TruncatedShape::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<size_t>(std::max(0L, cell_count())));
  for (int i = 1; i <= rows(); ++i) {
    for (int j = 1; j <= row_length(i); ++j) out.push_back({i, j});
  }
  return out;
}

std::optional<Cell> TruncatedShape::above_in_column(int i, int j) const {
  int col = grid_col(i, j);
  for (int r = i - 1; r >= 1; --r) {
    int p = col - row_start_col(r) + 1;
    if (p >= 1 && p <= row_length(r)) return Cell{r, p};
  }
  return std::nullopt;
}

std::optional<Cell> TruncatedShape::below_in_column(int i, int j) const {
  int col = grid_col(i, j);
  for (int r = i + 1; r <= rows(); ++r) {
    int p = col - row_start_col(r) + 1;
    if (p >= 1 && p <= row_length(r)) return Cell{r, p};
  }
  return std::nullopt;
}

std::string TruncatedShape::to_string() const {
  std::ostringstream os;
  os << (kind_ == ShapeKind::shifted ? "shifted:" : "straight:");
  os << outer_.to_string() << "\\" << trunc_.to_string();
  return os.str();
}

TruncatedShape make_shape(const Partition& outer, const Partition& trunc, ShapeKind kind) {
  return TruncatedShape(outer, trunc, kind);
}

int ShapePoset::index_of(const Cell& c) const {
  for (size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] == c) return static_cast<int>(i);
  }
  return -1;
}

bool ShapePoset::topo_sort(std::vector<int>* order) const {
  size_t n = elements.size();
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> succ(n);
  for (auto [a, b] : covers) {
    succ[a].push_back(b);
    ++indeg[b];
  }
  std::vector<int> queue;
  for (size_t i = 0; i < n; ++i) {
    if (indeg[i] == 0) queue.push_back(static_cast<int>(i));
  }
  std::vector<int> out;
  for (size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    out.push_back(v);
    for (int w : succ[v]) {
      if (--indeg[w] == 0) queue.push_back(w);
    }
  }
  if (out.size() != n) return false;
  if (order) *order = std::move(out);
  return true;
}

ShapePoset poset_of(const TruncatedShape& shape) {
  ShapePoset poset;
  poset.elements = shape.cells();
  auto index = [&](const Cell& c) {
    long before = 0;
    for (int r = 1; r < c.row; ++r) before += shape.row_length(r);
    return static_cast<int>(before + c.pos - 1);
  };
  for (const Cell& c : poset.elements) {
    if (shape.has_cell(c.row, c.pos + 1)) {
      poset.covers.emplace_back(index(c), index({c.row, c.pos + 1}));
    }
    if (auto below = shape.below_in_column(c.row, c.pos)) {
      poset.covers.emplace_back(index(c), index(*below));
    }
  }
  return poset;
}

}  // namespace ttab
