#include "ttab/filling.hpp"

#include <algorithm>

namespace ttab {

Filling Filling::zeros(const TruncatedShape& shape) {
  Filling f{shape, {}};
  f.rows.resize(shape.rows());
  for (int i = 1; i <= shape.rows(); ++i) f.rows[i - 1].assign(shape.row_length(i), 0L);
  return f;
}

Filling Filling::from_rows(const TruncatedShape& shape, std::vector<std::vector<long>> rows) {
  if (static_cast<int>(rows.size()) != shape.rows()) {
    raise(Errc::shape_mismatch, "row count does not match shape");
  }
  for (int i = 1; i <= shape.rows(); ++i) {
    if (static_cast<int>(rows[i - 1].size()) != shape.row_length(i)) {
      raise(Errc::shape_mismatch, "row " + std::to_string(i) + " length does not match shape");
    }
  }
  return Filling{shape, std::move(rows)};
}

long Filling::sum() const {
  long s = 0;
  for (const auto& r : rows) {
    for (long v : r) s += v;
  }
  return s;
}

bool Filling::is_reverse_pp() const {
  for (int i = 1; i <= shape.rows(); ++i) {
    for (int j = 1; j <= shape.row_length(i); ++j) {
      long v = at(i, j);
      if (v < 0) return false;
      if (j > 1 && at(i, j - 1) < v) return false;
      if (auto up = shape.above_in_column(i, j)) {
        if (at(up->row, up->pos) < v) return false;
      }
    }
  }
  return true;
}

bool Filling::is_syt() const {
  long n = shape.cell_count();
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int i = 1; i <= shape.rows(); ++i) {
    for (int j = 1; j <= shape.row_length(i); ++j) {
      long v = at(i, j);
      if (v < 1 || v > n || seen[v]) return false;
      seen[v] = true;
      if (j > 1 && at(i, j - 1) >= v) return false;
      if (auto up = shape.above_in_column(i, j)) {
        if (at(up->row, up->pos) >= v) return false;
      }
    }
  }
  return true;
}

namespace {

void enumerate_rec(const TruncatedShape& shape, long max_entry,
                   const std::vector<Cell>& cells, size_t idx, Filling& f,
                   const std::function<void(const Filling&)>& fn) {
  if (idx == cells.size()) {
    fn(f);
    return;
  }
  Cell c = cells[idx];
  long cap = max_entry;
  if (c.pos > 1) cap = std::min(cap, f.at(c.row, c.pos - 1));
  if (auto up = shape.above_in_column(c.row, c.pos)) {
    cap = std::min(cap, f.at(up->row, up->pos));
  }
  for (long v = 0; v <= cap; ++v) {
    f.at(c.row, c.pos) = v;
    enumerate_rec(shape, max_entry, cells, idx + 1, f, fn);
  }
  f.at(c.row, c.pos) = 0;
}

}  // namespace

void for_each_reverse_pp(const TruncatedShape& shape, long max_entry,
                         const std::function<void(const Filling&)>& fn) {
  Filling f = Filling::zeros(shape);
  auto cells = shape.cells();
  enumerate_rec(shape, max_entry, cells, 0, f, fn);
}

}  // namespace ttab
