#include "ttab/tableau.hpp"

#include <algorithm>

namespace ttab {

long SkewSsyt::sum() const {
  long s = 0;
  for (const auto& r : rows) {
    for (int v : r) s += v;
  }
  return s;
}

int SkewSsyt::max_entry() const {
  int m = 0;
  for (const auto& r : rows) {
    for (int v : r) m = std::max(m, v);
  }
  return m;
}

bool SkewSsyt::valid() const {
  if (!outer.contains(inner)) return false;
  if (static_cast<int>(rows.size()) != outer.length()) return false;
  for (int i = 1; i <= outer.length(); ++i) {
    if (static_cast<int>(rows[i - 1].size()) != outer.part(i) - inner.part(i)) return false;
  }
  for (int i = 1; i <= outer.length(); ++i) {
    for (int pos = inner.part(i) + 1; pos <= outer.part(i); ++pos) {
      int v = entry(i, pos);
      if (v < 1) return false;
      if (pos > inner.part(i) + 1) {
        int left = entry(i, pos - 1);
        if (reverse ? left < v : left > v) return false;
      }
      if (i > 1 && pos > inner.part(i - 1) && pos <= outer.part(i - 1)) {
        int up = entry(i - 1, pos);
        if (reverse ? up <= v : up >= v) return false;
      }
    }
  }
  return true;
}

}  // namespace ttab
