#pragma once

#include <string>

#include "ttab/shape.hpp"

namespace ttab {

/// Grammar:
///   shifted:delta(N)\delta(K)        straight:[a,b,...]\[c,d,...]
///   rect(N,M)\delta(K)               rect(N,M)\almostsq(K)
/// rect(n,m) is the shape n^m: m rows of width n. Bracket and delta parts
/// may be mixed; whitespace is ignored.
TruncatedShape parse_shape_spec(const std::string& text);

/// Prints the family form when the shape matches one, bracket form otherwise.
/// parse(canonical(s)) == s.
std::string canonical_shape_spec(const TruncatedShape& shape);

struct Family {
  enum class Kind { none, staircase_box, rect_staircase, rect_almost_square };
  Kind kind = Kind::none;
  int n = 0, m = 0, k = 0;
  /// Rectangle parameters are normalized to n <= m; set when they were
  /// swapped. Counts are reflection-invariant, series are not.
  bool reflected = false;
};

Family detect_family(const TruncatedShape& shape);

}  // namespace ttab
