#include <doctest.h>

#include <random>

#include "ttab/oracle.hpp"
#include "ttab/phi.hpp"
#include "ttab/symfunc.hpp"

using namespace ttab;

namespace {

std::mt19937 rng(0x5eed);

Partition random_partition(int max_len, int max_part, bool strict) {
  std::uniform_int_distribution<int> len_d(0, max_len), part_d(1, max_part);
  int len = len_d(rng);
  std::vector<int> parts;
  int cap = max_part;
  for (int i = 0; i < len && cap >= 1; ++i) {
    std::uniform_int_distribution<int> d(1, cap);
    int v = d(rng);
    parts.push_back(v);
    cap = strict ? v - 1 : v;
  }
  return Partition(std::move(parts));
}

TruncatedShape random_shape() {
  bool shifted = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
  Partition outer = random_partition(5, 6, shifted);
  std::vector<int> trunc;
  int prev = outer.part(1);
  for (int i = 1; i <= outer.length(); ++i) {
    std::uniform_int_distribution<int> d(0, std::min(prev, outer.part(i)));
    int v = d(rng);
    if (v == 0) break;
    trunc.push_back(v);
    prev = v;
  }
  return make_shape(outer, Partition(std::move(trunc)),
                    shifted ? ShapeKind::shifted : ShapeKind::straight);
}

Filling random_reverse_pp(const TruncatedShape& shape, long max_entry) {
  Filling f = Filling::zeros(shape);
  for (const Cell& c : shape.cells()) {
    long cap = max_entry;
    if (c.pos > 1) cap = std::min(cap, f.at(c.row, c.pos - 1));
    if (auto up = shape.above_in_column(c.row, c.pos)) {
      cap = std::min(cap, f.at(up->row, up->pos));
    }
    f.at(c.row, c.pos) = std::uniform_int_distribution<long>(0, cap)(rng);
  }
  return f;
}

}  // namespace

TEST_CASE("random truncated shapes have acyclic posets") {
  for (int trial = 0; trial < 200; ++trial) {
    TruncatedShape s = random_shape();
    ShapePoset p = poset_of(s);
    CHECK(p.topo_sort());
    CHECK(static_cast<long>(p.elements.size()) == s.cell_count());
  }
}

TEST_CASE("random fillings from the sampler are valid plane partitions") {
  for (int trial = 0; trial < 200; ++trial) {
    Filling f = random_reverse_pp(random_shape(), 5);
    CHECK(f.is_reverse_pp());
  }
}

TEST_CASE("random roundtrips through the shifted diagonal map") {
  TruncatedShape shape = make_shape(staircase(5), staircase(1), ShapeKind::shifted);
  for (int trial = 0; trial < 300; ++trial) {
    Filling T = random_reverse_pp(shape, 9);
    SkewSsyt P = phi_shifted(T);
    CHECK(P.valid());
    CHECK(T.sum() == P.sum() + 4 * P.inner.sum());
    CHECK(phi_shifted_inverse(P, 5, 1) == T);
  }
}

TEST_CASE("random roundtrips through the straight diagonal map") {
  TruncatedShape shape = make_shape(rectangle(3, 4), staircase(2), ShapeKind::straight);
  for (int trial = 0; trial < 300; ++trial) {
    Filling T = random_reverse_pp(shape, 7);
    auto [P, Q] = phi_straight(T);
    CHECK(T.sum() == P.sum() + Q.sum() - P.outer.sum() + P.inner.sum());
    CHECK(phi_straight_inverse(P, Q, 3, 4, 2) == T);
  }
}

TEST_CASE("random matrices roundtrip through the insertion correspondence") {
  std::uniform_int_distribution<int> dim(1, 4), entry(0, 3);
  for (int trial = 0; trial < 300; ++trial) {
    int rows = dim(rng), cols = dim(rng);
    IntMatrix A;
    A.a.assign(rows, std::vector<long>(cols, 0));
    for (auto& row : A.a) {
      for (auto& v : row) v = entry(rng);
    }
    auto [P, Q] = rsk(A);
    CHECK(P.valid());
    CHECK(Q.valid());
    CHECK(rsk_inverse(P, Q, rows, cols) == A);
    auto [inc, dec] = schensted_stats(A);
    CHECK(inc == (P.rows.empty() ? 0 : static_cast<int>(P.rows[0].size())));
    CHECK(dec == static_cast<int>(P.rows.size()));
  }
}
