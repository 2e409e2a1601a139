#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "ttab/shape.hpp"

using namespace ttab;

TEST_CASE("partition normalization") {
  CHECK(make_partition({5, 3, 2}).parts() == std::vector<int>{5, 3, 2});
  CHECK(make_partition({3, 3, 0, 0}).parts() == std::vector<int>{3, 3});
  CHECK_THROWS_AS(make_partition({2, 3}), Error);
  CHECK_THROWS_AS(make_partition({2, -1}), Error);
  CHECK(make_partition({}).empty());
  CHECK(make_partition({4, 2, 1}).sum() == 7);
  CHECK(make_partition({4, 2, 1}).length() == 3);
}

TEST_CASE("staircase and friends") {
  CHECK(staircase(1).parts() == std::vector<int>{1});
  CHECK(staircase(0).empty());
  CHECK(staircase(4).parts() == std::vector<int>{4, 3, 2, 1});
  CHECK(rectangle(3, 2).parts() == std::vector<int>{3, 3});
  CHECK(almost_square(1).empty());
  CHECK(almost_square(2).parts() == std::vector<int>{2, 1});
  CHECK(almost_square(3).parts() == std::vector<int>{3, 3, 2});
}

TEST_CASE("conjugate") {
  CHECK(make_partition({5, 3, 2}).conjugate().parts() == std::vector<int>{3, 3, 2, 1, 1});
  CHECK(make_partition({}).conjugate().empty());
}

TEST_CASE("truncated shape construction") {
  TruncatedShape d1 =
      make_shape(make_partition({6, 6, 6, 6, 5}), make_partition({3, 2}), ShapeKind::straight);
  std::vector<int> lens;
  for (int i = 1; i <= d1.rows(); ++i) lens.push_back(d1.row_length(i));
  CHECK(lens == std::vector<int>{3, 4, 6, 6, 5});
  CHECK(d1.cell_count() == 24);

  TruncatedShape d2 =
      make_shape(make_partition({8, 7, 6, 2}), make_partition({5, 2}), ShapeKind::shifted);
  lens.clear();
  for (int i = 1; i <= d2.rows(); ++i) lens.push_back(d2.row_length(i));
  CHECK(lens == std::vector<int>{3, 5, 6, 2});
  CHECK(d2.row_start_col(1) == 1);
  CHECK(d2.row_start_col(3) == 3);

  CHECK_THROWS_AS(make_shape(make_partition({3, 2, 1}), make_partition({4}), ShapeKind::straight),
                  Error);
  CHECK_THROWS_AS(make_shape(make_partition({3, 3}), Partition(), ShapeKind::shifted), Error);

  // Rows of length zero are allowed, as is the empty shape.
  TruncatedShape degenerate =
      make_shape(make_partition({3, 2, 1}), make_partition({2, 2}), ShapeKind::straight);
  CHECK(degenerate.row_length(2) == 0);
  TruncatedShape empty = make_shape(Partition(), Partition(), ShapeKind::straight);
  CHECK(empty.cell_count() == 0);
  CHECK(poset_of(empty).elements.empty());
}

TEST_CASE("cell count matches outer minus trunc") {
  for (const auto& [outer, trunc, kind] :
       {std::tuple{std::vector<int>{4, 3, 2, 1}, std::vector<int>{1}, ShapeKind::shifted},
        {std::vector<int>{3, 3, 3}, std::vector<int>{2, 1}, ShapeKind::straight},
        {std::vector<int>{5, 4, 2}, std::vector<int>{2}, ShapeKind::shifted}}) {
    TruncatedShape s = make_shape(make_partition(outer), make_partition(trunc), kind);
    CHECK(s.cell_count() == static_cast<long>(s.cells().size()));
    CHECK(s.cell_count() == s.outer().sum() - s.trunc().sum());
  }
}

TEST_CASE("poset of the box-truncated staircase is a chain") {
  TruncatedShape s = make_shape(staircase(3), staircase(1), ShapeKind::shifted);
  ShapePoset p = poset_of(s);
  CHECK(p.elements.size() == 5);
  CHECK(p.covers.size() == 4);  // a total order on 5 elements
  std::vector<int> order;
  CHECK(p.topo_sort(&order));
  CHECK(order.size() == 5);
}

TEST_CASE("poset of the 2x2 square is a diamond") {
  TruncatedShape s = make_shape(make_partition({2, 2}), Partition(), ShapeKind::straight);
  ShapePoset p = poset_of(s);
  CHECK(p.elements.size() == 4);
  CHECK(p.covers.size() == 4);
}

TEST_CASE("poset of (3,3,3) minus delta_1") {
  TruncatedShape s = make_shape(make_partition({3, 3, 3}), staircase(1), ShapeKind::straight);
  ShapePoset p = poset_of(s);
  CHECK(p.elements.size() == 8);
  std::set<std::pair<int, int>> got;
  for (auto [a, b] : p.covers) {
    got.insert({p.elements[a].row * 10 + p.elements[a].pos,
                p.elements[b].row * 10 + p.elements[b].pos});
  }
  std::set<std::pair<int, int>> want = {{11, 12}, {11, 21}, {21, 31}, {12, 22}, {22, 32},
                                        {21, 22}, {22, 23}, {31, 32}, {32, 33}, {23, 33}};
  CHECK(got == want);
}

TEST_CASE("untruncated straight posets equal the grid order") {
  std::vector<std::vector<int>> shapes;
  std::vector<int> parts;
  std::function<void(int, int)> gen = [&](int cap, int left) {
    if (!parts.empty()) shapes.push_back(parts);
    for (int v = std::min(cap, left); v >= 1; --v) {
      parts.push_back(v);
      gen(v, left - v);
      parts.pop_back();
    }
  };
  gen(6, 6);
  for (const auto& lam : shapes) {
    Partition p = make_partition(lam);
    TruncatedShape s = make_shape(p, Partition(), ShapeKind::straight);
    ShapePoset poset = poset_of(s);
    std::set<std::pair<int, int>> got;
    for (auto [a, b] : poset.covers) {
      got.insert({poset.elements[a].row * 100 + poset.elements[a].pos,
                  poset.elements[b].row * 100 + poset.elements[b].pos});
    }
    std::set<std::pair<int, int>> want;
    for (int i = 1; i <= p.length(); ++i) {
      for (int j = 1; j <= p.part(i); ++j) {
        if (j < p.part(i)) want.insert({i * 100 + j, i * 100 + j + 1});
        if (p.part(i + 1) >= j) want.insert({i * 100 + j, (i + 1) * 100 + j});
      }
    }
    CHECK(got == want);
    CHECK(poset.topo_sort());
  }
}
