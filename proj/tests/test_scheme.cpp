#include "doctest.h"

#include "fatpoints/scheme.hpp"

using namespace fatpoints;

namespace {

GridScheme grid(std::vector<std::vector<int>> m) {
  GridScheme s;
  s.mult = std::move(m);
  return s;
}

}  // namespace

TEST_CASE("cross product detects equal points of P^1") {
  CHECK(cross({1, 2}, {2, 4}) == 0);
  CHECK(cross({1, 0}, {0, 1}) == 1);
  CHECK(cross({1, 3}, {1, 4}) == 1);
  CHECK(cross({-2, -6}, {1, 3}) == 0);
}

TEST_CASE("validate accepts a well-formed scheme and rejects bad ones") {
  GridScheme s = grid({{4, 2, 0}, {0, 0, 3}, {0, 2, 0}, {3, 0, 0}});
  CHECK_NOTHROW(validate(s));

  CHECK_THROWS_AS(validate(grid({})), Error);
  CHECK_THROWS_AS(validate(grid({{0}})), Error);
  CHECK_THROWS_AS(validate(grid({{1, 2}, {3}})), Error);       // ragged
  CHECK_THROWS_AS(validate(grid({{1, -2}})), Error);           // negative
  CHECK_THROWS_AS(validate(grid({{1, 0}, {2, 0}})), Error);    // zero column
  CHECK_THROWS_AS(validate(grid({{0, 0}, {1, 2}})), Error);    // zero row

  GridScheme c = grid({{1, 1}, {1, 1}});
  c.row_coords = {{ProjPoint{1, 0}, ProjPoint{0, 1}}};
  CHECK_THROWS_AS(validate(c), Error);  // col coords missing
  c.col_coords = {{ProjPoint{1, 1}}};
  CHECK_THROWS_AS(validate(c), Error);  // wrong arity
  c.col_coords = {{ProjPoint{1, 1}, ProjPoint{2, 2}}};
  CHECK_THROWS_AS(validate(c), Error);  // [1:1] = [2:2]
  c.col_coords = {{ProjPoint{1, 1}, ProjPoint{0, 0}}};
  CHECK_THROWS_AS(validate(c), Error);  // [0:0] is not a point
  c.col_coords = {{ProjPoint{1, 1}, ProjPoint{1, 2}}};
  CHECK_NOTHROW(validate(c));
}

TEST_CASE("normalize deletes zero rows and columns") {
  GridScheme s = normalize({{0, 0, 0}, {0, 2, 1}, {0, 0, 0}, {0, 3, 0}});
  CHECK(s.mult == std::vector<std::vector<int>>{{2, 1}, {3, 0}});
  CHECK_THROWS_AS((void)normalize({{0, 0}, {0, 0}}), Error);
}

TEST_CASE("degree sums binom(m+1, 2) over the grid") {
  CHECK(degree(grid({{2}})) == 3);
  CHECK(degree(grid({{1}})) == 1);
  // 4,2,3,2,3 -> 10 + 3 + 6 + 3 + 6 = 28
  CHECK(degree(grid({{4, 2, 0}, {0, 0, 3}, {0, 2, 0}, {3, 0, 0}})) == 28);
}

TEST_CASE("support clamps multiplicities") {
  GridScheme s = support(grid({{4, 0}, {1, 3}}));
  CHECK(s.mult == std::vector<std::vector<int>>{{1, 0}, {1, 1}});
}

TEST_CASE("row and column subschemes restrict and renormalize") {
  GridScheme s = grid({{4, 2, 0}, {0, 0, 3}, {0, 2, 0}, {3, 0, 0}});
  CHECK(row_subscheme(s, 1).mult == std::vector<std::vector<int>>{{4, 2}});
  CHECK(row_subscheme(s, 2).mult == std::vector<std::vector<int>>{{3}});
  CHECK(col_subscheme(s, 2).mult == std::vector<std::vector<int>>{{2}, {2}});
  CHECK_THROWS_AS((void)row_subscheme(s, 0), Error);
  CHECK_THROWS_AS((void)row_subscheme(s, 5), Error);

  // Coordinates follow the surviving lines.
  GridScheme c = grid({{1, 0}, {0, 2}});
  c.row_coords = {{ProjPoint{1, 1}, ProjPoint{1, 2}}};
  c.col_coords = {{ProjPoint{1, 3}, ProjPoint{1, 4}}};
  GridScheme r2 = row_subscheme(c, 2);
  REQUIRE(r2.has_coords());
  CHECK(r2.row_coords->at(0) == ProjPoint{1, 2});
  CHECK(r2.col_coords->at(0) == ProjPoint{1, 4});
}

TEST_CASE("transpose swaps the factors") {
  GridScheme s = grid({{1, 2, 3}, {4, 5, 6}});
  s.row_coords = {{ProjPoint{1, 0}, ProjPoint{1, 1}}};
  s.col_coords = {{ProjPoint{1, 2}, ProjPoint{1, 3}, ProjPoint{1, 4}}};
  GridScheme t = transpose(s);
  CHECK(t.mult == std::vector<std::vector<int>>{{1, 4}, {2, 5}, {3, 6}});
  CHECK(*t.row_coords == *s.col_coords);
  CHECK(*t.col_coords == *s.row_coords);
  GridScheme tt = transpose(t);
  CHECK(tt.mult == s.mult);
}
