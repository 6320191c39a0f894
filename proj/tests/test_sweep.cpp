#include "doctest.h"

#include "fatpoints/sweep.hpp"

using namespace fatpoints;

namespace {

GridScheme grid(std::vector<std::vector<int>> m) {
  GridScheme s;
  s.mult = std::move(m);
  return s;
}

long long count_grids(int r, int t, int mu) {
  long long n = 0;
  for_each_normalized_grid(r, t, mu, [&](const GridScheme&) { ++n; });
  return n;
}

}  // namespace

TEST_CASE("normalized grid enumeration visits each shape once") {
  CHECK(count_grids(1, 1, 3) == 3);
  CHECK(count_grids(2, 1, 1) == 2);   // [[1]] and [[1],[1]]
  CHECK(count_grids(1, 2, 2) == 6);   // (1|2) and the four positive pairs
  CHECK(count_grids(2, 2, 2) == 66);
  // Every visited grid really is normalized.
  for_each_normalized_grid(3, 3, 2, [&](const GridScheme& s) {
    CHECK_NOTHROW(validate(s));
  });
}

TEST_CASE("canonical representatives are lex-least in their orbit") {
  CHECK(is_canonical_representative(grid({{0, 1}, {1, 0}})));
  CHECK(!is_canonical_representative(grid({{1, 0}, {0, 1}})));
  CHECK(is_canonical_representative(grid({{2}})));
  CHECK(is_canonical_representative(grid({{1, 2}, {2, 1}})));
  CHECK(!is_canonical_representative(grid({{2, 1}, {1, 2}})));
  // Sorting rows/cols of an asymmetric staircase.
  CHECK(is_canonical_representative(grid({{0, 1}, {1, 1}})));
  CHECK(!is_canonical_representative(grid({{1, 1}, {1, 0}})));
}

TEST_CASE("the 2x2 multiplicity-2 family sweeps clean") {
  SweepOptions opt;
  opt.max_rows = 2;
  opt.max_cols = 2;
  opt.max_mult = 2;
  SweepSummary sum = run_sweep(opt);
  CHECK(sum.ok());
  CHECK(sum.schemes == 66);
  CHECK(sum.acm == 40);
  CHECK(sum.canonical == 26);
  CHECK(sum.oracle_tables == 52);  // two coordinate draws each
  CHECK(sum.to_string().find("failures: none") != std::string::npos);
}

TEST_CASE("sweeps are deterministic for a fixed seed") {
  SweepOptions opt;
  opt.max_rows = 2;
  opt.max_cols = 2;
  opt.max_mult = 3;
  opt.seed = 12345;
  SweepSummary a = run_sweep(opt);
  SweepSummary b = run_sweep(opt);
  CHECK(a.ok());
  CHECK(b.ok());
  CHECK(a.schemes == b.schemes);
  CHECK(a.acm == b.acm);
  CHECK(a.canonical == b.canonical);
  CHECK(a.oracle_tables == b.oracle_tables);
}

TEST_CASE("combinatorial-only sweeps skip the oracle") {
  SweepOptions opt;
  opt.max_rows = 3;
  opt.max_cols = 3;
  opt.max_mult = 2;
  opt.oracle_checks = false;
  SweepSummary sum = run_sweep(opt);
  CHECK(sum.ok());
  CHECK(sum.oracle_tables == 0);
  CHECK(sum.canonical == 0);
  CHECK(sum.schemes > 1000);
}

TEST_CASE("reduced schemes only, with the oracle") {
  SweepOptions opt;
  opt.max_rows = 3;
  opt.max_cols = 3;
  opt.max_mult = 1;
  SweepSummary sum = run_sweep(opt);
  CHECK(sum.ok());
  CHECK(sum.oracle_tables == 2 * sum.canonical);
}
