#include "doctest.h"

#include <string>

#include "fatpoints/acm.hpp"
#include "fatpoints/classify.hpp"

using namespace fatpoints;

namespace {

GridScheme grid(std::vector<std::vector<int>> m) {
  GridScheme s;
  s.mult = std::move(m);
  return s;
}

}  // namespace

TEST_CASE("shape flags on basic examples") {
  Classification ci = classify(grid({{2, 2}, {2, 2}}));
  CHECK(ci.max_mult == 2);
  CHECK(ci.homogeneous);
  CHECK(ci.almost_homogeneous);
  CHECK(ci.support_ci);
  CHECK(ci.support_acm);
  CHECK(ci.quasi_homogeneous);
  CHECK(ci.quasi_t == std::vector<long long>{2, 2});

  Classification diag = classify(grid({{2, 0}, {0, 2}}));
  CHECK(diag.homogeneous);
  CHECK(!diag.support_ci);
  CHECK(!diag.support_acm);  // both bad 2x2 diagonals
  CHECK(!diag.quasi_homogeneous);

  Classification stair = classify(grid({{2, 2}, {2, 1}}));
  CHECK(!stair.homogeneous);
  CHECK(stair.almost_homogeneous);
  CHECK(stair.quasi_homogeneous);
  CHECK(stair.quasi_t == std::vector<long long>{2, 1});

  // Top multiplicities off the staircase: m-sets {2} and {1} incomparable.
  Classification cross = classify(grid({{1, 2}, {2, 1}}));
  CHECK(cross.almost_homogeneous);
  CHECK(cross.support_ci);
  CHECK(!cross.quasi_homogeneous);
  CHECK(cross.quasi_t.empty());
}

TEST_CASE("reduced schemes: staircase supports stand in for m-sets") {
  Classification nested = classify(grid({{1, 1}, {1, 0}}));
  CHECK(nested.max_mult == 1);
  CHECK(!nested.support_ci);
  CHECK(nested.support_acm);
  CHECK(nested.quasi_homogeneous);
  CHECK(nested.quasi_t == std::vector<long long>{2, 1});
  CHECK(is_acm(grid({{1, 1}, {1, 0}})).acm);

  Classification two = classify(grid({{1, 0}, {0, 1}}));
  CHECK(!two.support_acm);
  CHECK(!two.quasi_homogeneous);
  CHECK(!is_acm(grid({{1, 0}, {0, 1}})).acm);
}

TEST_CASE("structure checks on the worked families") {
  // Homogeneous on a full grid: ACM, and the iff check is applicable.
  Section5Report full = check_section5(grid({{3, 3, 3}, {3, 3, 3}}));
  CHECK(full.acm);
  CHECK(full.ok());
  bool found = false;
  for (const auto& c : full.checks)
    if (c.name == "homogeneous_acm_iff_ci_support") {
      found = true;
      CHECK(c.applicable);
      CHECK(c.holds);
    }
  CHECK(found);

  // Homogeneous off the grid: not ACM, and the iff check still holds.
  Section5Report diag = check_section5(grid({{2, 0}, {0, 2}}));
  CHECK(!diag.acm);
  CHECK(diag.ok());

  // Almost homogeneous, ACM, m = 4: quasi-homogeneity is forced, even
  // though no row carries the top multiplicity everywhere.
  Section5Report am4 = check_section5(grid({{4, 3}, {4, 3}}));
  CHECK(am4.acm);
  CHECK(am4.cls.almost_homogeneous);
  CHECK(am4.cls.quasi_homogeneous);
  CHECK(am4.cls.quasi_t == std::vector<long long>{1, 1});
  CHECK(am4.ok());
}

TEST_CASE("the m = 3 sharpness witness") {
  GridScheme s = grid({{3, 2}, {2, 0}});
  Section5Report rep = check_section5(s);
  CHECK(rep.acm);
  CHECK(rep.cls.almost_homogeneous);
  CHECK(rep.cls.max_mult == 3);
  CHECK(!rep.cls.quasi_homogeneous);
  CHECK(rep.cls.support_acm);  // ACM forces an ACM support
  CHECK(rep.ok());             // no applicable check is violated
  REQUIRE(!rep.notes.empty());
  CHECK(rep.notes[0].find("sharp") != std::string::npos);
}

TEST_CASE("quasi-homogeneous staircases of every size are ACM") {
  // All staircase patterns t1 >= t2 >= t3 on a 3x3 grid, m = 3.
  for (int t1 = 1; t1 <= 3; ++t1)
    for (int t2 = 0; t2 <= t1; ++t2)
      for (int t3 = 0; t3 <= t2; ++t3) {
        std::vector<std::vector<int>> m(3, std::vector<int>(3, 2));
        auto fill = [&](int row, int count) {
          for (int j = 0; j < count; ++j) m[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] = 3;
        };
        fill(0, t1);
        fill(1, t2);
        fill(2, t3);
        GridScheme s = grid(m);
        Classification c = classify(s);
        CHECK(c.quasi_homogeneous);
        CHECK(is_acm(s).acm);
        CHECK(check_section5(s).ok());
      }
}
