#include "doctest.h"

#include <functional>
#include <vector>

#include "fatpoints/partition.hpp"

using namespace fatpoints;

namespace {

// All partitions whose Ferrers diagram fits in a rows x cols box.
void enumerate_in_box(int rows, int cols, std::vector<long long>& acc,
                      const std::function<void(const Partition&)>& f) {
  f(Partition(acc));
  if (static_cast<int>(acc.size()) == rows) return;
  long long hi = acc.empty() ? cols : acc.back();
  for (long long v = hi; v >= 1; --v) {
    acc.push_back(v);
    enumerate_in_box(rows, cols, acc, f);
    acc.pop_back();
  }
}

}  // namespace

TEST_CASE("partition construction and basic queries") {
  Partition p({6, 4, 3, 1});
  CHECK(p.size() == 4);
  CHECK(p.weight() == 14);
  CHECK(p.part(0) == 6);
  CHECK(p.part(3) == 1);
  CHECK(p.part(4) == 0);
  CHECK(p.part(100) == 0);
  CHECK(to_string(p) == "(6,4,3,1)");
  CHECK(to_string(Partition()) == "()");

  CHECK(Partition::from_unsorted({1, 0, 3, 0, 2}) == Partition({3, 2, 1}));
  CHECK_THROWS_AS((void)Partition::from_unsorted({2, -1}), Error);
  CHECK_THROWS_AS((void)Partition({3, 4}), Error);  // not decreasing
}

TEST_CASE("count_ge matches a direct scan") {
  Partition p({7, 5, 4, 3, 3, 2, 2, 1, 1});
  for (long long x = 1; x <= 9; ++x) {
    long long direct = 0;
    for (long long v : p.parts()) direct += v >= x ? 1 : 0;
    CHECK(p.count_ge(x) == direct);
  }
  CHECK(p.count_ge(1) == 9);
  CHECK(p.count_ge(8) == 0);
}

TEST_CASE("conjugate of the worked Ferrers example") {
  CHECK(conjugate(Partition({4, 4, 3, 1})) == Partition({4, 3, 3, 2}));
  CHECK(conjugate(Partition()) == Partition());
  CHECK(conjugate(Partition({5})) == Partition({1, 1, 1, 1, 1}));
  CHECK(conjugate(Partition({1, 1, 1, 1, 1})) == Partition({5}));
}

TEST_CASE("conjugation is an involution on every partition in a 9x9 box") {
  std::vector<long long> acc;
  long long seen = 0;
  enumerate_in_box(9, 9, acc, [&](const Partition& p) {
    ++seen;
    Partition c = conjugate(p);
    CHECK(conjugate(c) == p);
    CHECK(c.weight() == p.weight());
    // Entry h of the conjugate counts parts >= h.
    for (std::size_t h = 1; h <= 9; ++h)
      CHECK(c.part(h - 1) == p.count_ge(static_cast<long long>(h)));
    if (!p.empty()) {
      CHECK(c.part(0) == static_cast<long long>(p.size()));
      CHECK(c.size() == static_cast<std::size_t>(p.part(0)));
    }
  });
  CHECK(seen == 48620);  // binom(18, 9)
}

TEST_CASE("majorization basics") {
  CHECK(majorizes(Partition({4, 3, 3, 2}), Partition({3, 3, 3, 3})));
  CHECK(majorizes(Partition({4}), Partition({1, 1, 1, 1})));
  // Incomparable pair of weight 12: prefixes 5 < 6 but 5+5 > 6+3.
  CHECK(!majorizes(Partition({5, 5, 1, 1}), Partition({6, 3, 3})));
  CHECK(!majorizes(Partition({6, 3, 3}), Partition({5, 5, 1, 1})));
  CHECK(majorizes(Partition({2, 2}), Partition({2, 2})));
  CHECK_THROWS_AS((void)majorizes(Partition({2}), Partition({3})), Error);
}

TEST_CASE("majorization is a partial order with conjugation antitone") {
  // All partitions of weight 10 fit in a 10x10 box.
  std::vector<Partition> of10;
  std::vector<long long> acc;
  enumerate_in_box(10, 10, acc, [&](const Partition& p) {
    if (p.weight() == 10) of10.push_back(p);
  });
  CHECK(of10.size() == 42);  // partition number p(10)
  for (const auto& a : of10)
    for (const auto& b : of10) {
      bool ab = majorizes(a, b), ba = majorizes(b, a);
      if (ab && ba) CHECK(a == b);                      // antisymmetry
      CHECK(majorizes(a, b) == majorizes(conjugate(b), conjugate(a)));
      for (const auto& c : of10)                        // transitivity
        if (ab && majorizes(b, c)) CHECK(majorizes(a, c));
    }
}

TEST_CASE("difference and partial_sums are inverse") {
  std::vector<long long> v{12, 20, 24, 26, 27, 28, 28, 28, 28};
  CHECK(difference(v) ==
        std::vector<long long>{12, 8, 4, 2, 1, 1, 0, 0, 0});
  CHECK(partial_sums(difference(v)) == v);
  CHECK(difference(partial_sums(v)) == v);
  CHECK(difference({}).empty());
  CHECK(partial_sums({}).empty());
}

TEST_CASE("conjugate_reduction strips the largest part consistently") {
  Partition a({5, 3, 2, 1, 1});
  auto [a1, b1] = conjugate_reduction(a, conjugate(a));
  CHECK(a1 == Partition({3, 2, 1, 1}));
  CHECK(b1 == Partition({4, 2, 1}));
  CHECK(conjugate(a1) == b1);

  // (5,3,2,1,1) is self-conjugate, so pairing it with itself is fine; a
  // genuinely non-conjugate pair must be rejected.
  CHECK_THROWS_AS((void)conjugate_reduction(Partition({3, 1}),
                                            Partition({3, 1})),
                  Error);

  // Every reduction of a conjugate pair in an 8x8 box is again one.
  std::vector<long long> acc;
  enumerate_in_box(8, 8, acc, [&](const Partition& p) {
    if (p.empty()) return;
    auto [pa, pb] = conjugate_reduction(p, conjugate(p));
    CHECK(conjugate(pa) == pb);
    CHECK(pa.weight() == p.weight() - p.part(0));
  });
}
