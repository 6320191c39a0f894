#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "fatpoints/border.hpp"
#include "fatpoints/field.hpp"
#include "fatpoints/scheme.hpp"

namespace fatpoints {

inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;  // 2^31 - 1

// Where the oracle does its linear algebra: Z/p for a prime p (fast,
// default), or exact integer arithmetic (slow, the arbiter when two primes
// are in doubt).
struct FieldConfig {
  enum class Mode { Modular, Exact };

  Mode mode = Mode::Modular;
  std::uint64_t prime = kDefaultPrime;

  static FieldConfig modular(std::uint64_t p) {
    return FieldConfig{Mode::Modular, p};
  }
  static FieldConfig exact() { return FieldConfig{Mode::Exact, 0}; }
};

// The vanishing conditions a bidegree-(i,j) form must satisfy to lie in
// I_Z: one row per pair (point P, local monomial below the multiplicity).
//
// For the point P = [a0:a1] x [b0:b1] pick a second point Q = [q0:q1]
// distinct from [a0:a1] (and S for the second factor) and substitute
//     x0 -> -a0*X0 + q0*X1,   x1 -> -a1*X0 + q1*X1
// (the adjugate of the change of variables sending the linear forms of P's
// ideal to X1 resp. Y1), likewise in y.  In the new coordinates P's ideal
// is (X1, Y1), so a form vanishes to order mu at P exactly when the
// coefficients of all monomials with exp(X1) + exp(Y1) < mu vanish; each
// such coefficient, expanded back over the standard monomial basis of
// R_(i,j), is one row.
//
// Columns are the monomials x0^(i-a) x1^a y0^(j-b) y1^b ordered
// lexicographically in (a, b), i.e. column index a*(j+1) + b.  Rows are
// grouped by grid point in row-major grid order; within a point the pairs
// (c,d) = (exp X1, exp Y1) are lexicographic.  The complement point Q is
// [-a1:a0] unless that collides with [a0:a1] in the working field, in which
// case [1:0], [0:1], [1:1] are tried in order.
struct ConditionMatrix {
  FieldConfig cfg;
  int i = 0;
  int j = 0;
  std::size_t n_rows = 0;
  std::size_t n_cols = 0;
  std::vector<std::uint64_t> mod_entries;  // row-major; Modular mode
  std::vector<mpz_class> exact_entries;    // row-major; Exact mode

  // "p i j rows cols" header (p = 0 in exact mode), then one row per line.
  std::string dump() const;
};

ConditionMatrix condition_matrix(const GridScheme& s, int i, int j,
                                 const FieldConfig& cfg);

// Rank over the configured field; fraction-free elimination in exact mode.
long long matrix_rank(const ConditionMatrix& m);

// H_Z(i,j) = rank of the condition matrix.
long long oracle_hilbert_value(const GridScheme& s, int i, int j,
                               const FieldConfig& cfg);

// Ranks over the inclusive window, with border metadata attached.
HilbertTable oracle_hilbert_table(const GridScheme& s, BiDegree window,
                                  const FieldConfig& cfg);

// Compares oracle values along the stabilized fringe (row i = m-1 for
// j = 0..m', column j = m'-1 for i = 0..m) against the combinatorial
// border.
struct BorderCheck {
  int i = 0;
  int j = 0;
  long long expected = 0;
  long long got = 0;
};

struct BorderReport {
  std::vector<BorderCheck> checks;
  std::vector<std::size_t> mismatches;  // indices into checks

  bool ok() const { return mismatches.empty(); }
};

BorderReport verify_border(const GridScheme& s, const FieldConfig& cfg);

// Evaluates the three testable ACM characterizations independently:
// (ii) the oracle's delta-H is a 0/1 staircase, (iii) conjugate(alpha) =
// beta, (iv) S_Z is totally ordered.  They must agree.
struct AcmEquivalenceReport {
  bool artinian_staircase = false;
  bool alpha_star_eq_beta = false;
  bool s_totally_ordered = false;

  bool agree() const {
    return artinian_staircase == alpha_star_eq_beta &&
           alpha_star_eq_beta == s_totally_ordered;
  }
};

AcmEquivalenceReport verify_acm_equivalence(const GridScheme& s,
                                            const FieldConfig& cfg);

// Fills in the deterministic default coordinates (row point i = [1:i],
// column point j = [1:j]) when the scheme has none.  With a seed, draws
// distinct coordinates [1:k], k in [1, 999], from SplitMix64(seed) instead.
GridScheme with_default_coords(GridScheme s);
GridScheme with_seeded_coords(GridScheme s, std::uint64_t seed);

}  // namespace fatpoints
