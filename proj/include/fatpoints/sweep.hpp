#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "fatpoints/oracle.hpp"
#include "fatpoints/scheme.hpp"

namespace fatpoints {

// Enumerates every normalized multiplicity grid with dimensions up to
// max_rows x max_cols and entries up to max_mult (no all-zero row/column),
// in a fixed deterministic order.
void for_each_normalized_grid(int max_rows, int max_cols, int max_mult,
                              const std::function<void(const GridScheme&)>& f);

// True when the grid is the lexicographically smallest matrix in its orbit
// under row and column permutations.  All combinatorial invariants and all
// theorems checked by the sweep are invariant under relabelling the grid
// lines, so the oracle phase works one representative per orbit.
bool is_canonical_representative(const GridScheme& s);

struct SweepOptions {
  int max_rows = 3;
  int max_cols = 3;
  int max_mult = 3;
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 1;
  int threads = 0;  // 0 = ask the hardware
  bool oracle_checks = true;
};

struct SweepSummary {
  long long schemes = 0;    // normalized grids visited
  long long acm = 0;        // of which ACM
  long long canonical = 0;  // orbit representatives given the oracle pass

  // Combinatorial phase (every scheme).
  long long majorization_failures = 0;
  long long duality_failures = 0;
  long long acm_cross_failures = 0;      // conjugate test vs total order
  long long staircase_failures = 0;      // ACM delta-H not a staircase
  long long resolution_failures = 0;     // resolution_hilbert != acm_hilbert
  long long line_failures = 0;           // line formula disagreements
  long long table_invariant_failures = 0;
  long long section5_violations = 0;

  // Oracle phase (canonical representatives, two coordinate draws each).
  long long oracle_tables = 0;
  long long border_failures = 0;          // fringe vs combinatorial border
  long long oracle_acm_disagreements = 0; // staircase test vs conjugate test
  long long acm_table_failures = 0;       // oracle vs acm/resolution tables
  long long delta_sum_failures = 0;       // delta-H margins vs conjugates
  long long oracle_invariant_failures = 0;

  std::uint64_t elapsed_ms = 0;

  bool ok() const;
  std::string to_string() const;
};

SweepSummary run_sweep(const SweepOptions& opt);

}  // namespace fatpoints
