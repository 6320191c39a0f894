#pragma once

#include <string>
#include <vector>

#include "fatpoints/scheme.hpp"

namespace fatpoints {

// Combinatorial shape classes of a fat point scheme.  Throughout, m is the
// largest multiplicity.
//
//  homogeneous         every point present has multiplicity m
//  almost_homogeneous  every point present has multiplicity m or m-1
//  support_ci          the support is the full grid (a complete
//                      intersection of r x t points)
//  support_acm         no pair of grid rows and columns shows two points on
//                      one diagonal of the 2x2 pattern and holes on the
//                      other
//  quasi_homogeneous   full-grid support with entries in {m, m-1} and the
//                      row sets {j : mult[i][j] = m} totally ordered by
//                      inclusion, i.e. a staircase of m's over (m-1)'s up
//                      to relabelling; for m = 1 the absent points take the
//                      role of the (m-1)'s, so this degenerates to a
//                      reduced scheme with support_acm
struct Classification {
  long long max_mult = 0;
  bool homogeneous = false;
  bool almost_homogeneous = false;
  bool quasi_homogeneous = false;
  bool support_ci = false;
  bool support_acm = false;
  // Sizes of the row m-sets, weakly decreasing; filled only when
  // quasi_homogeneous.
  std::vector<long long> quasi_t;
};

Classification classify(const GridScheme& s);

// One structure theorem instance evaluated on a concrete scheme.
struct Section5Check {
  std::string name;
  bool applicable = false;
  bool holds = true;  // meaningful only when applicable
};

struct Section5Report {
  bool acm = false;
  Classification cls;
  std::vector<Section5Check> checks;
  std::vector<std::string> notes;

  bool ok() const {
    for (const auto& c : checks)
      if (c.applicable && !c.holds) return false;
    return true;
  }
};

// Evaluates, where applicable:
//   acm_implies_support_acm            ACM schemes have ACM support
//   homogeneous_acm_iff_ci_support     for homogeneous schemes with m >= 2,
//                                      ACM is equivalent to full-grid support
//   almost_homogeneous_m4_implies_quasi  almost homogeneous ACM schemes with
//                                      m >= 4 are quasi-homogeneous
//   quasi_implies_acm                  quasi-homogeneous schemes are ACM
// Fails with TheoremViolation if an applicable implication is violated
// (that would be an engine bug, not bad input).
Section5Report check_section5(const GridScheme& s);

}  // namespace fatpoints
