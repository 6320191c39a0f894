#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "fatpoints/border.hpp"
#include "fatpoints/partition.hpp"
#include "fatpoints/scheme.hpp"

namespace fatpoints {

// The multiset S_Z: row i with l_i = max_j m_ij contributes, for each level
// h = 0..l_i-1, the tuple ((m_i1 - h)+, ..., (m_it - h)+).  Its row sums,
// sorted, recover alpha.
struct SZSet {
  std::vector<std::vector<long long>> tuples;  // m tuples of length t
  std::vector<long long> z_values;             // componentwise sums
  Partition u;                                 // z_values sorted
};

SZSet s_set(const GridScheme& s);

struct TotalOrderCheck {
  bool totally_ordered = false;
  // An incomparable pair under the componentwise order, when one exists.
  std::optional<std::pair<std::vector<long long>, std::vector<long long>>>
      witness;
};

TotalOrderCheck is_totally_ordered(const SZSet& s);

// Arithmetic Cohen-Macaulayness together with the evidence: the scheme is
// ACM exactly when conjugate(alpha) = beta, equivalently when S_Z is totally
// ordered componentwise.  Both tests are run and must agree.
struct AcmCertificate {
  bool acm = false;
  Partition alpha_star;  // conjugate(alpha)
  Partition beta;
  // First position (0-based) where alpha_star and beta differ, when not ACM.
  std::optional<std::size_t> mismatch_index;
  // Incomparable pair of S_Z tuples, when not ACM.
  std::optional<std::pair<std::vector<long long>, std::vector<long long>>>
      incomparable;
};

AcmCertificate is_acm(const GridScheme& s);

// First difference table of a Hilbert function, entries implicitly 0 outside
// the stored window.
struct DiffTable {
  std::vector<std::vector<long long>> values;

  int rows() const { return static_cast<int>(values.size()); }
  int cols() const {
    return values.empty() ? 0 : static_cast<int>(values[0].size());
  }
  long long at(long long i, long long j) const;
  long long total() const;

  // Equality as functions on N^2 (windows may differ by zero fringe).
  bool same_function(const DiffTable& other) const;
};

// H of an ACM scheme on the inclusive window:
// H(i,j) = sum_{h=1}^{min(i+1, m)} min(j+1, alpha_h).  Fails with NotAcm on
// non-ACM input.
HilbertTable acm_hilbert(const GridScheme& s, BiDegree window);

// Delta H of an ACM scheme without computing H: row p (0-based) consists of
// u_{p+1} ones, where u = sorted z-values of S_Z.  Fails with NotAcm.
DiffTable acm_delta(const GridScheme& s);

// ddH(i,j) = H(i,j) - H(i-1,j) - H(i,j-1) + H(i-1,j-1) over the table's
// window (H = 0 off the first quadrant).  The window must be fully known.
DiffTable first_difference(const HilbertTable& t);

// True when all entries are 0/1 and the 1-set is closed under decreasing
// either coordinate, i.e. the diagram of an artinian 0/1 staircase.
bool is_artinian_staircase(const DiffTable& d);

// Shifts of the bigraded minimal free resolution
//   0 -> (+)_{v in V} R(-v) -> (+)_{c in C} R(-c) -> I_Z -> 0
// of an ACM scheme, read off the sorted alpha.
struct Resolution {
  std::vector<BiDegree> corners;   // C_Z, lexicographically sorted
  std::vector<BiDegree> vertices;  // V_Z, lexicographically sorted
};

Resolution resolution(const GridScheme& s);  // fails with NotAcm

// H recovered from the resolution by inclusion-exclusion of the free
// modules' bigraded dimensions.
HilbertTable resolution_hilbert(const Resolution& r, BiDegree window);

// Full table for any scheme: acm_hilbert when the scheme is ACM, otherwise
// border values where they apply and kUnknown inside the open box.
HilbertTable combinatorial_hilbert(const GridScheme& s, BiDegree window);

}  // namespace fatpoints
