#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fatpoints/partition.hpp"
#include "fatpoints/scheme.hpp"

namespace fatpoints {

// Entry value of a Hilbert table that the chosen method could not determine.
inline constexpr long long kUnknown = -1;

// The two standard partitions of a fat point scheme.  Row i with
// multiplicities (m_i1..m_it) and l_i = max_j m_ij contributes the tuple
// a_ik = sum_j max(m_ij - k, 0), k = 0..l_i-1; alpha is the weakly
// decreasing rearrangement of all of them, and beta is built the same way
// from columns.  m = sum l_i and m' = sum l'_j are the respective lengths.
struct AlphaBeta {
  std::vector<std::vector<long long>> alpha_raw;  // one tuple per row
  std::vector<std::vector<long long>> beta_raw;   // one tuple per column
  Partition alpha;
  Partition beta;
  int m = 0;
  int m_prime = 0;
};

AlphaBeta alpha_beta(const GridScheme& s);

// The stabilized fringe of the Hilbert function: bc[j] = H(m-1, j) for
// j = 0..m'-1 and br[i] = H(i, m'-1) for i = 0..m-1.  H is constant in i
// beyond m-1 and in j beyond m'-1, so together with the eventual value
// (the degree, reached at the far corner) these determine H everywhere
// outside the open box [0, m-1) x [0, m'-1).
struct Border {
  std::vector<long long> bc;  // column border, length m'
  std::vector<long long> br;  // row border, length m

  long long eventual() const { return bc.empty() ? 0 : bc.back(); }

  bool operator==(const Border&) const = default;
};

// bc = partial sums of conjugate(alpha) padded with zeros to length m',
// br = partial sums of conjugate(beta) padded to length m.
Border border(const GridScheme& s);

// H(i,j) for (i,j) outside the open box: sum of the first j+1 entries of
// conjugate(alpha) when i >= m-1, symmetrically in beta when j >= m'-1, the
// degree when both.  nullopt when the value is not determined by alpha and
// beta alone.
std::optional<long long> hilbert_outside_border(const GridScheme& s,
                                                long long i, long long j);

// A rectangular window of Hilbert function values H(i,j), 0 <= i <= wi,
// 0 <= j <= wj, entries possibly kUnknown, plus the border data that answers
// queries beyond the window.
class HilbertTable {
 public:
  HilbertTable(std::vector<std::vector<long long>> window, Border b);

  int window_rows() const { return static_cast<int>(vals_.size()); }
  int window_cols() const {
    return vals_.empty() ? 0 : static_cast<int>(vals_[0].size());
  }

  // Full-plane query: window entry if (i,j) lies inside the window,
  // otherwise a border value when one applies, otherwise kUnknown.
  long long at(long long i, long long j) const;

  bool known(long long i, long long j) const { return at(i, j) != kUnknown; }
  bool fully_known() const;

  const std::vector<std::vector<long long>>& window() const { return vals_; }
  const Border& table_border() const { return border_; }
  long long eventual() const { return border_.eventual(); }

  bool operator==(const HilbertTable&) const = default;

 private:
  std::vector<std::vector<long long>> vals_;
  Border border_;
};

// H of a scheme whose support lies on a single horizontal or vertical line:
// with a = (a_0, a_1, ...) the alpha tuple of the unique row,
// H(i,j) = sum_{h=0}^{min(i, m-1)} min(j+1, a_h).  Window is the inclusive
// maximal bidegree.  Fails with NotCollinear otherwise.
HilbertTable line_hilbert(const GridScheme& s, BiDegree window);

// Checks that known entries are weakly increasing along rows and columns,
// nowhere exceed (i+1)(j+1), and that a repeat at consecutive indices forces
// the rest of that row/column to be constant (within the known range).
struct TableInvariantReport {
  bool ok = true;
  std::string violation;  // description of the first failure
};

TableInvariantReport check_table_invariants(const HilbertTable& t);

}  // namespace fatpoints
