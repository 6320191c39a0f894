#include "fatpoints/classify.hpp"

#include <algorithm>
#include <functional>

#include "fatpoints/acm.hpp"

namespace fatpoints {

namespace {

// Row m-sets comparable pairwise under inclusion?
bool nested_row_sets(const std::vector<std::vector<bool>>& sets) {
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = a + 1; b < sets.size(); ++b) {
      bool a_le_b = true, b_le_a = true;
      for (std::size_t j = 0; j < sets[a].size(); ++j) {
        if (sets[a][j] && !sets[b][j]) a_le_b = false;
        if (sets[b][j] && !sets[a][j]) b_le_a = false;
      }
      if (!a_le_b && !b_le_a) return false;
    }
  return true;
}

}  // namespace

Classification classify(const GridScheme& s) {
  validate(s);
  Classification c;
  int m = 0;
  for (const auto& row : s.mult)
    for (int v : row) m = std::max(m, v);
  c.max_mult = m;

  c.homogeneous = true;
  c.almost_homogeneous = true;
  c.support_ci = true;
  for (const auto& row : s.mult)
    for (int v : row) {
      if (v == 0) {
        c.support_ci = false;
        continue;
      }
      if (v != m) c.homogeneous = false;
      if (v != m && v != m - 1) c.almost_homogeneous = false;
    }

  c.support_acm = true;
  for (int i = 0; i < s.rows() && c.support_acm; ++i)
    for (int i2 = i + 1; i2 < s.rows() && c.support_acm; ++i2)
      for (int j = 0; j < s.cols() && c.support_acm; ++j)
        for (int j2 = j + 1; j2 < s.cols(); ++j2) {
          bool p = s.at(i, j) > 0, q = s.at(i, j2) > 0;
          bool r = s.at(i2, j) > 0, t = s.at(i2, j2) > 0;
          if ((p && t && !q && !r) || (q && r && !p && !t)) {
            c.support_acm = false;
            break;
          }
        }

  // The m-set of a row: positions carrying the top multiplicity.  For m = 1
  // the complementary value m-1 = 0 means "absent", so the staircase
  // condition is on supports and full-grid support is not required.
  std::vector<std::vector<bool>> msets(static_cast<std::size_t>(s.rows()),
                                       std::vector<bool>(static_cast<std::size_t>(s.cols()), false));
  for (int i = 0; i < s.rows(); ++i)
    for (int j = 0; j < s.cols(); ++j)
      msets[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          s.at(i, j) == m;
  bool shape_ok = m == 1 ? c.almost_homogeneous : c.support_ci && c.almost_homogeneous;
  c.quasi_homogeneous = shape_ok && nested_row_sets(msets);
  if (c.quasi_homogeneous) {
    for (const auto& row : msets)
      c.quasi_t.push_back(std::count(row.begin(), row.end(), true));
    std::sort(c.quasi_t.begin(), c.quasi_t.end(), std::greater<>());
  }
  return c;
}

Section5Report check_section5(const GridScheme& s) {
  Section5Report rep;
  rep.acm = is_acm(s).acm;
  rep.cls = classify(s);
  const Classification& c = rep.cls;

  rep.checks.push_back({"acm_implies_support_acm", rep.acm, c.support_acm});
  rep.checks.push_back({"homogeneous_acm_iff_ci_support",
                        c.homogeneous && c.max_mult >= 2,
                        rep.acm == c.support_ci});
  rep.checks.push_back({"almost_homogeneous_m4_implies_quasi",
                        c.almost_homogeneous && rep.acm && c.max_mult >= 4,
                        c.quasi_homogeneous});
  rep.checks.push_back({"quasi_implies_acm", c.quasi_homogeneous, rep.acm});

  if (c.almost_homogeneous && rep.acm && !c.quasi_homogeneous &&
      c.max_mult >= 2 && c.max_mult <= 3)
    rep.notes.push_back(
        "ACM and almost homogeneous with m = " + std::to_string(c.max_mult) +
        " yet not quasi-homogeneous: the m >= 4 hypothesis is sharp");

  for (const auto& chk : rep.checks)
    if (chk.applicable && !chk.holds)
      fail(Errc::TheoremViolation, chk.name + " fails on this scheme");
  return rep;
}

}  // namespace fatpoints
