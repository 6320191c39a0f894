#include "fatpoints/scheme.hpp"

#include <string>

namespace fatpoints {

namespace {

void validate_coord_list(const std::vector<ProjPoint>& pts, int expected,
                         const char* what) {
  if (static_cast<int>(pts.size()) != expected)
    fail(Errc::CoordinateArityMismatch,
         std::string(what) + " coordinate list has " +
             std::to_string(pts.size()) + " entries, expected " +
             std::to_string(expected));
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (pts[k].a0 == 0 && pts[k].a1 == 0)
      fail(Errc::CoordinateCollision,
           std::string(what) + " point " + std::to_string(k + 1) +
               " is [0:0], not a point of P^1");
    for (std::size_t l = 0; l < k; ++l)
      if (cross(pts[l], pts[k]) == 0)
        fail(Errc::CoordinateCollision,
             std::string(what) + " points " + std::to_string(l + 1) + " and " +
                 std::to_string(k + 1) + " coincide in P^1");
  }
}

}  // namespace

void validate(const GridScheme& s) {
  if (s.mult.empty() || s.mult[0].empty())
    fail(Errc::EmptyScheme, "empty multiplicity matrix");
  const std::size_t t = s.mult[0].size();
  for (const auto& row : s.mult)
    if (row.size() != t)
      fail(Errc::ParseError, "ragged multiplicity matrix");
  for (const auto& row : s.mult)
    for (int v : row)
      if (v < 0) fail(Errc::NegativeMultiplicity, "negative multiplicity");
  for (std::size_t i = 0; i < s.mult.size(); ++i) {
    bool any = false;
    for (int v : s.mult[i]) any = any || v > 0;
    if (!any)
      fail(Errc::ZeroRowOrColumn, "row " + std::to_string(i + 1) +
                                      " has no point; normalize the scheme");
  }
  for (std::size_t j = 0; j < t; ++j) {
    bool any = false;
    for (const auto& row : s.mult) any = any || row[j] > 0;
    if (!any)
      fail(Errc::ZeroRowOrColumn, "column " + std::to_string(j + 1) +
                                      " has no point; normalize the scheme");
  }
  if (s.row_coords.has_value() != s.col_coords.has_value())
    fail(Errc::CoordinateArityMismatch,
         "row and column coordinates must be given together");
  if (s.row_coords) validate_coord_list(*s.row_coords, s.rows(), "row");
  if (s.col_coords) validate_coord_list(*s.col_coords, s.cols(), "column");
}

GridScheme normalize(const std::vector<std::vector<int>>& mult) {
  std::size_t t = mult.empty() ? 0 : mult[0].size();
  for (const auto& row : mult) {
    if (row.size() != t) fail(Errc::ParseError, "ragged multiplicity matrix");
    for (int v : row)
      if (v < 0) fail(Errc::NegativeMultiplicity, "negative multiplicity");
  }
  std::vector<bool> keep_row(mult.size(), false), keep_col(t, false);
  for (std::size_t i = 0; i < mult.size(); ++i)
    for (std::size_t j = 0; j < t; ++j)
      if (mult[i][j] > 0) keep_row[i] = keep_col[j] = true;

  GridScheme out;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (!keep_row[i]) continue;
    std::vector<int> row;
    for (std::size_t j = 0; j < t; ++j)
      if (keep_col[j]) row.push_back(mult[i][j]);
    out.mult.push_back(std::move(row));
  }
  if (out.mult.empty())
    fail(Errc::EmptyScheme, "scheme has no point of positive multiplicity");
  return out;
}

GridScheme support(const GridScheme& s) {
  GridScheme out = s;
  for (auto& row : out.mult)
    for (int& v : row) v = v > 0 ? 1 : 0;
  return out;
}

long long degree(const GridScheme& s) {
  long long d = 0;
  for (const auto& row : s.mult)
    for (long long v : row) d += v * (v + 1) / 2;
  return d;
}

namespace {

// Restrict to one grid line (keep = row index when by_row, else column
// index; 1-based), then delete the grid lines of the other kind that lost
// all their points, carrying coordinates along.
GridScheme line_restriction(const GridScheme& s, int keep, bool by_row) {
  int n = by_row ? s.rows() : s.cols();
  if (keep < 1 || keep > n)
    fail(Errc::IndexOutOfRange,
         std::string(by_row ? "row " : "column ") + std::to_string(keep) +
             " out of range 1.." + std::to_string(n));
  GridScheme out;
  int k = keep - 1;
  if (by_row)
    out.mult.push_back(s.mult[static_cast<std::size_t>(k)]);
  else
    for (const auto& row : s.mult)
      out.mult.push_back({row[static_cast<std::size_t>(k)]});

  // Columns (resp. rows) of the restriction that kept a point.
  int m = by_row ? s.cols() : s.rows();
  std::vector<bool> keep_other(static_cast<std::size_t>(m), false);
  bool any = false;
  for (int l = 0; l < m; ++l) {
    int v = by_row ? s.at(k, l) : s.at(l, k);
    keep_other[static_cast<std::size_t>(l)] = v > 0;
    any = any || v > 0;
  }
  if (!any)
    fail(Errc::EmptyScheme, "selected line carries no point");

  if (by_row) {
    std::vector<int>& row = out.mult[0];
    std::vector<int> packed;
    for (int l = 0; l < m; ++l)
      if (keep_other[static_cast<std::size_t>(l)])
        packed.push_back(row[static_cast<std::size_t>(l)]);
    row = std::move(packed);
  } else {
    std::vector<std::vector<int>> packed;
    for (int l = 0; l < m; ++l)
      if (keep_other[static_cast<std::size_t>(l)])
        packed.push_back(std::move(out.mult[static_cast<std::size_t>(l)]));
    out.mult = std::move(packed);
  }

  if (s.has_coords()) {
    const auto& line_pts = by_row ? *s.row_coords : *s.col_coords;
    const auto& other_pts = by_row ? *s.col_coords : *s.row_coords;
    std::vector<ProjPoint> kept_line{line_pts[static_cast<std::size_t>(k)]};
    std::vector<ProjPoint> kept_other;
    for (int l = 0; l < m; ++l)
      if (keep_other[static_cast<std::size_t>(l)])
        kept_other.push_back(other_pts[static_cast<std::size_t>(l)]);
    if (by_row) {
      out.row_coords = std::move(kept_line);
      out.col_coords = std::move(kept_other);
    } else {
      out.row_coords = std::move(kept_other);
      out.col_coords = std::move(kept_line);
    }
  }
  return out;
}

}  // namespace

GridScheme row_subscheme(const GridScheme& s, int i) {
  return line_restriction(s, i, /*by_row=*/true);
}

GridScheme col_subscheme(const GridScheme& s, int j) {
  return line_restriction(s, j, /*by_row=*/false);
}

GridScheme transpose(const GridScheme& s) {
  GridScheme out;
  out.mult.assign(static_cast<std::size_t>(s.cols()),
                  std::vector<int>(static_cast<std::size_t>(s.rows()), 0));
  for (int i = 0; i < s.rows(); ++i)
    for (int j = 0; j < s.cols(); ++j)
      out.mult[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = s.at(i, j);
  out.row_coords = s.col_coords;
  out.col_coords = s.row_coords;
  return out;
}

}  // namespace fatpoints
