#pragma once

#include <optional>
#include <vector>

#include "fatpoints/errors.hpp"

namespace fatpoints {

// A point of P^1 with integer homogeneous coordinates [a0 : a1].
struct ProjPoint {
  long long a0 = 0;
  long long a1 = 0;

  bool operator==(const ProjPoint&) const = default;
};

// 2x2 determinant |P Q|; zero iff P and Q name the same point of P^1.
inline long long cross(ProjPoint p, ProjPoint q) {
  return p.a0 * q.a1 - p.a1 * q.a0;
}

// A bidegree (i,j), i.e. a point of N^2.
struct BiDegree {
  int i = 0;
  int j = 0;

  bool operator==(const BiDegree&) const = default;
};

// Componentwise partial order on bidegrees.
inline bool leq(BiDegree a, BiDegree b) { return a.i <= b.i && a.j <= b.j; }

// Lexicographic order, used only to keep sets of bidegrees sorted.
inline bool lex_less(BiDegree a, BiDegree b) {
  return a.i != b.i ? a.i < b.i : a.j < b.j;
}

// A fat point scheme supported on an r x t grid of points in P^1 x P^1:
// mult[i][j] is the multiplicity of the point (row point i, column point j),
// zero meaning the point is absent.  Coordinates are optional; most of the
// combinatorial machinery never looks at them, only the linear-algebra
// oracle does.
struct GridScheme {
  std::vector<std::vector<int>> mult;
  std::optional<std::vector<ProjPoint>> row_coords;
  std::optional<std::vector<ProjPoint>> col_coords;

  int rows() const { return static_cast<int>(mult.size()); }
  int cols() const { return mult.empty() ? 0 : static_cast<int>(mult[0].size()); }
  int at(int i, int j) const { return mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  bool has_coords() const { return row_coords.has_value() && col_coords.has_value(); }
};

// Checks the invariants: rectangular non-negative multiplicity matrix with
// at least one positive entry, no all-zero row or column, and (when present)
// coordinate lists of matching length made of valid, pairwise distinct
// points of P^1.
void validate(const GridScheme& s);

// Builds a scheme from a raw matrix, deleting all-zero rows and columns.
// Fails with EmptyScheme if nothing is left.
GridScheme normalize(const std::vector<std::vector<int>>& mult);

// The reduced scheme on the same support: multiplicities clamped to 0/1.
GridScheme support(const GridScheme& s);

// deg Z = sum over points of binom(mult+1, 2).
long long degree(const GridScheme& s);

// The subscheme supported on grid row i (1-based, as rows are labelled
// R_1..R_r), normalized; column coordinates of deleted columns are dropped.
GridScheme row_subscheme(const GridScheme& s, int i);

// Likewise for grid column j (1-based).
GridScheme col_subscheme(const GridScheme& s, int j);

// Swaps the roles of the two factors of P^1 x P^1.
GridScheme transpose(const GridScheme& s);

}  // namespace fatpoints
