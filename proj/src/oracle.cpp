#include "fatpoints/oracle.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

#include "fatpoints/acm.hpp"

namespace fatpoints {

namespace {

// The two field backends share the construction code below through this
// tiny adaptor interface: E is the element type, from_ll injects integers.

struct ModRing {
  using E = std::uint64_t;
  Fp f;
  explicit ModRing(std::uint64_t p) : f(p) {}
  E from_ll(long long v) const { return f.reduce_ll(v); }
  E add(E a, E b) const { return f.add(a, b); }
  E mul(E a, E b) const { return f.mul(a, b); }
  bool is_zero(E a) const { return a == 0; }
};

struct IntRing {
  using E = mpz_class;
  E from_ll(long long v) const { return E(static_cast<long>(v)); }
  E add(const E& a, const E& b) const { return a + b; }
  E mul(const E& a, const E& b) const { return a * b; }
  bool is_zero(const E& a) const { return a == 0; }
};

// Coefficient vectors of (u*X0 + v*X1)^k for k = 0..n, indexed by the
// exponent of X1.
template <typename Ring>
std::vector<std::vector<typename Ring::E>> linear_powers(
    const Ring& ring, typename Ring::E u, typename Ring::E v, int n) {
  std::vector<std::vector<typename Ring::E>> pows(
      static_cast<std::size_t>(n) + 1);
  pows[0] = {ring.from_ll(1)};
  for (int k = 1; k <= n; ++k) {
    const auto& prev = pows[static_cast<std::size_t>(k - 1)];
    std::vector<typename Ring::E> cur(static_cast<std::size_t>(k) + 1,
                                      ring.from_ll(0));
    for (int c = 0; c < k; ++c) {
      cur[static_cast<std::size_t>(c)] =
          ring.add(cur[static_cast<std::size_t>(c)],
                   ring.mul(prev[static_cast<std::size_t>(c)], u));
      cur[static_cast<std::size_t>(c + 1)] =
          ring.add(cur[static_cast<std::size_t>(c + 1)],
                   ring.mul(prev[static_cast<std::size_t>(c)], v));
    }
    pows[static_cast<std::size_t>(k)] = std::move(cur);
  }
  return pows;
}

// For one point [a0:a1] of P^1 and degree n, the table T[a][c] =
// coefficient of X1^c in (-a0*X0 + q0*X1)^(n-a) * (-a1*X0 + q1*X1)^a,
// where [q0:q1] is the complement point.  A degree-n form F(x0,x1) with
// coefficient vector (f_a) then has X1'-expansion sum_a f_a T[a][.] up to
// the nonzero global factor cross(P,Q)^n; row a of T evaluated against F's
// coefficients extracts the degree-c coefficient in the chart where P's
// linear form became X1.
template <typename Ring>
std::vector<std::vector<typename Ring::E>> chart_table(
    const Ring& ring, typename Ring::E a0, typename Ring::E a1, int n) {
  // Complement candidates; the first one distinct from [a0:a1] in the
  // working field wins.  Over the integers [-a1:a0] always works; mod p it
  // can collide, and then one of [1:0], [0:1], [1:1] cannot (P^1 over any
  // field with at least 3 elements has at least 4 points... at least 3 of
  // these 4 candidates are distinct points, at most one equals P).
  struct Cand {
    long long q0, q1;
  };
  typename Ring::E q0{}, q1{};
  bool found = false;
  const typename Ring::E na1 = ring.mul(ring.from_ll(-1), a1);
  // [-a1:a0] expressed through ring elements of the point itself:
  {
    typename Ring::E c0 = na1, c1 = a0;
    typename Ring::E cr = ring.add(ring.mul(a0, c1),
                                   ring.mul(ring.from_ll(-1), ring.mul(a1, c0)));
    if (!ring.is_zero(cr)) {
      q0 = c0;
      q1 = c1;
      found = true;
    }
  }
  if (!found) {
    for (Cand c : {Cand{1, 0}, Cand{0, 1}, Cand{1, 1}}) {
      typename Ring::E c0 = ring.from_ll(c.q0), c1 = ring.from_ll(c.q1);
      typename Ring::E cr = ring.add(
          ring.mul(a0, c1), ring.mul(ring.from_ll(-1), ring.mul(a1, c0)));
      if (!ring.is_zero(cr)) {
        q0 = c0;
        q1 = c1;
        found = true;
        break;
      }
    }
  }
  if (!found)
    fail(Errc::SingularChart,
         "no complement point found; the working field degenerated");

  const typename Ring::E na0 = ring.mul(ring.from_ll(-1), a0);
  auto p0 = linear_powers(ring, na0, q0, n);  // (-a0*X0 + q0*X1)^k
  auto p1 = linear_powers(ring, na1, q1, n);  // (-a1*X0 + q1*X1)^k

  std::vector<std::vector<typename Ring::E>> table(
      static_cast<std::size_t>(n) + 1,
      std::vector<typename Ring::E>(static_cast<std::size_t>(n) + 1,
                                    ring.from_ll(0)));
  for (int a = 0; a <= n; ++a) {
    const auto& f = p0[static_cast<std::size_t>(n - a)];
    const auto& g = p1[static_cast<std::size_t>(a)];
    for (std::size_t c = 0; c < f.size(); ++c)
      for (std::size_t d = 0; d < g.size(); ++d) {
        auto& slot = table[static_cast<std::size_t>(a)][c + d];
        slot = ring.add(slot, ring.mul(f[c], g[d]));
      }
  }
  return table;
}

template <typename Ring>
std::vector<typename Ring::E> build_entries(const Ring& ring,
                                            const GridScheme& s, int i, int j,
                                            std::size_t* out_rows) {
  const auto& rows_pts = *s.row_coords;
  const auto& cols_pts = *s.col_coords;

  std::vector<std::vector<std::vector<typename Ring::E>>> xt, yt;
  xt.reserve(rows_pts.size());
  for (const ProjPoint& p : rows_pts)
    xt.push_back(chart_table(ring, ring.from_ll(p.a0), ring.from_ll(p.a1), i));
  yt.reserve(cols_pts.size());
  for (const ProjPoint& p : cols_pts)
    yt.push_back(chart_table(ring, ring.from_ll(p.a0), ring.from_ll(p.a1), j));

  const std::size_t n_cols = static_cast<std::size_t>(i + 1) *
                             static_cast<std::size_t>(j + 1);
  std::vector<typename Ring::E> entries;
  std::size_t n_rows = 0;
  for (int gi = 0; gi < s.rows(); ++gi)
    for (int gj = 0; gj < s.cols(); ++gj) {
      int mu = s.at(gi, gj);
      if (mu <= 0) continue;
      const auto& X = xt[static_cast<std::size_t>(gi)];
      const auto& Y = yt[static_cast<std::size_t>(gj)];
      for (int c = 0; c <= std::min(i, mu - 1); ++c)
        for (int d = 0; d <= std::min(j, mu - 1 - c); ++d) {
          // One row: the (c,d) coefficient functional at this point.
          for (int a = 0; a <= i; ++a)
            for (int b = 0; b <= j; ++b)
              entries.push_back(
                  ring.mul(X[static_cast<std::size_t>(a)]
                            [static_cast<std::size_t>(c)],
                           Y[static_cast<std::size_t>(b)]
                            [static_cast<std::size_t>(d)]));
          ++n_rows;
        }
    }
  (void)n_cols;
  *out_rows = n_rows;
  return entries;
}

// Pairwise distinctness of the coordinate points after reduction mod p;
// collapsing would silently change the scheme.
void check_mod_p_distinct(const Fp& f, const std::vector<ProjPoint>& pts,
                          const char* what) {
  for (std::size_t k = 0; k < pts.size(); ++k) {
    std::uint64_t a0 = f.reduce_ll(pts[k].a0), a1 = f.reduce_ll(pts[k].a1);
    if (a0 == 0 && a1 == 0)
      fail(Errc::BadPrime, std::string("prime kills ") + what + " point " +
                               std::to_string(k + 1));
    for (std::size_t l = k + 1; l < pts.size(); ++l) {
      std::uint64_t b0 = f.reduce_ll(pts[l].a0), b1 = f.reduce_ll(pts[l].a1);
      if (f.sub(f.mul(a0, b1), f.mul(a1, b0)) == 0)
        fail(Errc::BadPrime, std::string("prime identifies ") + what +
                                 " points " + std::to_string(k + 1) + " and " +
                                 std::to_string(l + 1));
    }
  }
}

int max_mult(const GridScheme& s) {
  int m = 0;
  for (const auto& row : s.mult)
    for (int v : row) m = std::max(m, v);
  return m;
}

}  // namespace

ConditionMatrix condition_matrix(const GridScheme& s, int i, int j,
                                 const FieldConfig& cfg) {
  validate(s);
  if (i < 0 || j < 0) fail(Errc::IndexOutOfRange, "negative bidegree");
  if (!s.has_coords())
    fail(Errc::MissingCoordinates,
         "the oracle needs explicit point coordinates");

  ConditionMatrix m;
  m.cfg = cfg;
  m.i = i;
  m.j = j;
  m.n_cols = static_cast<std::size_t>(i + 1) * static_cast<std::size_t>(j + 1);

  if (cfg.mode == FieldConfig::Mode::Modular) {
    ModRing ring(cfg.prime);  // validates primality
    if (cfg.prime <= static_cast<std::uint64_t>(i + j))
      fail(Errc::BadPrime, "prime must exceed i + j = " + std::to_string(i + j));
    if (cfg.prime <= static_cast<std::uint64_t>(max_mult(s)))
      fail(Errc::BadPrime, "prime must exceed the largest multiplicity");
    check_mod_p_distinct(ring.f, *s.row_coords, "row");
    check_mod_p_distinct(ring.f, *s.col_coords, "column");
    m.mod_entries = build_entries(ring, s, i, j, &m.n_rows);
  } else {
    IntRing ring;
    m.exact_entries = build_entries(ring, s, i, j, &m.n_rows);
  }
  return m;
}

std::string ConditionMatrix::dump() const {
  std::ostringstream os;
  os << (cfg.mode == FieldConfig::Mode::Modular ? cfg.prime : 0) << ' ' << i
     << ' ' << j << ' ' << n_rows << ' ' << n_cols << '\n';
  for (std::size_t r = 0; r < n_rows; ++r) {
    for (std::size_t c = 0; c < n_cols; ++c) {
      if (c) os << ' ';
      if (cfg.mode == FieldConfig::Mode::Modular)
        os << mod_entries[r * n_cols + c];
      else
        os << exact_entries[r * n_cols + c].get_str();
    }
    os << '\n';
  }
  return os.str();
}

namespace {

long long rank_mod(std::vector<std::uint64_t> a, std::size_t rows,
                   std::size_t cols, const Fp& f) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && a[piv * cols + col] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (std::size_t c = col; c < cols; ++c)
        std::swap(a[piv * cols + c], a[rank * cols + c]);
    std::uint64_t inv = f.inv(a[rank * cols + col]);
    for (std::size_t c = col; c < cols; ++c)
      a[rank * cols + c] = f.mul(a[rank * cols + c], inv);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      std::uint64_t factor = a[r * cols + col];
      if (factor == 0) continue;
      a[r * cols + col] = 0;
      for (std::size_t c = col + 1; c < cols; ++c)
        a[r * cols + c] =
            f.sub(a[r * cols + c], f.mul(factor, a[rank * cols + c]));
    }
    ++rank;
  }
  return static_cast<long long>(rank);
}

// Fraction-free (Bareiss) elimination: every division is exact, entries stay
// minors of the input matrix.
long long rank_exact(std::vector<mpz_class> a, std::size_t rows,
                     std::size_t cols) {
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && a[piv * cols + col] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (std::size_t c = col; c < cols; ++c)
        std::swap(a[piv * cols + c], a[rank * cols + c]);
    const mpz_class& pivot = a[rank * cols + col];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      mpz_class factor = a[r * cols + col];
      for (std::size_t c = col + 1; c < cols; ++c) {
        mpz_class num = a[r * cols + c] * pivot - factor * a[rank * cols + c];
        mpz_divexact(a[r * cols + c].get_mpz_t(), num.get_mpz_t(),
                     prev.get_mpz_t());
      }
      a[r * cols + col] = 0;
    }
    prev = pivot;
    ++rank;
  }
  return static_cast<long long>(rank);
}

}  // namespace

long long matrix_rank(const ConditionMatrix& m) {
  if (m.n_rows == 0 || m.n_cols == 0) return 0;
  if (m.cfg.mode == FieldConfig::Mode::Modular)
    return rank_mod(m.mod_entries, m.n_rows, m.n_cols, Fp(m.cfg.prime));
  return rank_exact(m.exact_entries, m.n_rows, m.n_cols);
}

long long oracle_hilbert_value(const GridScheme& s, int i, int j,
                               const FieldConfig& cfg) {
  return matrix_rank(condition_matrix(s, i, j, cfg));
}

HilbertTable oracle_hilbert_table(const GridScheme& s, BiDegree window,
                                  const FieldConfig& cfg) {
  if (window.i < 0 || window.j < 0)
    fail(Errc::IndexOutOfRange, "negative window");
  std::vector<std::vector<long long>> w(
      static_cast<std::size_t>(window.i) + 1,
      std::vector<long long>(static_cast<std::size_t>(window.j) + 1, 0));
  for (int i = 0; i <= window.i; ++i)
    for (int j = 0; j <= window.j; ++j)
      w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          oracle_hilbert_value(s, i, j, cfg);
  return HilbertTable(std::move(w), border(s));
}

BorderReport verify_border(const GridScheme& s, const FieldConfig& cfg) {
  AlphaBeta ab = alpha_beta(s);
  Border b = border(s);
  long long d = degree(s);
  BorderReport rep;
  auto expected_bc = [&](long long j) {
    return j < ab.m_prime ? b.bc[static_cast<std::size_t>(j)] : d;
  };
  auto expected_br = [&](long long i) {
    return i < ab.m ? b.br[static_cast<std::size_t>(i)] : d;
  };
  for (int j = 0; j <= ab.m_prime; ++j)
    rep.checks.push_back({ab.m - 1, j, expected_bc(j),
                          oracle_hilbert_value(s, ab.m - 1, j, cfg)});
  for (int i = 0; i <= ab.m; ++i)
    rep.checks.push_back({i, ab.m_prime - 1, expected_br(i),
                          oracle_hilbert_value(s, i, ab.m_prime - 1, cfg)});
  for (std::size_t k = 0; k < rep.checks.size(); ++k)
    if (rep.checks[k].expected != rep.checks[k].got) rep.mismatches.push_back(k);
  return rep;
}

AcmEquivalenceReport verify_acm_equivalence(const GridScheme& s,
                                            const FieldConfig& cfg) {
  AlphaBeta ab = alpha_beta(s);
  AcmEquivalenceReport rep;
  rep.alpha_star_eq_beta = conjugate(ab.alpha) == ab.beta;
  rep.s_totally_ordered = is_totally_ordered(s_set(s)).totally_ordered;
  HilbertTable t =
      oracle_hilbert_table(s, BiDegree{ab.m, ab.m_prime}, cfg);
  rep.artinian_staircase = is_artinian_staircase(first_difference(t));
  return rep;
}

namespace {

std::vector<ProjPoint> affine_points(const std::vector<long long>& ks) {
  std::vector<ProjPoint> pts;
  pts.reserve(ks.size());
  for (long long k : ks) pts.push_back({1, k});
  return pts;
}

std::vector<long long> distinct_draw(SplitMix64& rng, int n) {
  std::set<long long> seen;
  std::vector<long long> out;
  while (static_cast<int>(out.size()) < n) {
    long long k = static_cast<long long>(rng.range(1, 999));
    if (seen.insert(k).second) out.push_back(k);
  }
  return out;
}

}  // namespace

GridScheme with_default_coords(GridScheme s) {
  if (s.has_coords()) return s;
  std::vector<long long> rk, ck;
  for (int i = 1; i <= s.rows(); ++i) rk.push_back(i);
  for (int j = 1; j <= s.cols(); ++j) ck.push_back(j);
  s.row_coords = affine_points(rk);
  s.col_coords = affine_points(ck);
  return s;
}

GridScheme with_seeded_coords(GridScheme s, std::uint64_t seed) {
  if (s.has_coords()) return s;
  SplitMix64 rng(seed);
  s.row_coords = affine_points(distinct_draw(rng, s.rows()));
  s.col_coords = affine_points(distinct_draw(rng, s.cols()));
  return s;
}

}  // namespace fatpoints
