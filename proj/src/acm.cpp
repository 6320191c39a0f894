#include "fatpoints/acm.hpp"

#include <algorithm>
#include <string>

namespace fatpoints {

SZSet s_set(const GridScheme& s) {
  validate(s);
  SZSet out;
  for (int i = 0; i < s.rows(); ++i) {
    int li = 0;
    for (int j = 0; j < s.cols(); ++j) li = std::max(li, s.at(i, j));
    for (int h = 0; h < li; ++h) {
      std::vector<long long> tup(static_cast<std::size_t>(s.cols()));
      long long z = 0;
      for (int j = 0; j < s.cols(); ++j) {
        tup[static_cast<std::size_t>(j)] = std::max(s.at(i, j) - h, 0);
        z += tup[static_cast<std::size_t>(j)];
      }
      out.tuples.push_back(std::move(tup));
      out.z_values.push_back(z);
    }
  }
  out.u = Partition::from_unsorted(out.z_values);
  if (out.u != alpha_beta(s).alpha)
    fail(Errc::InternalInconsistency, "z-values of S_Z do not sort to alpha");
  return out;
}

namespace {

// -1: a < b, 1: a > b, 0: equal, 2: incomparable (componentwise order).
int cmp_tuples(const std::vector<long long>& a,
               const std::vector<long long>& b) {
  bool le = true, ge = true;
  for (std::size_t k = 0; k < a.size(); ++k) {
    le = le && a[k] <= b[k];
    ge = ge && a[k] >= b[k];
  }
  if (le && ge) return 0;
  if (le) return -1;
  if (ge) return 1;
  return 2;
}

}  // namespace

TotalOrderCheck is_totally_ordered(const SZSet& s) {
  TotalOrderCheck out;
  out.totally_ordered = true;
  for (std::size_t a = 0; a < s.tuples.size() && out.totally_ordered; ++a)
    for (std::size_t b = a + 1; b < s.tuples.size(); ++b)
      if (cmp_tuples(s.tuples[a], s.tuples[b]) == 2) {
        out.totally_ordered = false;
        out.witness = {s.tuples[a], s.tuples[b]};
        break;
      }
  return out;
}

AcmCertificate is_acm(const GridScheme& s) {
  AlphaBeta ab = alpha_beta(s);
  AcmCertificate cert;
  cert.alpha_star = conjugate(ab.alpha);
  cert.beta = ab.beta;
  cert.acm = cert.alpha_star == cert.beta;
  if (!cert.acm) {
    std::size_t n = std::max(cert.alpha_star.size(), cert.beta.size());
    for (std::size_t k = 0; k < n; ++k)
      if (cert.alpha_star.part(k) != cert.beta.part(k)) {
        cert.mismatch_index = k;
        break;
      }
  }
  TotalOrderCheck toc = is_totally_ordered(s_set(s));
  if (toc.totally_ordered != cert.acm)
    fail(Errc::InternalInconsistency,
         "conjugate test and total-order test disagree on ACMness");
  cert.incomparable = toc.witness;
  return cert;
}

long long DiffTable::at(long long i, long long j) const {
  if (i < 0 || j < 0 || i >= rows() || j >= cols()) return 0;
  return values[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

long long DiffTable::total() const {
  long long t = 0;
  for (const auto& row : values)
    for (long long v : row) t += v;
  return t;
}

bool DiffTable::same_function(const DiffTable& other) const {
  int R = std::max(rows(), other.rows()), C = std::max(cols(), other.cols());
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < C; ++j)
      if (at(i, j) != other.at(i, j)) return false;
  return true;
}

HilbertTable acm_hilbert(const GridScheme& s, BiDegree window) {
  AcmCertificate cert = is_acm(s);
  if (!cert.acm)
    fail(Errc::NotAcm, "scheme is not ACM; its Hilbert function is not "
                       "determined by alpha alone");
  const Partition& alpha = alpha_beta(s).alpha;
  long long m = static_cast<long long>(alpha.size());
  std::vector<std::vector<long long>> w(
      static_cast<std::size_t>(window.i) + 1,
      std::vector<long long>(static_cast<std::size_t>(window.j) + 1, 0));
  for (long long i = 0; i <= window.i; ++i)
    for (long long j = 0; j <= window.j; ++j) {
      long long v = 0;
      for (long long h = 1; h <= std::min(i + 1, m); ++h)
        v += std::min(j + 1, alpha.part(static_cast<std::size_t>(h - 1)));
      w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    }
  return HilbertTable(std::move(w), border(s));
}

DiffTable acm_delta(const GridScheme& s) {
  AcmCertificate cert = is_acm(s);
  if (!cert.acm) fail(Errc::NotAcm, "delta-H staircase needs an ACM scheme");
  const Partition& u = alpha_beta(s).alpha;
  DiffTable d;
  std::size_t width = u.empty() ? 0 : static_cast<std::size_t>(u.part(0));
  for (std::size_t p = 0; p < u.size(); ++p) {
    std::vector<long long> row(width, 0);
    for (long long k = 0; k < u.part(p); ++k)
      row[static_cast<std::size_t>(k)] = 1;
    d.values.push_back(std::move(row));
  }
  return d;
}

DiffTable first_difference(const HilbertTable& t) {
  if (!t.fully_known())
    fail(Errc::UnknownEntries,
         "cannot difference a table with undetermined entries");
  auto h = [&t](long long i, long long j) -> long long {
    return (i < 0 || j < 0) ? 0 : t.at(i, j);
  };
  DiffTable d;
  d.values.assign(static_cast<std::size_t>(t.window_rows()),
                  std::vector<long long>(static_cast<std::size_t>(t.window_cols()), 0));
  for (long long i = 0; i < t.window_rows(); ++i)
    for (long long j = 0; j < t.window_cols(); ++j)
      d.values[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          h(i, j) - h(i - 1, j) - h(i, j - 1) + h(i - 1, j - 1);
  return d;
}

bool is_artinian_staircase(const DiffTable& d) {
  for (long long i = 0; i < d.rows(); ++i)
    for (long long j = 0; j < d.cols(); ++j) {
      long long v = d.at(i, j);
      if (v != 0 && v != 1) return false;
      if (v == 1) {
        if (i > 0 && d.at(i - 1, j) != 1) return false;
        if (j > 0 && d.at(i, j - 1) != 1) return false;
      }
    }
  return true;
}

Resolution resolution(const GridScheme& s) {
  AcmCertificate cert = is_acm(s);
  if (!cert.acm)
    fail(Errc::NotAcm, "minimal free resolution formula needs an ACM scheme");
  const Partition& alpha = alpha_beta(s).alpha;
  int m = static_cast<int>(alpha.size());
  Resolution r;
  r.corners.push_back({m, 0});
  r.corners.push_back({0, static_cast<int>(alpha.part(0))});
  r.vertices.push_back({m, static_cast<int>(alpha.part(alpha.size() - 1))});
  for (int i = 2; i <= m; ++i) {
    long long ai = alpha.part(static_cast<std::size_t>(i - 1));
    long long prev = alpha.part(static_cast<std::size_t>(i - 2));
    if (ai < prev) {
      r.corners.push_back({i - 1, static_cast<int>(ai)});
      r.vertices.push_back({i - 1, static_cast<int>(prev)});
    }
  }
  std::sort(r.corners.begin(), r.corners.end(), lex_less);
  std::sort(r.vertices.begin(), r.vertices.end(), lex_less);
  if (r.corners.size() != r.vertices.size() + 1)
    fail(Errc::InternalInconsistency, "|C| != |V| + 1 in resolution");
  return r;
}

namespace {

long long box_dim(long long a, long long b) {
  return (a >= 0 && b >= 0) ? (a + 1) * (b + 1) : 0;
}

}  // namespace

HilbertTable resolution_hilbert(const Resolution& r, BiDegree window) {
  int m = 0, mp = 0;
  for (BiDegree c : r.corners) {
    m = std::max(m, c.i);
    mp = std::max(mp, c.j);
  }
  auto value = [&r](long long i, long long j) {
    long long v = box_dim(i, j);
    for (BiDegree c : r.corners) v -= box_dim(i - c.i, j - c.j);
    for (BiDegree c : r.vertices) v += box_dim(i - c.i, j - c.j);
    return v;
  };
  std::vector<std::vector<long long>> w(
      static_cast<std::size_t>(window.i) + 1,
      std::vector<long long>(static_cast<std::size_t>(window.j) + 1, 0));
  for (long long i = 0; i <= window.i; ++i)
    for (long long j = 0; j <= window.j; ++j)
      w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = value(i, j);
  Border b;
  for (int j = 0; j < mp; ++j) b.bc.push_back(value(m - 1, j));
  for (int i = 0; i < m; ++i) b.br.push_back(value(i, mp - 1));
  return HilbertTable(std::move(w), std::move(b));
}

HilbertTable combinatorial_hilbert(const GridScheme& s, BiDegree window) {
  if (is_acm(s).acm) return acm_hilbert(s, window);
  AlphaBeta ab = alpha_beta(s);
  Border b = border(s);
  std::vector<std::vector<long long>> w(
      static_cast<std::size_t>(window.i) + 1,
      std::vector<long long>(static_cast<std::size_t>(window.j) + 1, kUnknown));
  for (long long i = 0; i <= window.i; ++i)
    for (long long j = 0; j <= window.j; ++j) {
      if (i >= ab.m - 1)
        w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            b.bc[static_cast<std::size_t>(std::min<long long>(j, ab.m_prime - 1))];
      else if (j >= ab.m_prime - 1)
        w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            b.br[static_cast<std::size_t>(std::min<long long>(i, ab.m - 1))];
    }
  return HilbertTable(std::move(w), std::move(b));
}

}  // namespace fatpoints
