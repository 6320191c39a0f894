#include "fatpoints/border.hpp"

#include <algorithm>
#include <string>

namespace fatpoints {

AlphaBeta alpha_beta(const GridScheme& s) {
  validate(s);
  AlphaBeta out;
  std::vector<long long> all_a, all_b;
  for (int i = 0; i < s.rows(); ++i) {
    int li = 0;
    for (int j = 0; j < s.cols(); ++j) li = std::max(li, s.at(i, j));
    std::vector<long long> tup;
    for (int k = 0; k < li; ++k) {
      long long v = 0;
      for (int j = 0; j < s.cols(); ++j)
        v += std::max(s.at(i, j) - k, 0);
      tup.push_back(v);
    }
    out.m += li;
    all_a.insert(all_a.end(), tup.begin(), tup.end());
    out.alpha_raw.push_back(std::move(tup));
  }
  for (int j = 0; j < s.cols(); ++j) {
    int lj = 0;
    for (int i = 0; i < s.rows(); ++i) lj = std::max(lj, s.at(i, j));
    std::vector<long long> tup;
    for (int k = 0; k < lj; ++k) {
      long long v = 0;
      for (int i = 0; i < s.rows(); ++i)
        v += std::max(s.at(i, j) - k, 0);
      tup.push_back(v);
    }
    out.m_prime += lj;
    all_b.insert(all_b.end(), tup.begin(), tup.end());
    out.beta_raw.push_back(std::move(tup));
  }
  out.alpha = Partition::from_unsorted(std::move(all_a));
  out.beta = Partition::from_unsorted(std::move(all_b));

  long long d = degree(s);
  if (out.alpha.weight() != d || out.beta.weight() != d ||
      static_cast<int>(out.alpha.size()) != out.m ||
      static_cast<int>(out.beta.size()) != out.m_prime)
    fail(Errc::InternalInconsistency, "alpha/beta bookkeeping is off");
  return out;
}

namespace {

// Partial sums of conjugate(p), padded with zeros to length n.  Requires
// conjugate(p) to fit, i.e. p.part(0) <= n.
std::vector<long long> padded_sums(const Partition& p, int n) {
  if (p.part(0) > n)
    fail(Errc::InternalInconsistency, "conjugate longer than border");
  std::vector<long long> v(static_cast<std::size_t>(n), 0);
  for (long long h = 1; h <= p.part(0); ++h)
    v[static_cast<std::size_t>(h - 1)] = p.count_ge(h);
  return partial_sums(v);
}

}  // namespace

Border border(const GridScheme& s) {
  AlphaBeta ab = alpha_beta(s);
  Border b;
  b.bc = padded_sums(ab.alpha, ab.m_prime);
  b.br = padded_sums(ab.beta, ab.m);
  return b;
}

std::optional<long long> hilbert_outside_border(const GridScheme& s,
                                                long long i, long long j) {
  if (i < 0 || j < 0) fail(Errc::IndexOutOfRange, "negative bidegree");
  AlphaBeta ab = alpha_beta(s);
  if (i >= ab.m - 1 && j >= ab.m_prime - 1) return degree(s);
  if (i >= ab.m - 1) {
    long long v = 0;
    for (long long h = 1; h <= j + 1; ++h) v += ab.alpha.count_ge(h);
    return v;
  }
  if (j >= ab.m_prime - 1) {
    long long v = 0;
    for (long long h = 1; h <= i + 1; ++h) v += ab.beta.count_ge(h);
    return v;
  }
  return std::nullopt;
}

HilbertTable::HilbertTable(std::vector<std::vector<long long>> window,
                           Border b)
    : vals_(std::move(window)), border_(std::move(b)) {
  if (vals_.empty() || vals_[0].empty())
    fail(Errc::BadArgument, "empty table window");
  for (const auto& row : vals_)
    if (row.size() != vals_[0].size())
      fail(Errc::BadArgument, "ragged table window");
}

long long HilbertTable::at(long long i, long long j) const {
  if (i < 0 || j < 0) fail(Errc::IndexOutOfRange, "negative bidegree");
  if (i < window_rows() && j < window_cols())
    return vals_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  long long m = static_cast<long long>(border_.br.size());
  long long mp = static_cast<long long>(border_.bc.size());
  if (i >= m - 1 && m > 0)
    return border_.bc[static_cast<std::size_t>(std::min(j, mp - 1))];
  if (j >= mp - 1 && mp > 0)
    return border_.br[static_cast<std::size_t>(std::min(i, m - 1))];
  return kUnknown;
}

bool HilbertTable::fully_known() const {
  for (const auto& row : vals_)
    for (long long v : row)
      if (v == kUnknown) return false;
  return true;
}

HilbertTable line_hilbert(const GridScheme& s, BiDegree window) {
  validate(s);
  if (s.rows() > 1 && s.cols() > 1)
    fail(Errc::NotCollinear, "support spans more than one grid line");
  if (s.rows() > 1) {
    // One column: swap the factors, compute, swap back.
    HilbertTable t = line_hilbert(transpose(s), BiDegree{window.j, window.i});
    std::vector<std::vector<long long>> w(
        static_cast<std::size_t>(window.i) + 1,
        std::vector<long long>(static_cast<std::size_t>(window.j) + 1));
    for (int i = 0; i <= window.i; ++i)
      for (int j = 0; j <= window.j; ++j)
        w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = t.at(j, i);
    Border b = border(s);
    return HilbertTable(std::move(w), std::move(b));
  }

  AlphaBeta ab = alpha_beta(s);
  const std::vector<long long>& a = ab.alpha_raw[0];
  long long m = static_cast<long long>(a.size());
  std::vector<std::vector<long long>> w(
      static_cast<std::size_t>(window.i) + 1,
      std::vector<long long>(static_cast<std::size_t>(window.j) + 1, 0));
  for (long long i = 0; i <= window.i; ++i)
    for (long long j = 0; j <= window.j; ++j) {
      long long v = 0;
      for (long long h = 0; h <= std::min(i, m - 1); ++h)
        v += std::min(j + 1, a[static_cast<std::size_t>(h)]);
      w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    }
  return HilbertTable(std::move(w), border(s));
}

namespace {

std::string cell(long long i, long long j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

TableInvariantReport check_table_invariants(const HilbertTable& t) {
  TableInvariantReport rep;
  auto bad = [&rep](const std::string& msg) {
    if (rep.ok) {
      rep.ok = false;
      rep.violation = msg;
    }
  };
  const int R = t.window_rows(), C = t.window_cols();
  for (long long i = 0; i < R; ++i)
    for (long long j = 0; j < C; ++j) {
      long long v = t.at(i, j);
      if (v == kUnknown) continue;
      if (v < 0 || v > (i + 1) * (j + 1))
        bad("entry " + cell(i, j) + " outside [0, (i+1)(j+1)]");
    }
  // Monotone and, once flat between consecutive indices, flat forever.
  for (long long i = 0; i < R; ++i) {
    long long flat_at = -1;
    for (long long j = 0; j + 1 < C; ++j) {
      long long a = t.at(i, j), b = t.at(i, j + 1);
      if (a == kUnknown || b == kUnknown) continue;
      if (a > b) bad("row " + std::to_string(i) + " decreases at j=" + std::to_string(j));
      if (a == b && flat_at < 0) flat_at = j;
      if (flat_at >= 0 && a != b)
        bad("row " + std::to_string(i) + " grows after stabilizing at j=" +
            std::to_string(flat_at));
    }
  }
  for (long long j = 0; j < C; ++j) {
    long long flat_at = -1;
    for (long long i = 0; i + 1 < R; ++i) {
      long long a = t.at(i, j), b = t.at(i + 1, j);
      if (a == kUnknown || b == kUnknown) continue;
      if (a > b) bad("column " + std::to_string(j) + " decreases at i=" + std::to_string(i));
      if (a == b && flat_at < 0) flat_at = i;
      if (flat_at >= 0 && a != b)
        bad("column " + std::to_string(j) + " grows after stabilizing at i=" +
            std::to_string(flat_at));
    }
  }
  return rep;
}

}  // namespace fatpoints
