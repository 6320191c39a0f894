#include "fatpoints/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace fatpoints {

Partition::Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0)
      fail(Errc::BadArgument, "partition parts must be positive");
    if (k > 0 && parts_[k] > parts_[k - 1])
      fail(Errc::BadArgument, "partition parts must be weakly decreasing");
  }
}

Partition Partition::from_unsorted(std::vector<long long> values) {
  for (long long v : values)
    if (v < 0) fail(Errc::BadArgument, "partition parts must be non-negative");
  std::sort(values.begin(), values.end(), std::greater<>());
  while (!values.empty() && values.back() == 0) values.pop_back();
  Partition p;
  p.parts_ = std::move(values);
  return p;
}

long long Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

long long Partition::count_ge(long long x) const {
  // parts_ is sorted decreasing: first index with part < x.
  auto it = std::lower_bound(parts_.begin(), parts_.end(), x,
                             [](long long part, long long v) { return part >= v; });
  return static_cast<long long>(it - parts_.begin());
}

Partition conjugate(const Partition& p) {
  std::vector<long long> out;
  if (!p.empty()) {
    out.reserve(static_cast<std::size_t>(p.part(0)));
    for (long long h = 1; h <= p.part(0); ++h) out.push_back(p.count_ge(h));
  }
  return Partition(std::move(out));
}

bool majorizes(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight())
    fail(Errc::UnequalWeight, "majorization needs equal weights (" +
                                  std::to_string(a.weight()) + " vs " +
                                  std::to_string(b.weight()) + ")");
  std::size_t n = std::max(a.size(), b.size());
  long long sa = 0, sb = 0;
  for (std::size_t k = 0; k < n; ++k) {
    sa += a.part(k);
    sb += b.part(k);
    if (sa < sb) return false;
  }
  return true;
}

std::vector<long long> difference(const std::vector<long long>& v) {
  std::vector<long long> out(v.size());
  long long prev = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    out[k] = v[k] - prev;
    prev = v[k];
  }
  return out;
}

std::vector<long long> partial_sums(const std::vector<long long>& v) {
  std::vector<long long> out(v.size());
  long long acc = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    acc += v[k];
    out[k] = acc;
  }
  return out;
}

std::pair<Partition, Partition> conjugate_reduction(const Partition& a,
                                                    const Partition& b) {
  if (a.empty() || b.empty())
    fail(Errc::BadArgument, "conjugate_reduction needs non-empty partitions");
  if (conjugate(a) != b)
    fail(Errc::NotConjugatePair,
         "second partition is not the conjugate of the first");

  std::vector<long long> ap(a.parts().begin() + 1, a.parts().end());
  long long a2 = a.part(1);
  std::vector<long long> bp;
  for (long long k = 0; k < a2; ++k)
    if (b.part(static_cast<std::size_t>(k)) > 1)
      bp.push_back(b.part(static_cast<std::size_t>(k)) - 1);

  Partition ar(std::move(ap)), br(std::move(bp));
  if (conjugate(ar) != br)
    fail(Errc::InternalInconsistency,
         "conjugate_reduction produced a non-conjugate pair");
  return {std::move(ar), std::move(br)};
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k) os << ',';
    os << p.parts()[k];
  }
  os << ')';
  return os.str();
}

}  // namespace fatpoints
