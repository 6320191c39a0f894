#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "fatpoints/errors.hpp"

namespace fatpoints {

// A partition is a weakly decreasing tuple of positive integers.  The empty
// partition is allowed; trailing zeros are never stored.
class Partition {
 public:
  Partition() = default;

  // parts must already be weakly decreasing and positive.
  explicit Partition(std::vector<long long> parts);

  // Sorts into weakly decreasing order and drops zeros.  Negative entries
  // are rejected.
  static Partition from_unsorted(std::vector<long long> values);

  const std::vector<long long>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  long long weight() const;

  // k is 0-based; parts beyond the end read as 0.
  long long part(std::size_t k) const {
    return k < parts_.size() ? parts_[k] : 0;
  }

  // Number of parts >= x (x >= 1), i.e. the x-th entry of the conjugate.
  long long count_ge(long long x) const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<long long> parts_;
};

// Conjugate partition: entry h counts the parts of p that are >= h.
Partition conjugate(const Partition& p);

// Dominance order: prefix sums of a dominate prefix sums of b, padding the
// shorter tuple with zeros.  Both must have the same weight.
bool majorizes(const Partition& a, const Partition& b);

// First differences (p1, p2-p1, ...) of an arbitrary tuple.
std::vector<long long> difference(const std::vector<long long>& v);

// Running sums (p1, p1+p2, ...); inverse of difference.
std::vector<long long> partial_sums(const std::vector<long long>& v);

// Given a conjugate pair b = conjugate(a), removes the largest part of a and
// decrements the first a_2 parts of b (dropping zeros).  The result is again
// a conjugate pair; that is checked before returning.
std::pair<Partition, Partition> conjugate_reduction(const Partition& a,
                                                    const Partition& b);

// "(6,4,3,1)"; "()" for the empty partition.
std::string to_string(const Partition& p);

}  // namespace fatpoints
