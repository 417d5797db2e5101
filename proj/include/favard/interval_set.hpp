#pragma once

#include <cstddef>
#include <vector>

namespace favard {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// Canonical finite union of closed intervals: sorted, pairwise disjoint,
// with strictly increasing components (hi_k < lo_{k+1}). Touching closed
// intervals merge, so the canonical form is unique.
class IntervalSet {
 public:
  IntervalSet() = default;

  // Canonicalizes arbitrary input. Rejects NaN endpoints and lo > hi.
  static IntervalSet from_raw(std::vector<Interval> raw);

  std::size_t size() const { return components_.size(); }
  bool empty() const { return components_.empty(); }
  const Interval& operator[](std::size_t i) const { return components_[i]; }
  auto begin() const { return components_.begin(); }
  auto end() const { return components_.end(); }

  double measure() const;
  bool contains(double x) const;
  double min() const;  // lowest endpoint; set must be nonempty
  double max() const;

  static IntervalSet union_of(const IntervalSet& a, const IntervalSet& b);
  static IntervalSet intersection_of(const IntervalSet& a, const IntervalSet& b);

 private:
  std::vector<Interval> components_;
};

// Size N of a greedy packing of disjoint delta-intervals I_k with
// union(I_k) inside s and s covered by the doubled intervals 2*I_k.
// Every component of s must be at least delta long.
int vitali_delta_cover(const IntervalSet& s, double delta);

}  // namespace favard
