#include "favard/interval_set.hpp"

#include <algorithm>
#include <cmath>

#include "favard/error.hpp"

namespace favard {

namespace {

std::vector<Interval> canonicalize(std::vector<Interval> raw) {
  std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) {
    return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
  });
  std::vector<Interval> merged;
  merged.reserve(raw.size());
  for (const Interval& iv : raw) {
    if (!merged.empty() && iv.lo <= merged.back().hi) {
      merged.back().hi = std::max(merged.back().hi, iv.hi);
    } else {
      merged.push_back(iv);
    }
  }
  return merged;
}

}  // namespace

IntervalSet IntervalSet::from_raw(std::vector<Interval> raw) {
  for (const Interval& iv : raw) {
    if (std::isnan(iv.lo) || std::isnan(iv.hi)) throw_argument("interval endpoint is NaN");
    if (iv.lo > iv.hi) throw_argument("interval has lo > hi");
  }
  IntervalSet out;
  out.components_ = canonicalize(std::move(raw));
  return out;
}

double IntervalSet::measure() const {
  double total = 0.0;
  for (const Interval& iv : components_) total += iv.hi - iv.lo;
  return total;
}

bool IntervalSet::contains(double x) const {
  auto it = std::upper_bound(components_.begin(), components_.end(), x,
                             [](double value, const Interval& iv) { return value < iv.lo; });
  if (it == components_.begin()) return false;
  --it;
  return x <= it->hi;
}

double IntervalSet::min() const {
  if (components_.empty()) throw_precondition("empty interval set has no endpoints");
  return components_.front().lo;
}

double IntervalSet::max() const {
  if (components_.empty()) throw_precondition("empty interval set has no endpoints");
  return components_.back().hi;
}

IntervalSet IntervalSet::union_of(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> raw;
  raw.reserve(a.size() + b.size());
  raw.insert(raw.end(), a.begin(), a.end());
  raw.insert(raw.end(), b.begin(), b.end());
  IntervalSet out;
  out.components_ = canonicalize(std::move(raw));
  return out;
}

IntervalSet IntervalSet::intersection_of(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> raw;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const double lo = std::max(a[i].lo, b[j].lo);
    const double hi = std::min(a[i].hi, b[j].hi);
    if (lo <= hi) raw.push_back({lo, hi});
    if (a[i].hi < b[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  IntervalSet out;
  out.components_ = std::move(raw);  // already sorted and disjoint
  return out;
}

int vitali_delta_cover(const IntervalSet& s, double delta) {
  if (!(delta > 0.0)) throw_argument("delta must be positive");
  int packed = 0;
  for (const Interval& iv : s) {
    const double len = iv.hi - iv.lo;
    // Relative slack so exact-multiple lengths computed in floating point
    // (0.3 / 0.1, ...) still count the full number of intervals.
    const double ratio = len / delta * (1.0 + 1e-12) + 1e-12;
    if (ratio < 1.0) {
      throw_precondition("component shorter than delta");
    }
    packed += static_cast<int>(ratio);
  }
  return packed;
}

}  // namespace favard
