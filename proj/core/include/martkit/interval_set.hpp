#ifndef MARTKIT_INTERVAL_SET_HPP
#define MARTKIT_INTERVAL_SET_HPP

#include <utility>
#include <vector>

namespace martkit {

/// Finite union of disjoint closed intervals, kept sorted and merged.
/// Measures and Minkowski sums are exact.
class IntervalSet {
  public:
    using Interval = std::pair<double, double>;

    IntervalSet() = default;
    explicit IntervalSet(std::vector<Interval> intervals);
    static IntervalSet single(double lo, double hi);
    static IntervalSet half_line_below(double cut, double bound);  // [-bound, cut]
    static IntervalSet half_line_above(double cut, double bound);  // [cut, bound]

    const std::vector<Interval>& intervals() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    std::size_t size() const { return parts_.size(); }

    double measure() const;
    bool contains(double t) const;

    IntervalSet clipped(double lo, double hi) const;
    IntervalSet complement(double lo, double hi) const;
    IntervalSet unite(const IntervalSet& o) const;
    IntervalSet intersect(const IntervalSet& o) const;
    IntervalSet negated() const;
    /// Minkowski sum {a + b : a in this, b in o}.
    IntervalSet minkowski_sum(const IntervalSet& o) const;

    /// |this symdiff o| restricted to [lo, hi].
    double symmetric_difference_measure(const IntervalSet& o, double lo, double hi) const;

    /// Measure of {s in [lo, t]}; piecewise-linear in t, exact.
    double measure_below(double t) const;

  private:
    std::vector<Interval> parts_;  // sorted, disjoint, lo <= hi
    void normalize();
};

}  // namespace martkit

#endif
