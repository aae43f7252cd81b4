#include "martkit/interval_set.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace martkit {

IntervalSet::IntervalSet(std::vector<Interval> intervals) : parts_(std::move(intervals)) {
    for (auto& [lo, hi] : parts_) {
        if (!std::isfinite(lo) || !std::isfinite(hi))
            throw std::invalid_argument("IntervalSet: endpoints must be finite");
        if (lo > hi) std::swap(lo, hi);
    }
    normalize();
}

IntervalSet IntervalSet::single(double lo, double hi) { return IntervalSet({{lo, hi}}); }

IntervalSet IntervalSet::half_line_below(double cut, double bound) {
    if (cut < -bound) return {};
    return IntervalSet({{-bound, std::min(cut, bound)}});
}

IntervalSet IntervalSet::half_line_above(double cut, double bound) {
    if (cut > bound) return {};
    return IntervalSet({{std::max(cut, -bound), bound}});
}

void IntervalSet::normalize() {
    std::sort(parts_.begin(), parts_.end());
    std::vector<Interval> merged;
    for (const auto& iv : parts_) {
        if (!merged.empty() && iv.first <= merged.back().second) {
            merged.back().second = std::max(merged.back().second, iv.second);
        } else {
            merged.push_back(iv);
        }
    }
    parts_ = std::move(merged);
}

double IntervalSet::measure() const {
    double m = 0.0;
    for (const auto& [lo, hi] : parts_) m += hi - lo;
    return m;
}

bool IntervalSet::contains(double t) const {
    auto it = std::upper_bound(parts_.begin(), parts_.end(), Interval{t, 1e308});
    if (it == parts_.begin()) return false;
    --it;
    return t >= it->first && t <= it->second;
}

IntervalSet IntervalSet::clipped(double lo, double hi) const {
    std::vector<Interval> out;
    for (const auto& [a, b] : parts_) {
        double l = std::max(a, lo), h = std::min(b, hi);
        if (l <= h) out.push_back({l, h});
    }
    return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::complement(double lo, double hi) const {
    std::vector<Interval> out;
    double cursor = lo;
    for (const auto& [a, b] : parts_) {
        if (b < lo || a > hi) continue;
        if (a > cursor) out.push_back({cursor, std::min(a, hi)});
        cursor = std::max(cursor, b);
    }
    if (cursor < hi) out.push_back({cursor, hi});
    return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::unite(const IntervalSet& o) const {
    std::vector<Interval> all = parts_;
    all.insert(all.end(), o.parts_.begin(), o.parts_.end());
    return IntervalSet(std::move(all));
}

IntervalSet IntervalSet::intersect(const IntervalSet& o) const {
    std::vector<Interval> out;
    for (const auto& [a, b] : parts_)
        for (const auto& [c, d] : o.parts_) {
            double l = std::max(a, c), h = std::min(b, d);
            if (l <= h) out.push_back({l, h});
        }
    return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::negated() const {
    std::vector<Interval> out;
    for (const auto& [a, b] : parts_) out.push_back({-b, -a});
    return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::minkowski_sum(const IntervalSet& o) const {
    std::vector<Interval> out;
    for (const auto& [a, b] : parts_)
        for (const auto& [c, d] : o.parts_) out.push_back({a + c, b + d});
    return IntervalSet(std::move(out));
}

double IntervalSet::symmetric_difference_measure(const IntervalSet& o, double lo, double hi) const {
    IntervalSet a = clipped(lo, hi), b = o.clipped(lo, hi);
    IntervalSet common = a.intersect(b);
    return a.measure() + b.measure() - 2.0 * common.measure();
}

double IntervalSet::measure_below(double t) const {
    double m = 0.0;
    for (const auto& [lo, hi] : parts_) {
        if (t <= lo) break;
        m += std::min(t, hi) - lo;
    }
    return m;
}

}  // namespace martkit
