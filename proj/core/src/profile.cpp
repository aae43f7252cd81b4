#include "martkit/profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace martkit {

namespace {
constexpr double kDomainSlack = 1e-9;
}

Profile1D::Profile1D() {
    breaks_ = {0.0, 1.0};
    pieces_ = {Piece{0.0, 0.0}};
    build_cumulative();
}

Profile1D Profile1D::constant(double c, double lo, double hi) {
    return from_pieces({lo, hi}, {Piece{c, 0.0}}, ProfileKind::piecewise_constant);
}

Profile1D Profile1D::affine(double value_at_lo, double slope, double lo, double hi) {
    return from_pieces({lo, hi}, {Piece{value_at_lo, slope}}, ProfileKind::piecewise_linear);
}

Profile1D Profile1D::step(std::vector<double> breaks, std::vector<double> values) {
    if (breaks.size() != values.size() + 1)
        throw std::invalid_argument("Profile1D::step: breaks must bound each value");
    std::vector<Piece> pieces;
    pieces.reserve(values.size());
    for (double v : values) pieces.push_back(Piece{v, 0.0});
    return from_pieces(std::move(breaks), std::move(pieces), ProfileKind::piecewise_constant);
}

Profile1D Profile1D::piecewise_linear(std::vector<double> breaks,
                                      std::vector<double> node_values) {
    if (breaks.size() != node_values.size() || breaks.size() < 2)
        throw std::invalid_argument("Profile1D::piecewise_linear: need one value per breakpoint");
    std::vector<Piece> pieces;
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
        double dt = breaks[k + 1] - breaks[k];
        pieces.push_back(Piece{node_values[k], (node_values[k + 1] - node_values[k]) / dt});
    }
    return from_pieces(std::move(breaks), std::move(pieces), ProfileKind::piecewise_linear);
}

Profile1D Profile1D::indicator(const IntervalSet& a, double lo, double hi, double amplitude) {
    return affine_times_indicator(amplitude, 0.0, a, lo, hi);
}

Profile1D Profile1D::affine_times_indicator(double value_at_lo, double slope,
                                            const IntervalSet& a, double lo, double hi) {
    std::vector<double> breaks{lo};
    IntervalSet visible = a.clipped(lo, hi);
    for (const auto& [s, e] : visible.intervals()) {
        if (s > breaks.back()) breaks.push_back(s);
        if (e > breaks.back()) breaks.push_back(e);
    }
    if (hi > breaks.back()) breaks.push_back(hi);
    std::vector<Piece> pieces;
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
        double mid = 0.5 * (breaks[k] + breaks[k + 1]);
        if (a.contains(mid)) {
            pieces.push_back(Piece{value_at_lo + slope * (breaks[k] - lo), slope});
        } else {
            pieces.push_back(Piece{0.0, 0.0});
        }
    }
    return from_pieces(std::move(breaks), std::move(pieces),
                       slope == 0.0 ? ProfileKind::piecewise_constant
                                    : ProfileKind::piecewise_linear);
}

Profile1D Profile1D::from_callable(std::function<double(double)> f, double lo, double hi,
                                   std::size_t quadrature_samples) {
    if (!(lo < hi)) throw std::invalid_argument("Profile1D: empty domain");
    Profile1D p;
    p.kind_ = ProfileKind::callable;
    p.lo_ = lo;
    p.hi_ = hi;
    p.breaks_ = {lo, hi};
    p.pieces_.clear();
    p.cumulative_.clear();
    p.fn_ = std::move(f);
    p.quad_samples_ = std::max<std::size_t>(quadrature_samples, 16);
    return p;
}

Profile1D Profile1D::from_pieces(std::vector<double> breaks, std::vector<Piece> pieces,
                                 ProfileKind kind) {
    if (breaks.size() != pieces.size() + 1 || pieces.empty())
        throw std::invalid_argument("Profile1D: breaks/pieces size mismatch");
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k)
        if (!(breaks[k] < breaks[k + 1]))
            throw std::invalid_argument("Profile1D: breakpoints must be strictly increasing");
    Profile1D p;
    p.kind_ = kind;
    p.lo_ = breaks.front();
    p.hi_ = breaks.back();
    p.breaks_ = std::move(breaks);
    p.pieces_ = std::move(pieces);
    p.build_cumulative();
    return p;
}

Profile1D Profile1D::from_samples(const std::vector<double>& samples, double lo, double hi) {
    if (samples.size() < 2) throw std::invalid_argument("Profile1D::from_samples: need >= 2");
    std::vector<double> breaks(samples.size());
    double h = (hi - lo) / double(samples.size() - 1);
    for (std::size_t k = 0; k < samples.size(); ++k) breaks[k] = lo + double(k) * h;
    breaks.back() = hi;
    return piecewise_linear(std::move(breaks), samples);
}

void Profile1D::build_cumulative() {
    cumulative_.assign(breaks_.size(), 0.0);
    for (std::size_t k = 0; k + 1 < breaks_.size(); ++k) {
        double dt = breaks_[k + 1] - breaks_[k];
        const Piece& p = pieces_[k];
        cumulative_[k + 1] = cumulative_[k] + p.value * dt + 0.5 * p.slope * dt * dt;
    }
}

std::size_t Profile1D::piece_index(double t) const {
    // Right-continuous: the piece starting at t wins at interior breakpoints.
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), t);
    if (it == breaks_.begin()) return 0;
    std::size_t idx = std::size_t(it - breaks_.begin()) - 1;
    return std::min(idx, pieces_.size() - 1);
}

double Profile1D::eval(double t) const {
    double slack = kDomainSlack * std::max(1.0, std::max(std::abs(lo_), std::abs(hi_)));
    if (t < lo_ - slack || t > hi_ + slack)
        throw std::domain_error("Profile1D: argument outside domain");
    t = std::clamp(t, lo_, hi_);
    if (kind_ == ProfileKind::callable) return fn_(t);
    std::size_t k = piece_index(t);
    return pieces_[k].value + pieces_[k].slope * (t - breaks_[k]);
}

double Profile1D::antiderivative(double t) const {
    double slack = kDomainSlack * std::max(1.0, std::max(std::abs(lo_), std::abs(hi_)));
    if (t < lo_ - slack || t > hi_ + slack)
        throw std::domain_error("Profile1D: argument outside domain");
    t = std::clamp(t, lo_, hi_);
    if (kind_ == ProfileKind::callable) {
        // Composite Simpson from lo_ to t.
        std::size_t n = quad_samples_;
        if (n % 2) ++n;
        double h = (t - lo_) / double(n);
        if (h == 0.0) return 0.0;
        double s = fn_(lo_) + fn_(t);
        for (std::size_t k = 1; k < n; ++k) s += fn_(lo_ + double(k) * h) * (k % 2 ? 4.0 : 2.0);
        return s * h / 3.0;
    }
    std::size_t k = piece_index(t);
    double dt = t - breaks_[k];
    return cumulative_[k] + pieces_[k].value * dt + 0.5 * pieces_[k].slope * dt * dt;
}

std::pair<double, double> Profile1D::range() const {
    if (kind_ == ProfileKind::callable) {
        double mn = fn_(lo_), mx = mn;
        for (std::size_t k = 1; k <= quad_samples_; ++k) {
            double v = fn_(lo_ + (hi_ - lo_) * double(k) / double(quad_samples_));
            mn = std::min(mn, v);
            mx = std::max(mx, v);
        }
        return {mn, mx};
    }
    double mn = pieces_.front().value, mx = mn;
    for (std::size_t k = 0; k < pieces_.size(); ++k) {
        double a = pieces_[k].value;
        double b = a + pieces_[k].slope * (breaks_[k + 1] - breaks_[k]);
        mn = std::min({mn, a, b});
        mx = std::max({mx, a, b});
    }
    return {mn, mx};
}

bool Profile1D::is_affine(double tol) const {
    if (kind_ == ProfileKind::callable) return false;
    double slope = pieces_.front().slope;
    double value = pieces_.front().value;
    for (std::size_t k = 0; k < pieces_.size(); ++k) {
        if (std::abs(pieces_[k].slope - slope) > tol) return false;
        double expected = value + slope * (breaks_[k] - breaks_.front());
        if (std::abs(pieces_[k].value - expected) > tol) return false;
    }
    return true;
}

bool Profile1D::is_indicator(double tol, double* amplitude) const {
    if (kind_ == ProfileKind::callable) return false;
    double amp = 0.0;
    for (std::size_t k = 0; k < pieces_.size(); ++k) {
        if (std::abs(pieces_[k].slope) > tol) return false;
        double v = pieces_[k].value;
        if (std::abs(v) <= tol) continue;
        if (amp == 0.0)
            amp = v;
        else if (std::abs(v - amp) > tol)
            return false;
    }
    if (amplitude) *amplitude = amp;
    return true;
}

Profile1D Profile1D::scaled(double s) const {
    if (kind_ == ProfileKind::callable) {
        auto f = fn_;
        return from_callable([f, s](double t) { return s * f(t); }, lo_, hi_, quad_samples_);
    }
    Profile1D p = *this;
    for (auto& piece : p.pieces_) {
        piece.value *= s;
        piece.slope *= s;
    }
    p.build_cumulative();
    return p;
}

Profile1D Profile1D::plus_affine(double a, double b) const {
    if (kind_ == ProfileKind::callable) {
        auto f = fn_;
        double lo = lo_;
        return from_callable([f, a, b, lo](double t) { return f(t) + a + b * (t - lo); }, lo_, hi_,
                             quad_samples_);
    }
    Profile1D p = *this;
    for (std::size_t k = 0; k < p.pieces_.size(); ++k) {
        p.pieces_[k].value += a + b * (p.breaks_[k] - lo_);
        p.pieces_[k].slope += b;
    }
    p.build_cumulative();
    return p;
}

Profile1D Profile1D::reparametrized_sign(int eps) const {
    if (eps == 1) return *this;
    if (eps != -1) throw std::invalid_argument("Profile1D: eps must be +-1");
    if (kind_ == ProfileKind::callable) {
        auto f = fn_;
        return from_callable([f](double t) { return f(-t); }, -hi_, -lo_, quad_samples_);
    }
    // Reflect the piecewise data; right-continuity of the image follows the
    // stored pieces left-continuously, which differs only on breakpoints.
    std::vector<double> breaks(breaks_.rbegin(), breaks_.rend());
    for (double& b : breaks) b = -b;
    std::vector<Piece> pieces;
    for (std::size_t k = pieces_.size(); k-- > 0;) {
        double right_value =
            pieces_[k].value + pieces_[k].slope * (breaks_[k + 1] - breaks_[k]);
        pieces.push_back(Piece{right_value, -pieces_[k].slope});
    }
    return from_pieces(std::move(breaks), std::move(pieces), kind_);
}

}  // namespace martkit
