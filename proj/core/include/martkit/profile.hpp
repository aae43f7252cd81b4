#ifndef MARTKIT_PROFILE_HPP
#define MARTKIT_PROFILE_HPP

#include <functional>
#include <utility>
#include <vector>

#include "martkit/interval_set.hpp"

namespace martkit {

enum class ProfileKind { piecewise_constant, piecewise_linear, callable };

/// Bounded 1-D profile f on a closed interval. Piecewise profiles are stored
/// as degree-one polynomials per piece, evaluated right-continuously at
/// breakpoints; the right domain endpoint takes the last piece's limit.
class Profile1D {
  public:
    struct Piece {
        double value = 0.0;  // f at the piece's left endpoint (from the right)
        double slope = 0.0;
    };

    Profile1D();  // zero profile on [0, 1]

    static Profile1D constant(double c, double lo, double hi);
    static Profile1D affine(double value_at_lo, double slope, double lo, double hi);
    /// breaks.size() == values.size() + 1; piecewise constant.
    static Profile1D step(std::vector<double> breaks, std::vector<double> values);
    /// Continuous piecewise linear through (breaks[k], node_values[k]).
    static Profile1D piecewise_linear(std::vector<double> breaks, std::vector<double> node_values);
    /// amplitude * chi_A on [lo, hi].
    static Profile1D indicator(const IntervalSet& a, double lo, double hi, double amplitude = 1.0);
    /// (affine restricted to A) : t -> (value_at_lo + slope (t - lo)) chi_A(t).
    static Profile1D affine_times_indicator(double value_at_lo, double slope,
                                            const IntervalSet& a, double lo, double hi);
    static Profile1D from_callable(std::function<double(double)> f, double lo, double hi,
                                   std::size_t quadrature_samples = 4096);
    /// General piecewise degree-one data.
    static Profile1D from_pieces(std::vector<double> breaks, std::vector<Piece> pieces,
                                 ProfileKind kind);
    /// Samples on a uniform grid over [lo, hi], interpolated linearly.
    static Profile1D from_samples(const std::vector<double>& samples, double lo, double hi);

    ProfileKind kind() const { return kind_; }
    double lo() const { return lo_; }
    double hi() const { return hi_; }
    const std::vector<double>& breakpoints() const { return breaks_; }

    double eval(double t) const;
    double operator()(double t) const { return eval(t); }

    /// Exact antiderivative F(t) = int_lo^t f, piecewise quadratic for
    /// piecewise profiles; composite Simpson for callables.
    double antiderivative(double t) const;

    /// [min, max] over the domain (exact for piecewise, sampled for callable).
    std::pair<double, double> range() const;

    bool is_affine(double tol) const;
    /// Values essentially in {0, amplitude} with 0 present.
    bool is_indicator(double tol, double* amplitude = nullptr) const;

    Profile1D scaled(double s) const;
    /// f(t) + (a + b (t - lo)); domain unchanged.
    Profile1D plus_affine(double a, double b) const;
    /// f(eps * t) on the reflected domain (eps = +-1).
    Profile1D reparametrized_sign(int eps) const;

  private:
    ProfileKind kind_ = ProfileKind::piecewise_constant;
    double lo_ = 0.0, hi_ = 1.0;
    std::vector<double> breaks_;          // size m+1, ascending, piecewise only
    std::vector<Piece> pieces_;           // size m
    std::vector<double> cumulative_;      // antiderivative at each breakpoint
    std::function<double(double)> fn_;    // callable only
    std::size_t quad_samples_ = 4096;

    void build_cumulative();
    std::size_t piece_index(double t) const;
};

}  // namespace martkit

#endif
