#ifndef MARTKIT_STRAIN_HPP
#define MARTKIT_STRAIN_HPP

#include <array>
#include <stdexcept>

#include "martkit/types.hpp"

namespace martkit {

/// A symmetric 3x3 strain. Members of the two-dimensional strain space S are
/// diagonal and trace free; membership is a derived property, not an
/// invariant of the type.
struct SymStrain {
    Mat3 e;

    SymStrain() = default;
    explicit SymStrain(const Mat3& m);
    static SymStrain diag(double a, double b, double c) {
        return SymStrain(Mat3::diag(a, b, c));
    }

    double operator()(int i, int j) const { return e(i, j); }
    bool in_S(double tol = tol_alg) const;

    SymStrain operator+(const SymStrain& o) const { return SymStrain(e + o.e); }
    SymStrain operator-(const SymStrain& o) const { return SymStrain(e - o.e); }
    SymStrain operator*(double s) const { return SymStrain(e * s); }
};

/// Barycentric volume fractions (theta_1, theta_2, theta_3), sum = 1.
struct VolumeFractions {
    std::array<double, 3> theta{};

    double operator[](int i) const { return theta[std::size_t(i)]; }
    double& operator[](int i) { return theta[std::size_t(i)]; }
    double sum() const { return theta[0] + theta[1] + theta[2]; }
    double min() const;

    bool normalized(double tol = tol_alg) const;
    /// In the fraction picture, membership in the triangle boundary means
    /// 0 <= theta_i <= 1, sum 1, and min_i theta_i = 0, all within tol.
    bool in_K_tilde(double tol = tol_alg) const;
};

/// Stress-free strain of phase i: e_0 = 0 (austenite) or the martensite
/// strains e_1 = diag(-2,1,1), e_2 = diag(1,-2,1), e_3 = diag(1,1,-2).
/// Throws std::out_of_range unless i in {0,1,2,3}.
SymStrain martensite_strain(int i);

/// theta_i = (1 - e_ii) / 3. Rejects non-S input with a diagnostic naming the
/// violated constraint.
VolumeFractions theta_of_strain(const SymStrain& e);

/// Sum theta_i e_i. Rejects non-normalized fractions.
SymStrain strain_of_theta(const VolumeFractions& th);

/// Frobenius distance from an S-member to the triangle boundary K, computed
/// as the minimum over the three edges conv{e_i, e_j} of the point-to-segment
/// distance.
double dist_to_K(const SymStrain& e);

/// Same distance for an arbitrary 3x3 matrix: orthogonal split into the
/// off-S part plus the in-S distance. Used for window-averaged strains that
/// are only approximately diagonal.
double dist_to_K_general(const Mat3& a);

}  // namespace martkit

#endif
