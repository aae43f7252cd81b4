#include "martkit/strain.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace martkit {

SymStrain::SymStrain(const Mat3& m) : e(m) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (e(i, j) != e(j, i))
                throw std::invalid_argument("SymStrain: matrix is not symmetric");
}

bool SymStrain::in_S(double tol) const {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j && std::abs(e(i, j)) > tol) return false;
    return std::abs(e.trace()) <= tol;
}

double VolumeFractions::min() const {
    return std::min({theta[0], theta[1], theta[2]});
}

bool VolumeFractions::normalized(double tol) const {
    return std::abs(sum() - 1.0) <= tol;
}

bool VolumeFractions::in_K_tilde(double tol) const {
    if (!normalized(tol)) return false;
    for (double t : theta)
        if (t < -tol || t > 1.0 + tol) return false;
    return min() <= tol;
}

SymStrain martensite_strain(int i) {
    switch (i) {
        case 0: return SymStrain::diag(0.0, 0.0, 0.0);
        case 1: return SymStrain::diag(-2.0, 1.0, 1.0);
        case 2: return SymStrain::diag(1.0, -2.0, 1.0);
        case 3: return SymStrain::diag(1.0, 1.0, -2.0);
        default:
            throw std::out_of_range("martensite_strain: variant index must be 0..3, got " +
                                    std::to_string(i));
    }
}

VolumeFractions theta_of_strain(const SymStrain& e) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j && std::abs(e(i, j)) > tol_alg)
                throw std::invalid_argument(
                    "theta_of_strain: off-diagonal entry (" + std::to_string(i) + "," +
                    std::to_string(j) + ") = " + std::to_string(e(i, j)) + " violates S");
    if (std::abs(e.e.trace()) > tol_alg)
        throw std::invalid_argument("theta_of_strain: trace " + std::to_string(e.e.trace()) +
                                    " violates S");
    VolumeFractions th;
    for (int i = 0; i < 3; ++i) th[i] = (1.0 - e(i, i)) / 3.0;
    return th;
}

SymStrain strain_of_theta(const VolumeFractions& th) {
    if (!th.normalized())
        throw std::invalid_argument("strain_of_theta: fractions sum to " +
                                    std::to_string(th.sum()) + ", expected 1");
    Mat3 m;
    for (int i = 1; i <= 3; ++i) m += martensite_strain(i).e * th[i - 1];
    return SymStrain(m);
}

namespace {

double dist_point_segment(const Mat3& p, const Mat3& a, const Mat3& b) {
    Mat3 ab = b - a;
    Mat3 ap = p - a;
    double denom = ab.dot(ab);
    double t = denom > 0.0 ? std::clamp(ap.dot(ab) / denom, 0.0, 1.0) : 0.0;
    return (ap - ab * t).frobenius();
}

double dist_to_K_impl(const Mat3& p) {
    const Mat3 e1 = martensite_strain(1).e;
    const Mat3 e2 = martensite_strain(2).e;
    const Mat3 e3 = martensite_strain(3).e;
    return std::min({dist_point_segment(p, e1, e2), dist_point_segment(p, e2, e3),
                     dist_point_segment(p, e3, e1)});
}

}  // namespace

double dist_to_K(const SymStrain& e) {
    if (!e.in_S())
        throw std::invalid_argument("dist_to_K: strain is not an S-member");
    return dist_to_K_impl(e.e);
}

double dist_to_K_general(const Mat3& a) {
    // Orthogonal projection onto S: keep the diagonal, remove the trace.
    double t = a.trace() / 3.0;
    Mat3 proj = Mat3::diag(a(0, 0) - t, a(1, 1) - t, a(2, 2) - t);
    double off2 = (a - proj).dot(a - proj);
    double in_s = dist_to_K_impl(proj);
    return std::sqrt(off2 + in_s * in_s);
}

}  // namespace martkit
