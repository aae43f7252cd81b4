#include "martkit/rank_one.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "martkit/normals.hpp"

namespace martkit {

EigenSym3 eigen_sym3(const Mat3& a) {
    // Closed-form solution of the characteristic polynomial via the
    // trigonometric method for symmetric matrices.
    double q = a.trace() / 3.0;
    Mat3 b = a - Mat3::identity() * q;
    double p2 = b.dot(b) / 6.0;
    double p = std::sqrt(std::max(p2, 0.0));

    std::array<double, 3> lam;
    if (p < 1e-14) {
        lam = {q, q, q};
    } else {
        Mat3 c = b * (1.0 / p);
        double det_c = c(0, 0) * (c(1, 1) * c(2, 2) - c(1, 2) * c(2, 1)) -
                       c(0, 1) * (c(1, 0) * c(2, 2) - c(1, 2) * c(2, 0)) +
                       c(0, 2) * (c(1, 0) * c(2, 1) - c(1, 1) * c(2, 0));
        double r = std::clamp(det_c / 2.0, -1.0, 1.0);
        double phi = std::acos(r) / 3.0;
        lam[2] = q + 2.0 * p * std::cos(phi);
        lam[0] = q + 2.0 * p * std::cos(phi + 2.0 * M_PI / 3.0);
        lam[1] = 3.0 * q - lam[0] - lam[2];
    }
    std::sort(lam.begin(), lam.end());

    EigenSym3 out;
    out.values = lam;

    // Eigenvectors by cross products of (A - lambda I) rows; Jacobi-style
    // deflation fallback for (near-)repeated roots.
    auto eigvec = [&](double lambda) -> Vec3 {
        Mat3 m = a - Mat3::identity() * lambda;
        Vec3 r0{m(0, 0), m(0, 1), m(0, 2)};
        Vec3 r1{m(1, 0), m(1, 1), m(1, 2)};
        Vec3 r2{m(2, 0), m(2, 1), m(2, 2)};
        Vec3 c0 = r0.cross(r1), c1 = r0.cross(r2), c2 = r1.cross(r2);
        Vec3 best = c0;
        if (c1.norm() > best.norm()) best = c1;
        if (c2.norm() > best.norm()) best = c2;
        if (best.norm() < 1e-12) return Vec3{0, 0, 0};
        return best.normalized();
    };

    bool degenerate = std::min(lam[1] - lam[0], lam[2] - lam[1]) < 1e-7;
    if (!degenerate) {
        for (int k = 0; k < 3; ++k) out.vectors[std::size_t(k)] = eigvec(lam[std::size_t(k)]);
        return out;
    }

    // Near-degenerate spectrum: take the best-separated eigenvalue first and
    // complete to an orthonormal basis, rotating within the repeated
    // eigenspace to diagonalize the residual (one explicit Jacobi rotation).
    int iso = (lam[1] - lam[0] > lam[2] - lam[1]) ? 0 : 2;
    Vec3 v_iso = eigvec(lam[std::size_t(iso)]);
    if (v_iso.norm() < 0.5) v_iso = Vec3{1, 0, 0};
    // Orthonormal complement.
    Vec3 t = std::abs(v_iso.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    Vec3 u = v_iso.cross(t).normalized();
    Vec3 w = v_iso.cross(u);
    // 2x2 block of A in the (u, w) plane.
    double auu = u.dot(a.apply(u)), aww = w.dot(a.apply(w)), auw = u.dot(a.apply(w));
    double ang = 0.5 * std::atan2(2.0 * auw, auu - aww);
    Vec3 q1 = u * std::cos(ang) + w * std::sin(ang);
    Vec3 q2 = u * -std::sin(ang) + w * std::cos(ang);
    double l1 = q1.dot(a.apply(q1)), l2 = q2.dot(a.apply(q2)), liso = v_iso.dot(a.apply(v_iso));

    std::array<std::pair<double, Vec3>, 3> pairs{{{liso, v_iso}, {l1, q1}, {l2, q2}}};
    std::sort(pairs.begin(), pairs.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (int k = 0; k < 3; ++k) {
        out.values[std::size_t(k)] = pairs[std::size_t(k)].first;
        out.vectors[std::size_t(k)] = pairs[std::size_t(k)].second;
    }
    return out;
}

RankOneResult rank_one_connect(const SymStrain& A, const SymStrain& B) {
    Mat3 m = (A - B).e;
    RankOneResult res;

    double scale = std::max(1.0, std::max(A.e.frobenius(), B.e.frobenius()));
    if (m.frobenius() <= tol_alg * scale) {
        res.status = RankOneStatus::zero_difference;
        return res;
    }

    EigenSym3 eig = eigen_sym3(m);
    double lmin = eig.values[0], lmid = eig.values[1], lmax = eig.values[2];
    double tol = tol_alg * std::max(1.0, m.frobenius());

    if (std::abs(lmid) > tol) {
        res.status = RankOneStatus::incompatible;  // rank 3
        return res;
    }
    if (lmax <= tol && lmin >= -tol) {
        res.status = RankOneStatus::zero_difference;
        return res;
    }
    if (lmax <= tol || lmin >= -tol) {
        // Rank one: m = lambda v v^T with a single nonzero eigenvalue.
        bool pos = lmax > tol;
        double lambda = pos ? lmax : lmin;
        Vec3 v = pos ? eig.vectors[2] : eig.vectors[0];
        res.status = RankOneStatus::one_connection;
        res.connections.push_back({v * lambda, v});
        return res;
    }

    // Generic case: lmax > 0 > lmin.
    double c1 = std::sqrt(lmax), c2 = std::sqrt(-lmin);
    double span = std::sqrt(lmax - lmin);
    const Vec3& v1 = eig.vectors[2];
    const Vec3& v2 = eig.vectors[0];
    Vec3 n_plus = (v1 * c1 + v2 * c2) / span;
    Vec3 a_plus = (v1 * c1 - v2 * c2) * span;
    Vec3 n_minus = (v1 * c1 - v2 * c2) / span;
    Vec3 a_minus = (v1 * c1 + v2 * c2) * span;

    // Canonical sign: align with the crystallographic table when the normal
    // is a twin normal, otherwise make the largest component positive.
    auto canonical = [](Vec3 n, Vec3 amp) -> RankOneConnection {
        if (auto match = match_normal(n)) {
            if ((n + match->vector).norm() < (n - match->vector).norm()) {
                n = n * -1.0;
                amp = amp * -1.0;
            }
            return {amp, n};
        }
        int imax = 0;
        for (int i = 1; i < 3; ++i)
            if (std::abs(n[i]) > std::abs(n[imax])) imax = i;
        if (n[imax] < 0) {
            n = n * -1.0;
            amp = amp * -1.0;
        }
        return {amp, n};
    };

    res.status = RankOneStatus::two_connections;
    res.connections.push_back(canonical(n_plus, a_plus));
    res.connections.push_back(canonical(n_minus, a_minus));
    return res;
}

std::array<double, 2> austenite_compatible_fractions(int i, int j) {
    if (i == j) throw std::invalid_argument("austenite_compatible_fractions: i == j");
    if (i < 1 || i > 3 || j < 1 || j > 3)
        throw std::out_of_range("austenite_compatible_fractions: indices must be in 1..3");

    // lambda e_i + (1 - lambda) e_j is diagonal and trace free, so it is
    // rank-one connected to 0 exactly when its determinant vanishes at an
    // interior point: each diagonal entry is linear in lambda, take the roots
    // in (0, 1).
    Mat3 ei = martensite_strain(i).e, ej = martensite_strain(j).e;
    std::vector<double> roots;
    for (int k = 0; k < 3; ++k) {
        double slope = ei(k, k) - ej(k, k);
        if (std::abs(slope) < tol_alg) continue;
        double lambda = -ej(k, k) / slope;
        if (lambda > tol_alg && lambda < 1.0 - tol_alg) {
            // Verify the connection really exists at this fraction.
            SymStrain mix(ei * lambda + ej * (1.0 - lambda));
            auto conn = rank_one_connect(mix, martensite_strain(0));
            if (conn.status == RankOneStatus::two_connections ||
                conn.status == RankOneStatus::one_connection)
                roots.push_back(lambda);
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](double a, double b) { return std::abs(a - b) < tol_alg; }),
                roots.end());
    if (roots.size() != 2)
        throw std::logic_error("austenite_compatible_fractions: expected exactly two fractions, got " +
                               std::to_string(roots.size()));
    return {roots[0], roots[1]};
}

}  // namespace martkit
