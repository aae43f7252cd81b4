#include "martkit/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace martkit {

Decomposition::Decomposition() {
    double w = 4.0;  // generous default domain, [-w, w] in every projection
    for (auto& p : profiles_) p = Profile1D::constant(0.0, -w, w);
}

Decomposition::Decomposition(std::array<Profile1D, 6> profiles, std::array<AffineMap, 3> affines)
    : profiles_(std::move(profiles)), affines_(affines) {
    AffineMap sum = affines_[0] + affines_[1] + affines_[2];
    if (std::abs(sum.constant) > tol_field || sum.gradient.norm() > tol_field)
        throw std::invalid_argument(
            "Decomposition: affine maps must sum to zero (trace-free strain), got constant " +
            std::to_string(sum.constant));
}

std::array<double, 3> Decomposition::eval_strain_diagonal(const Vec3& x) const {
    std::array<double, 6> f{};
    for (const Normal& nu : all_normals()) f[normal_index(nu)] = profile(nu).eval(nu.vector.dot(x));
    std::array<double, 3> e{};
    for (int i = 1; i <= 3; ++i) {
        int ip = cyc_next(i), im = cyc_prev(i);
        double row = affines_[std::size_t(i - 1)].eval(x);
        for (int sign : {+1, -1}) {
            row += f[normal_index(twin_normal(ip, sign))];
            row -= f[normal_index(twin_normal(im, sign))];
        }
        e[std::size_t(i - 1)] = row;
    }
    return e;
}

VolumeFractions Decomposition::eval(const Vec3& x) const {
    auto e = eval_strain_diagonal(x);
    VolumeFractions th;
    for (int i = 0; i < 3; ++i) th[i] = (1.0 - e[std::size_t(i)]) / 3.0;
    return th;
}

double Decomposition::theta_sign(int component_i, const Normal& nu) {
    if (nu.family == cyc_next(component_i)) return -1.0 / 3.0;
    if (nu.family == cyc_prev(component_i)) return +1.0 / 3.0;
    return 0.0;
}

Decomposition Decomposition::gauge_fixed() const {
    std::array<Profile1D, 6> prof = profiles_;
    std::array<AffineMap, 3> aff = affines_;
    for (const Normal& nu : all_normals()) {
        const Profile1D& f = prof[normal_index(nu)];
        double lo = f.lo(), hi = f.hi(), len = hi - lo;
        // L2 projection onto span{1, t}: solve the 2x2 normal equations with
        // exact moments of the piecewise profile.
        double m0 = f.antiderivative(hi);
        double m1 = 0.0;
        {
            // integral of t f(t) by piecewise exact Gauss (2-point per piece
            // is exact for degree <= 3 integrand).
            const auto& breaks = f.breakpoints();
            if (f.kind() == ProfileKind::callable) {
                int nq = 4096;
                double hstep = len / nq;
                double acc = 0.0;
                for (int k = 0; k < nq; ++k) {
                    double t0 = lo + k * hstep, t1 = t0 + hstep;
                    double tm = 0.5 * (t0 + t1);
                    acc += hstep / 6.0 *
                           (t0 * f.eval(t0) + 4.0 * tm * f.eval(tm) + t1 * f.eval(t1));
                }
                m1 = acc;
            } else {
                const double g = 1.0 / std::sqrt(3.0);
                for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
                    double a = breaks[k], b = breaks[k + 1];
                    double half = 0.5 * (b - a), mid = 0.5 * (a + b);
                    double t1 = mid - half * g, t2 = mid + half * g;
                    // evaluate strictly inside the piece to avoid the
                    // right-continuity seam
                    m1 += half * (t1 * f.eval(t1) + t2 * f.eval(t2));
                }
            }
        }
        double s0 = len;                                 // <1, 1>
        double s1 = 0.5 * (hi * hi - lo * lo);           // <1, t>
        double s2 = (hi * hi * hi - lo * lo * lo) / 3.0; // <t, t>
        double det = s0 * s2 - s1 * s1;
        double alpha = (m0 * s2 - s1 * m1) / det;
        double beta = (s0 * m1 - s1 * m0) / det;
        if (std::abs(alpha) < 1e-300 && std::abs(beta) < 1e-300) continue;

        prof[normal_index(nu)] = f.plus_affine(-(alpha + beta * lo), -beta);
        // Row nu.family - 1 carries +f, row nu.family + 1 carries -f.
        int row_plus = cyc_prev(nu.family), row_minus = cyc_next(nu.family);
        aff[std::size_t(row_plus - 1)].constant += alpha;
        aff[std::size_t(row_plus - 1)].gradient += nu.vector * beta;
        aff[std::size_t(row_minus - 1)].constant -= alpha;
        aff[std::size_t(row_minus - 1)].gradient += nu.vector * (-beta);
    }
    return Decomposition(std::move(prof), aff);
}

GridField Decomposition::sample_to_grid(const Grid& grid) const {
    if (grid.dim != 3) throw std::invalid_argument("sample_to_grid: need a 3-D grid");
    const int n = grid.n;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    // All six projections x . nu take lattice values (x_p +- x_q)/sqrt2, so
    // each profile is evaluated once per distinct diagonal index.
    // Table layout: sums s = kp + kq in [0, 2n-2], diffs d = kp - kq + (n-1).
    std::array<std::vector<double>, 6> tab;
    for (const Normal& nu : all_normals()) {
        std::size_t idx = normal_index(nu);
        tab[idx].resize(std::size_t(2 * n - 1));
        const Profile1D& f = profiles_[idx];
        for (int k = 0; k <= 2 * (n - 1); ++k) {
            // nu^+ = (E_p + E_q)/sqrt2 -> argument (coord(kp) + coord(kq))/sqrt2
            // nu^- = (E_p - E_q)/sqrt2 -> argument (coord(kp) - coord(kq))/sqrt2
            double arg;
            if (nu.sign > 0)
                arg = (2.0 * -grid.half_width + grid.spacing() * double(k)) * inv_sqrt2;
            else
                arg = (grid.spacing() * double(k - (n - 1))) * inv_sqrt2;
            tab[idx][std::size_t(k)] = f.eval(arg);
        }
    }

    // Axis pair (p, q) entering nu_m^+- = (E_p +- E_q)/sqrt2: p = m+1, q = m-1
    // in cyclic variant numbering, zero-based below.
    auto axes = [](int family) {
        return std::pair<int, int>{cyc_next(family) - 1, cyc_prev(family) - 1};
    };

    GridField out(grid, 3);
    std::array<std::pair<int, int>, 3> ax{axes(1), axes(2), axes(3)};
    for (int iz = 0; iz < n; ++iz) {
        for (int iy = 0; iy < n; ++iy) {
            for (int ix = 0; ix < n; ++ix) {
                std::array<int, 3> k{ix, iy, iz};
                std::array<double, 6> f;
                for (int fam = 1; fam <= 3; ++fam) {
                    auto [p, q] = ax[std::size_t(fam - 1)];
                    f[normal_index(twin_normal(fam, +1))] =
                        tab[normal_index(twin_normal(fam, +1))]
                           [std::size_t(k[std::size_t(p)] + k[std::size_t(q)])];
                    f[normal_index(twin_normal(fam, -1))] =
                        tab[normal_index(twin_normal(fam, -1))]
                           [std::size_t(k[std::size_t(p)] - k[std::size_t(q)] + (n - 1))];
                }
                Vec3 x = grid.node3(ix, iy, iz);
                for (int i = 1; i <= 3; ++i) {
                    int ip = cyc_next(i), im = cyc_prev(i);
                    double e = affines_[std::size_t(i - 1)].eval(x);
                    e += f[normal_index(twin_normal(ip, +1))] +
                         f[normal_index(twin_normal(ip, -1))];
                    e -= f[normal_index(twin_normal(im, +1))] +
                         f[normal_index(twin_normal(im, -1))];
                    out.at3(ix, iy, iz, i - 1) = (1.0 - e) / 3.0;
                }
            }
        }
    }
    return out;
}

GridField Decomposition::hyperplane_trace(int component, double alpha, const Normal& nu, int n2,
                                          double half_width2) const {
    if (component < 1 || component > 3)
        throw std::out_of_range("hyperplane_trace: component must be 1..3");
    // Constituents of theta_component live in families component +- 1.
    for (int fam : {cyc_next(component), cyc_prev(component)}) {
        for (int sign : {+1, -1}) {
            Normal mu = twin_normal(fam, sign);
            const Profile1D& f = profiles_[normal_index(mu)];
            if (std::abs(std::abs(mu.vector.dot(nu.vector)) - 1.0) < tol_alg &&
                !f.is_affine(tol_field))
                throw std::invalid_argument(
                    "hyperplane_trace: profile along " + mu.name() +
                    " is constant on planes normal to " + nu.name() +
                    "; the trace of theta_" + std::to_string(component) + " is ill-posed");
        }
    }

    auto basis = plane_basis(nu.vector);
    Grid g2(2, n2, half_width2);
    GridField out(g2, 1);
    for (int iy = 0; iy < n2; ++iy)
        for (int ix = 0; ix < n2; ++ix) {
            Vec3 p = nu.vector * alpha + basis[0] * g2.coord(ix) + basis[1] * g2.coord(iy);
            out.at2(ix, iy, 0) = eval(p)[component - 1];
        }
    return out;
}

std::array<Vec3, 2> plane_basis(const Vec3& nu) {
    int kmin = 0;
    for (int k = 1; k < 3; ++k)
        if (std::abs(nu[k]) < std::abs(nu[kmin])) kmin = k;
    Vec3 e{};
    e[kmin] = 1.0;
    Vec3 t1 = nu.cross(e).normalized();
    Vec3 t2 = nu.cross(t1);
    return {t1, t2};
}

double max_trace_half_width(double alpha, const Vec3& nu, double hw) {
    auto basis = plane_basis(nu);
    double best = 1e300;
    for (int k = 0; k < 3; ++k) {
        double span = std::abs(basis[0][k]) + std::abs(basis[1][k]);
        if (span < 1e-14) continue;
        best = std::min(best, (hw - std::abs(alpha * nu[k])) / span);
    }
    return best;
}

GridField hyperplane_trace_field(const GridField& f, double alpha, const Normal& nu, int n2,
                                 double half_width2) {
    if (f.grid().dim != 3)
        throw std::invalid_argument("hyperplane_trace_field: need a 3-D field");
    auto basis = plane_basis(nu.vector);
    Grid g2(2, n2, half_width2);
    GridField out(g2, f.channels());
    for (int iy = 0; iy < n2; ++iy)
        for (int ix = 0; ix < n2; ++ix) {
            Vec3 p = nu.vector * alpha + basis[0] * g2.coord(ix) + basis[1] * g2.coord(iy);
            for (int c = 0; c < f.channels(); ++c) out.at2(ix, iy, c) = f.sample(p, c);
        }
    return out;
}

}  // namespace martkit
