#include "martkit/generators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace martkit {

namespace {

const double sqrt2 = std::sqrt(2.0);

void require_domain(const Profile1D& f, double w, const std::string& who) {
    if (f.lo() > -w + 1e-12 || f.hi() < w - 1e-12)
        throw std::invalid_argument(who + ": profile domain [" + std::to_string(f.lo()) + ", " +
                                    std::to_string(f.hi()) + "] does not cover the projection window [" +
                                    std::to_string(-w) + ", " + std::to_string(w) + "]");
}

void require_variant(int i, const std::string& who) {
    if (i < 1 || i > 3) throw std::out_of_range(who + ": variant index must be 1..3");
}

std::array<Profile1D, 6> zero_profiles(double w) {
    std::array<Profile1D, 6> prof;
    for (auto& p : prof) p = Profile1D::constant(0.0, -w, w);
    return prof;
}

}  // namespace

double projection_window(double domain_half_width) { return sqrt2 * domain_half_width + 1e-9; }

std::string family_name(Family f) {
    switch (f) {
        case Family::two_variant: return "two_variant";
        case Family::second_order_laminate: return "second_order_laminate";
        case Family::checkerboard: return "checkerboard";
        case Family::triple_intersection: return "triple_intersection";
        case Family::austenite_example: return "austenite_example";
    }
    return "unknown";
}

Family family_of(const ConfigSpec& spec) {
    return std::visit(
        [](const auto& s) -> Family {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, TwoVariantSpec>) return Family::two_variant;
            else if constexpr (std::is_same_v<T, SecondOrderLaminateSpec>)
                return Family::second_order_laminate;
            else if constexpr (std::is_same_v<T, CheckerboardSpec>) return Family::checkerboard;
            else if constexpr (std::is_same_v<T, TripleIntersectionSpec>)
                return Family::triple_intersection;
            else
                return Family::austenite_example;
        },
        spec);
}

GridField DisplacementField::sample(const Grid& grid) const {
    if (grid.dim != 3) throw std::invalid_argument("DisplacementField::sample: need a 3-D grid");
    GridField out(grid, 3);
    for (int iz = 0; iz < grid.n; ++iz)
        for (int iy = 0; iy < grid.n; ++iy)
            for (int ix = 0; ix < grid.n; ++ix) {
                Vec3 v = u(grid.node3(ix, iy, iz));
                out.at3(ix, iy, iz, 0) = v.x;
                out.at3(ix, iy, iz, 1) = v.y;
                out.at3(ix, iy, iz, 2) = v.z;
            }
    return out;
}

DisplacementField assemble_displacement(const Decomposition& d, std::string provenance) {
    // Each profile f_nu with nu = (E_p + sigma E_q)/sqrt2 in family m
    // contributes u_p -= sqrt2 F(x.nu), u_q += sigma sqrt2 F(x.nu) where
    // p = m+1, q = m-1 and F' = f. The affine maps contribute the unique
    // polynomial displacement with e(u) = diag(g_1, g_2, g_3).
    struct Part {
        Profile1D f;
        Vec3 nu;
        int p, q;       // zero-based component indices
        double sigma;
    };
    std::vector<Part> parts;
    for (const Normal& nu : all_normals()) {
        parts.push_back(Part{d.profile(nu), nu.vector, cyc_next(nu.family) - 1,
                             cyc_prev(nu.family) - 1, double(nu.sign)});
    }
    std::array<AffineMap, 3> g = d.affines();

    auto eval = [parts, g](const Vec3& x) -> Vec3 {
        Vec3 u{};
        for (const Part& part : parts) {
            double F = part.f.antiderivative(part.nu.dot(x));
            u[part.p] += -sqrt2 * F;
            u[part.q] += part.sigma * sqrt2 * F;
        }
        for (int i = 0; i < 3; ++i) {
            double c = g[std::size_t(i)].constant;
            Vec3 grad = g[std::size_t(i)].gradient;
            double ui = c * x[i] + 0.5 * grad[i] * x[i] * x[i];
            for (int j = 0; j < 3; ++j) {
                if (j == i) continue;
                ui += x[i] * grad[j] * x[j];
            }
            u[i] += ui;
        }
        // cross corrections: u_i -= 1/2 sum_{j != i} (grad g_j)_i x_j^2
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (j == i) continue;
                u[i] -= 0.5 * g[std::size_t(j)].gradient[i] * x[j] * x[j];
            }
        return u;
    };
    return DisplacementField{eval, std::move(provenance)};
}

// ---------------------------------------------------------------------------
// Two-variant configurations
// ---------------------------------------------------------------------------

GeneratorOutput build_two_variant(const TwoVariantSpec& spec, double hw) {
    require_variant(spec.i, "build_two_variant");
    double w = projection_window(hw);
    require_domain(spec.f_plus, w, "build_two_variant(f_plus)");
    require_domain(spec.f_minus, w, "build_two_variant(f_minus)");

    // Admissibility by interval arithmetic over profile ranges:
    // theta_{i+1} = f_+ + f_- + lambda x_i + 1 must stay within [0, 1].
    auto rp = spec.f_plus.range(), rm = spec.f_minus.range();
    double drift = std::abs(spec.lambda) * hw;
    double lo = rp.first + rm.first - drift + 1.0;
    double hi = rp.second + rm.second + drift + 1.0;
    if (lo < -tol_alg)
        throw std::invalid_argument(
            "build_two_variant: theta_" + std::to_string(cyc_next(spec.i)) +
            " can reach " + std::to_string(lo) + " < 0 (f_plus range [" +
            std::to_string(rp.first) + ", " + std::to_string(rp.second) + "])");
    if (hi > 1.0 + tol_alg)
        throw std::invalid_argument(
            "build_two_variant: theta_" + std::to_string(cyc_next(spec.i)) +
            " can reach " + std::to_string(hi) + " > 1 (f_minus range [" +
            std::to_string(rm.first) + ", " + std::to_string(rm.second) + "])");

    int i = spec.i, ip = cyc_next(i), im = cyc_prev(i);
    auto prof = zero_profiles(w);
    prof[normal_index(twin_normal(i, +1))] = spec.f_plus.scaled(3.0);
    prof[normal_index(twin_normal(i, -1))] = spec.f_minus.scaled(3.0);

    Vec3 ei{};
    ei[i - 1] = 1.0;
    std::array<AffineMap, 3> g;
    g[std::size_t(i - 1)] = AffineMap{1.0, {}};
    g[std::size_t(ip - 1)] = AffineMap{-2.0, ei * (-3.0 * spec.lambda)};
    g[std::size_t(im - 1)] = AffineMap{1.0, ei * (3.0 * spec.lambda)};

    GeneratorOutput out{Decomposition(std::move(prof), g), {}, false, {}};
    out.displacement =
        assemble_displacement(out.decomposition, "two_variant(i=" + std::to_string(i) + ")");
    if (spec.f_plus.is_affine(tol_field) && spec.f_minus.is_affine(tol_field)) {
        out.degenerate = true;
        out.degenerate_reason = "both free profiles affine";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Planar second-order laminates
// ---------------------------------------------------------------------------

GeneratorOutput build_second_order_laminate(const SecondOrderLaminateSpec& spec, double hw) {
    require_variant(spec.i, "build_second_order_laminate");
    double w = projection_window(hw);
    Normal nu = twin_normal(spec.i, spec.nu_sign);

    // theta_i = a t + b in [0, 1] over the projection range.
    for (double t : {-w, w}) {
        double v = spec.a * t + spec.b;
        if (v < -tol_alg || v > 1.0 + tol_alg)
            throw std::invalid_argument("build_second_order_laminate: theta_" +
                                        std::to_string(spec.i) + " = " + std::to_string(v) +
                                        " at x.nu = " + std::to_string(t) +
                                        " violates [0, 1]");
    }

    int i = spec.i, ip = cyc_next(i), im = cyc_prev(i);
    auto prof = zero_profiles(w);
    // f_nu(t) = 3 (1 - a t - b) chi_A(t).
    prof[normal_index(nu)] = Profile1D::affine_times_indicator(
        3.0 * (1.0 - spec.a * -w - spec.b), -3.0 * spec.a, spec.A, -w, w);

    std::array<AffineMap, 3> g;
    g[std::size_t(i - 1)] = AffineMap{1.0 - 3.0 * spec.b, nu.vector * (-3.0 * spec.a)};
    g[std::size_t(ip - 1)] = AffineMap{1.0, {}};
    g[std::size_t(im - 1)] = AffineMap{-2.0 + 3.0 * spec.b, nu.vector * (3.0 * spec.a)};

    GeneratorOutput out{Decomposition(std::move(prof), g), {}, false, {}};
    out.displacement = assemble_displacement(
        out.decomposition, "second_order_laminate(i=" + std::to_string(i) + ", " + nu.name() + ")");
    IntervalSet visible = spec.A.clipped(-w, w);
    if (spec.a == 0.0 && (spec.b == 0.0 || spec.b == 1.0)) {
        out.degenerate = true;
        out.degenerate_reason = "a = 0 with b in {0, 1}: pure variant";
    } else if (visible.empty() || visible.measure() >= 2.0 * w - tol_alg) {
        out.degenerate = true;
        out.degenerate_reason = "A trivial on the visible window: two-variant limit";
    } else if (spec.a == 0.0) {
        out.degenerate = true;
        out.degenerate_reason = "a = 0: piecewise-constant laminate";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Planar checkerboards
// ---------------------------------------------------------------------------

GeneratorOutput build_checkerboard(const CheckerboardSpec& spec, double hw) {
    require_variant(spec.i, "build_checkerboard");
    if (spec.a < -tol_alg || spec.b < -tol_alg)
        throw std::invalid_argument("build_checkerboard: weights must be nonnegative");
    if (std::abs(spec.a + spec.b - 1.0) > tol_alg)
        throw std::invalid_argument("build_checkerboard: a + b = " +
                                    std::to_string(spec.a + spec.b) + " violates a + b = 1");

    double w = projection_window(hw);
    int i = spec.i, ip = cyc_next(i), im = cyc_prev(i);
    Normal nu_p = twin_normal(ip, spec.nu_plus_sign);
    Normal nu_m = twin_normal(im, spec.nu_minus_sign);

    auto prof = zero_profiles(w);
    prof[normal_index(nu_p)] = Profile1D::indicator(spec.A, -w, w, 3.0 * spec.a);
    prof[normal_index(nu_m)] = Profile1D::indicator(spec.B, -w, w, -3.0 * spec.b);

    std::array<AffineMap, 3> g;
    g[std::size_t(i - 1)] = AffineMap{-2.0, {}};
    g[std::size_t(ip - 1)] = AffineMap{1.0, {}};
    g[std::size_t(im - 1)] = AffineMap{1.0, {}};

    GeneratorOutput out{Decomposition(std::move(prof), g), {}, false, {}};
    out.displacement = assemble_displacement(
        out.decomposition, "checkerboard(i=" + std::to_string(i) + ", " + nu_p.name() + ", " +
                               nu_m.name() + ")");
    if (spec.a <= tol_alg || spec.b <= tol_alg) {
        out.degenerate = true;
        out.degenerate_reason = "a or b vanishes: single second-order structure";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Planar triple intersections
// ---------------------------------------------------------------------------

GeneratorOutput build_triple_intersection(const TripleIntersectionSpec& spec, double hw) {
    double bsum = spec.b[0] + spec.b[1] + spec.b[2];
    if (std::abs(bsum - 1.0) > tol_alg)
        throw std::invalid_argument("build_triple_intersection: sum b_i = " +
                                    std::to_string(bsum) + " violates sum = 1");
    double w = projection_window(hw);

    // Oriented normals: the unique family representatives orthogonal to d,
    // signed so that nu~_1 + nu~_2 + nu~_3 = 0 with eps_1 = +1.
    std::array<Normal, 3> nu{normal_orthogonal_to(1, spec.d), normal_orthogonal_to(2, spec.d),
                             normal_orthogonal_to(3, spec.d)};
    auto triple = dependent_triple(nu[0], nu[1]);
    std::array<double, 3> eps{double(triple.signs[0]), double(triple.signs[1]),
                              double(triple.signs[2])};

    std::array<double, 3> cut;  // x0 . nu~_j
    for (int j = 0; j < 3; ++j)
        cut[std::size_t(j)] = eps[std::size_t(j)] * nu[std::size_t(j)].vector.dot(spec.x0);

    auto prof = zero_profiles(w);
    for (int j = 0; j < 3; ++j) {
        // K_j on the oriented axis t~ = eps_j s; profile stored on the
        // canonical axis s = x . nu_j.
        IntervalSet K = spec.orientation == TripleOrientation::lower
                            ? IntervalSet::half_line_below(cut[std::size_t(j)], 2.0 * w)
                            : IntervalSet::half_line_above(cut[std::size_t(j)], 2.0 * w);
        IntervalSet K_canonical = eps[std::size_t(j)] > 0 ? K : K.negated();
        // f(s) = 3 (a eps s + b_j) on K_canonical.
        double slope = 3.0 * spec.a * eps[std::size_t(j)];
        double value_at_lo = 3.0 * (spec.a * eps[std::size_t(j)] * -w + spec.b[std::size_t(j)]);
        prof[normal_index(nu[std::size_t(j)])] =
            Profile1D::affine_times_indicator(value_at_lo, slope, K_canonical, -w, w);
    }

    std::array<AffineMap, 3> g;
    for (int i = 1; i <= 3; ++i) {
        int jp = cyc_next(i);
        g[std::size_t(i - 1)] =
            AffineMap{1.0 - 3.0 * spec.b[std::size_t(jp - 1)],
                      nu[std::size_t(jp - 1)].vector * (eps[std::size_t(jp - 1)] * -3.0 * spec.a)};
    }

    GeneratorOutput out{Decomposition(std::move(prof), g), {}, false, {}};

    // Admissibility: theta in [0, 1] probed over the cube.
    Grid probe(3, 17, hw);
    for (int iz = 0; iz < probe.n; ++iz)
        for (int iy = 0; iy < probe.n; ++iy)
            for (int ix = 0; ix < probe.n; ++ix) {
                auto th = out.decomposition.eval(probe.node3(ix, iy, iz));
                for (int c = 0; c < 3; ++c)
                    if (th[c] < -1e-7 || th[c] > 1.0 + 1e-7)
                        throw std::invalid_argument(
                            "build_triple_intersection: theta_" + std::to_string(c + 1) + " = " +
                            std::to_string(th[c]) + " violates [0, 1] inside the cube");
            }

    out.displacement = assemble_displacement(out.decomposition,
                                             "triple_intersection(d=" + spec.d.name() + ")");
    if (std::abs(spec.a) <= tol_alg &&
        (spec.b[0] <= tol_alg || spec.b[1] <= tol_alg || spec.b[2] <= tol_alg)) {
        out.degenerate = true;
        out.degenerate_reason = "a = 0 with a vanishing b_i: fewer than six sectors";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Austenite example
// ---------------------------------------------------------------------------

AusteniteExample build_austenite_example(const AusteniteExampleSpec& spec, double hw) {
    double w = projection_window(hw);
    auto check_indicator = [&](const Profile1D& p, const std::string& who) {
        require_domain(p, w, "build_austenite_example(" + who + ")");
        double amp = 0.0;
        if (!p.is_indicator(tol_alg, &amp) || (amp != 0.0 && std::abs(amp - 1.0) > tol_alg))
            throw std::invalid_argument("build_austenite_example: " + who +
                                        " must take values in {0, 1}");
    };
    check_indicator(spec.chi1_plus, "chi1_plus");
    check_indicator(spec.chi1_minus, "chi1_minus");
    check_indicator(spec.chi3, "chi3");

    Vec3 n1p = twin_normal(1, +1).vector;
    Vec3 n1m = twin_normal(1, -1).vector;
    Vec3 n3 = twin_normal(3, +1).vector;

    Profile1D c1p = spec.chi1_plus, c1m = spec.chi1_minus, c3 = spec.chi3;

    AusteniteExample ex;
    ex.theta = [c1p, c1m, c3, n1p, n1m, n3](const Vec3& x) {
        double a = c1p.eval(n1p.dot(x));
        double b = c1m.eval(n1m.dot(x));
        double c = c3.eval(n3.dot(x));
        VolumeFractions th;
        th[0] = c / 3.0;
        th[1] = 1.0 - (a + b + c) / 3.0;
        th[2] = (a + b) / 3.0;
        return th;
    };

    // Displacement: scaled antiderivatives along the three directions,
    // u = x - 3 v with v the unscaled construction, which yields
    // e(u) = I - 3 diag(theta) = sum theta_i e_i.
    ex.displacement.provenance = "austenite_example";
    ex.displacement.u = [c1p, c1m, c3, n1p, n1m, n3](const Vec3& x) {
        double Fp = sqrt2 * c1p.antiderivative(n1p.dot(x));
        double Fm = sqrt2 * c1m.antiderivative(n1m.dot(x));
        double F3 = sqrt2 * c3.antiderivative(n3.dot(x));
        return Vec3{x.x - F3, -2.0 * x.y + Fp + Fm + F3, x.z - Fp + Fm};
    };
    return ex;
}

GridField AusteniteExample::sample_theta(const Grid& grid) const {
    if (grid.dim != 3) throw std::invalid_argument("sample_theta: need a 3-D grid");
    GridField out(grid, 3);
    for (int iz = 0; iz < grid.n; ++iz)
        for (int iy = 0; iy < grid.n; ++iy)
            for (int ix = 0; ix < grid.n; ++ix) {
                auto th = theta(grid.node3(ix, iy, iz));
                for (int c = 0; c < 3; ++c) out.at3(ix, iy, iz, c) = th[c];
            }
    return out;
}

GeneratorOutput build(const ConfigSpec& spec, double hw) {
    if (std::holds_alternative<TwoVariantSpec>(spec))
        return build_two_variant(std::get<TwoVariantSpec>(spec), hw);
    if (std::holds_alternative<SecondOrderLaminateSpec>(spec))
        return build_second_order_laminate(std::get<SecondOrderLaminateSpec>(spec), hw);
    if (std::holds_alternative<CheckerboardSpec>(spec))
        return build_checkerboard(std::get<CheckerboardSpec>(spec), hw);
    if (std::holds_alternative<TripleIntersectionSpec>(spec))
        return build_triple_intersection(std::get<TripleIntersectionSpec>(spec), hw);
    throw std::invalid_argument(
        "build: the austenite example has no decomposition; use build_austenite_example");
}

// ---------------------------------------------------------------------------
// Symmetric gradient
// ---------------------------------------------------------------------------

GridField symmetric_gradient(const GridField& u, const Grid& grid) {
    if (grid.dim != 3 || u.channels() != 3)
        throw std::invalid_argument("symmetric_gradient: need a 3-channel field on a 3-D grid");
    if (grid.n < 3) throw std::invalid_argument("symmetric_gradient: grid too small (n < 3)");
    const int n = grid.n;
    const double h = grid.spacing();
    GridField out(grid, 6);

    auto diff = [&](int comp, int axis, int ix, int iy, int iz) {
        std::array<int, 3> k{ix, iy, iz};
        std::array<int, 3> kp = k, km = k;
        double denom;
        if (k[std::size_t(axis)] == 0) {
            kp[std::size_t(axis)] += 1;
            denom = h;
        } else if (k[std::size_t(axis)] == n - 1) {
            km[std::size_t(axis)] -= 1;
            denom = h;
        } else {
            kp[std::size_t(axis)] += 1;
            km[std::size_t(axis)] -= 1;
            denom = 2.0 * h;
        }
        return (u.at3(kp[0], kp[1], kp[2], comp) - u.at3(km[0], km[1], km[2], comp)) / denom;
    };

    for (int iz = 0; iz < n; ++iz)
        for (int iy = 0; iy < n; ++iy)
            for (int ix = 0; ix < n; ++ix) {
                double g[3][3];
                for (int c = 0; c < 3; ++c)
                    for (int a = 0; a < 3; ++a) g[c][a] = diff(c, a, ix, iy, iz);
                out.at3(ix, iy, iz, 0) = g[0][0];
                out.at3(ix, iy, iz, 1) = g[1][1];
                out.at3(ix, iy, iz, 2) = g[2][2];
                out.at3(ix, iy, iz, 3) = 0.5 * (g[1][2] + g[2][1]);
                out.at3(ix, iy, iz, 4) = 0.5 * (g[0][2] + g[2][0]);
                out.at3(ix, iy, iz, 5) = 0.5 * (g[0][1] + g[1][0]);
            }
    return out;
}

GridField symmetric_gradient(const DisplacementField& u, const Grid& grid) {
    return symmetric_gradient(u.sample(grid), grid);
}

}  // namespace martkit
