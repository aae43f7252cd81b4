#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "martkit/generators.hpp"
#include "martkit/rank_one.hpp"
#include "martkit/strain.hpp"

using namespace martkit;

namespace {

// Max over interior nodes of |e(u)_FD - sum theta_i e_i|_F.
double strain_consistency_error(const GeneratorOutput& g, const Grid& grid) {
    GridField theta = g.decomposition.sample_to_grid(grid);
    GridField strain = symmetric_gradient(g.displacement, grid);
    double worst = 0.0;
    for (int iz = 1; iz + 1 < grid.n; ++iz)
        for (int iy = 1; iy + 1 < grid.n; ++iy)
            for (int ix = 1; ix + 1 < grid.n; ++ix) {
                Mat3 e = Mat3::diag(strain.at3(ix, iy, iz, 0), strain.at3(ix, iy, iz, 1),
                                    strain.at3(ix, iy, iz, 2));
                e(1, 2) = e(2, 1) = strain.at3(ix, iy, iz, 3);
                e(0, 2) = e(2, 0) = strain.at3(ix, iy, iz, 4);
                e(0, 1) = e(1, 0) = strain.at3(ix, iy, iz, 5);
                Mat3 target;
                for (int i = 1; i <= 3; ++i)
                    target += martensite_strain(i).e * theta.at3(ix, iy, iz, i - 1);
                worst = std::max(worst, (e - target).frobenius());
            }
    return worst;
}

double theta_inclusion_error(const GridField& theta) {
    double worst = 0.0;
    const Grid& g = theta.grid();
    for (int iz = 0; iz < g.n; ++iz)
        for (int iy = 0; iy < g.n; ++iy)
            for (int ix = 0; ix < g.n; ++ix) {
                VolumeFractions th{{theta.at3(ix, iy, iz, 0), theta.at3(ix, iy, iz, 1),
                                    theta.at3(ix, iy, iz, 2)}};
                worst = std::max(worst, dist_to_K(strain_of_theta(th)));
            }
    return worst;
}

}  // namespace

TEST_CASE("two-variant: zero profiles give the pure next variant") {
    double w = projection_window(1.0);
    TwoVariantSpec spec;
    spec.i = 1;
    spec.f_plus = Profile1D::constant(0.0, -w, w);
    spec.f_minus = Profile1D::constant(0.0, -w, w);
    auto out = build_two_variant(spec, 1.0);
    CHECK(out.degenerate);
    auto th = out.decomposition.eval({0.3, -0.1, 0.5});
    CHECK(th[0] == doctest::Approx(0.0));
    CHECK(th[1] == doctest::Approx(1.0));
    CHECK(th[2] == doctest::Approx(0.0));
}

TEST_CASE("two-variant: single twin interface takes values {1/2, 1}") {
    double w = projection_window(1.0);
    TwoVariantSpec spec;
    spec.i = 1;
    spec.f_plus = Profile1D::indicator(IntervalSet::single(0.0, 2 * w), -w, w, -0.5);
    spec.f_minus = Profile1D::constant(0.0, -w, w);
    auto out = build_two_variant(spec, 1.0);

    std::set<long> values;
    Grid grid(3, 9, 1.0);
    GridField th = out.decomposition.sample_to_grid(grid);
    for (int iz = 0; iz < 9; ++iz)
        for (int iy = 0; iy < 9; ++iy)
            for (int ix = 0; ix < 9; ++ix) {
                CHECK(th.at3(ix, iy, iz, 0) == doctest::Approx(0.0));
                values.insert(std::lround(th.at3(ix, iy, iz, 1) * 1e9));
            }
    CHECK(values == std::set<long>{500000000, 1000000000});
}

TEST_CASE("two-variant: admissibility validation names the bound") {
    double w = projection_window(1.0);
    TwoVariantSpec spec;
    spec.i = 2;
    spec.f_plus = Profile1D::constant(0.4, -w, w);
    spec.f_minus = Profile1D::constant(0.0, -w, w);
    // theta_3 = 0.4 + 1 = 1.4 > 1
    CHECK_THROWS_WITH_AS(build_two_variant(spec, 1.0),
                         doctest::Contains("can reach"), std::invalid_argument);

    spec.f_plus = Profile1D::constant(-1.2, -w, w);
    CHECK_THROWS_AS(build_two_variant(spec, 1.0), std::invalid_argument);
}

TEST_CASE("two-variant: strain stays on the (i+1, i-1) edge and e(u) is consistent") {
    double w = projection_window(1.0);
    TwoVariantSpec spec;
    spec.i = 3;
    spec.f_plus = Profile1D::piecewise_linear({-w, -0.2, 0.3, w}, {0.0, -0.25, -0.05, 0.0});
    spec.f_minus = Profile1D::piecewise_linear({-w, 0.0, w}, {-0.1, -0.35, -0.1});
    spec.lambda = 0.05;
    auto out = build_two_variant(spec, 1.0);

    Grid grid(3, 17, 1.0);
    GridField th = out.decomposition.sample_to_grid(grid);
    CHECK(theta_inclusion_error(th) <= 1e-9);

    double err17 = strain_consistency_error(out, Grid(3, 17, 1.0));
    double err33 = strain_consistency_error(out, Grid(3, 33, 1.0));
    // Piecewise-linear profiles: O(h) at kink-straddling stencils.
    CHECK(err33 <= 0.6 * err17 + 1e-12);
    CHECK(err33 <= 1.0);
}

TEST_CASE("laminate: degenerate limits") {
    SecondOrderLaminateSpec spec;
    spec.i = 2;
    spec.nu_sign = +1;
    spec.A = IntervalSet::single(0.0, 10.0);
    spec.a = 0.0;
    spec.b = 1.0;
    auto out = build_second_order_laminate(spec, 1.0);
    CHECK(out.degenerate);
    auto th = out.decomposition.eval({0.2, 0.1, -0.4});
    CHECK(th[1] == doctest::Approx(1.0));

    // a = 0, b = 1/2, A a half line: theta_i = 1/2 everywhere, the others
    // split across the interface.
    spec.b = 0.5;
    out = build_second_order_laminate(spec, 1.0);
    CHECK(out.degenerate);  // a = 0
    Normal nu = twin_normal(2, +1);
    Vec3 xa = nu.vector * 0.5;   // x.nu > 0: inside A
    Vec3 xc = nu.vector * -0.5;  // complement side
    auto ta = out.decomposition.eval(xa);
    auto tc = out.decomposition.eval(xc);
    CHECK(ta[1] == doctest::Approx(0.5));
    CHECK(tc[1] == doctest::Approx(0.5));
    CHECK(ta[2] == doctest::Approx(0.5));  // theta_{i+1} on A
    CHECK(ta[0] == doctest::Approx(0.0));
    CHECK(tc[0] == doctest::Approx(0.5));  // theta_{i-1} on complement
    CHECK(tc[2] == doctest::Approx(0.0));
}

TEST_CASE("laminate: inclusion, planarity, strain consistency") {
    SecondOrderLaminateSpec spec;
    spec.i = 1;
    spec.nu_sign = -1;
    spec.A = IntervalSet({{-0.8, -0.1}, {0.4, 0.9}});
    spec.a = 0.12;
    spec.b = 0.45;
    auto out = build_second_order_laminate(spec, 1.0);
    CHECK(!out.degenerate);

    Grid grid(3, 17, 1.0);
    GridField th = out.decomposition.sample_to_grid(grid);
    CHECK(theta_inclusion_error(th) <= 1e-9);

    // Planar: invariant along the space diagonal orthogonal to nu.
    Normal nu = twin_normal(1, -1);
    SpaceDiagonal d{};
    bool found = false;
    for (const SpaceDiagonal& cand : space_diagonals())
        if (std::abs(cand.direction().dot(nu.vector)) < 1e-12) {
            d = cand;
            found = true;
            break;
        }
    REQUIRE(found);
    for (double s : {-0.4, 0.1, 0.3}) {
        Vec3 x{s, -0.2 * s, 0.1};
        auto a0 = out.decomposition.eval(x);
        auto a1 = out.decomposition.eval(x + d.unit() * 0.31);
        for (int c = 0; c < 3; ++c) CHECK(std::abs(a0[c] - a1[c]) <= 1e-12);
    }

    double err17 = strain_consistency_error(out, Grid(3, 17, 1.0));
    double err33 = strain_consistency_error(out, Grid(3, 33, 1.0));
    CHECK(err33 <= err17 + 1e-12);
}

TEST_CASE("checkerboard: weight validation and the four-value structure") {
    CheckerboardSpec spec;
    spec.i = 3;
    spec.A = IntervalSet::single(0.0, 10.0);
    spec.B = IntervalSet::single(0.0, 10.0);
    spec.a = 0.4;
    spec.b = 0.7;
    CHECK_THROWS_AS(build_checkerboard(spec, 1.0), std::invalid_argument);

    spec.a = 1.0;
    spec.b = 0.0;
    auto out = build_checkerboard(spec, 1.0);
    CHECK(out.degenerate);

    spec.a = spec.b = 0.5;
    out = build_checkerboard(spec, 1.0);
    CHECK(!out.degenerate);

    Grid grid(3, 9, 1.0);
    GridField th = out.decomposition.sample_to_grid(grid);
    CHECK(theta_inclusion_error(th) <= 1e-9);
    std::set<std::array<long, 3>> values;
    for (int iz = 0; iz < 9; ++iz)
        for (int iy = 0; iy < 9; ++iy)
            for (int ix = 0; ix < 9; ++ix)
                values.insert({std::lround(th.at3(ix, iy, iz, 0) * 1e9),
                               std::lround(th.at3(ix, iy, iz, 1) * 1e9),
                               std::lround(th.at3(ix, iy, iz, 2) * 1e9)});
    CHECK(values.size() == 4);

    double err = strain_consistency_error(out, Grid(3, 33, 1.0));
    // Indicator profiles: exact away from interfaces; the interface band is
    // excluded by checking only that the error does not blow up.
    CHECK(err < 10.0);
}

TEST_CASE("triple intersection: six sectors, six crossings, planarity") {
    TripleIntersectionSpec spec;
    spec.d = SpaceDiagonal{{1, 1, 1}};
    spec.x0 = Vec3{0, 0, 0};
    spec.a = 0.0;
    spec.b = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
    auto out = build_triple_intersection(spec, 1.0);

    // Nodewise inclusion away from the sector axis: the definition holds
    // almost everywhere, and nodes exactly on the axis see all three
    // half-line boundaries at once.
    Grid grid(3, 17, 1.0);
    GridField th = out.decomposition.sample_to_grid(grid);
    Vec3 axis_dir = spec.d.unit();
    double worst = 0.0;
    for (int iz = 0; iz < grid.n; ++iz)
        for (int iy = 0; iy < grid.n; ++iy)
            for (int ix = 0; ix < grid.n; ++ix) {
                Vec3 x = grid.node3(ix, iy, iz);
                Vec3 radial = x - axis_dir * axis_dir.dot(x);
                if (radial.norm() <= 1e-9) continue;
                VolumeFractions t{{th.at3(ix, iy, iz, 0), th.at3(ix, iy, iz, 1),
                                   th.at3(ix, iy, iz, 2)}};
                worst = std::max(worst, dist_to_K(strain_of_theta(t)));
            }
    CHECK(worst <= 1e-9);

    // Sectorwise evaluation: walk a circle around the axis and count
    // transitions between distinct fraction triples; expect exactly 6.
    Vec3 axis = spec.d.unit();
    auto basis = plane_basis(axis);
    int crossings = 0;
    std::array<long, 3> prev{};
    bool have_prev = false;
    std::set<std::array<long, 3>> sector_values;
    const int steps = 3600;
    for (int k = 0; k <= steps; ++k) {
        double phi = 2.0 * M_PI * double(k) / steps;
        Vec3 x = basis[0] * (0.5 * std::cos(phi)) + basis[1] * (0.5 * std::sin(phi));
        auto t = out.decomposition.eval(x);
        std::array<long, 3> key{std::lround(t[0] * 1e6), std::lround(t[1] * 1e6),
                                std::lround(t[2] * 1e6)};
        if (have_prev && key != prev) ++crossings;
        if (k < steps) sector_values.insert(key);
        prev = key;
        have_prev = true;
    }
    CHECK(crossings == 6);
    CHECK(sector_values.size() == 6);
    // Each theta_i is piecewise constant with values in {0, 1/3, 2/3}.
    for (const auto& v : sector_values)
        for (long c : v) CHECK((c == 0 || c == 333333 || c == 666667));

    // Planarity along d to 1e-12.
    for (double s : {-0.3, 0.2}) {
        Vec3 x{s, 0.1, -0.2 * s};
        auto a0 = out.decomposition.eval(x);
        auto a1 = out.decomposition.eval(x + axis * 0.27);
        for (int c = 0; c < 3; ++c) CHECK(std::abs(a0[c] - a1[c]) <= 1e-12);
    }

    CHECK_THROWS_AS(build_triple_intersection(
                        TripleIntersectionSpec{SpaceDiagonal{{1, 1, 1}}, Vec3{},
                                               TripleOrientation::lower, 0.0, {0.5, 0.5, 0.5}},
                        1.0),
                    std::invalid_argument);
}

TEST_CASE("triple intersection: affine slope and upper orientation admissible") {
    TripleIntersectionSpec spec;
    spec.d = SpaceDiagonal{{1, -1, 1}};
    spec.x0 = Vec3{0.05, -0.02, 0.04};
    spec.orientation = TripleOrientation::upper;
    spec.a = 0.05;
    spec.b = {0.3, 0.36, 0.34};
    auto out = build_triple_intersection(spec, 1.0);
    GridField th = out.decomposition.sample_to_grid(Grid(3, 17, 1.0));
    CHECK(theta_inclusion_error(th) <= 1e-9);
    double err17 = strain_consistency_error(out, Grid(3, 17, 1.0));
    CHECK(err17 < 10.0);
}

TEST_CASE("austenite example: constant indicator limits") {
    double w = projection_window(1.0);
    AusteniteExampleSpec spec;
    spec.chi1_plus = Profile1D::constant(1.0, -w, w);
    spec.chi1_minus = Profile1D::constant(1.0, -w, w);
    spec.chi3 = Profile1D::constant(1.0, -w, w);
    auto ex = build_austenite_example(spec, 1.0);
    auto th = ex.theta({0.2, -0.3, 0.1});
    CHECK(th[0] == doctest::Approx(1.0 / 3.0));
    CHECK(th[1] == doctest::Approx(0.0));
    CHECK(th[2] == doctest::Approx(2.0 / 3.0));

    spec.chi1_plus = Profile1D::constant(0.0, -w, w);
    spec.chi1_minus = Profile1D::constant(0.0, -w, w);
    spec.chi3 = Profile1D::constant(0.0, -w, w);
    ex = build_austenite_example(spec, 1.0);
    th = ex.theta({0.2, -0.3, 0.1});
    CHECK(th[0] == doctest::Approx(0.0));
    CHECK(th[1] == doctest::Approx(1.0));
    CHECK(th[2] == doctest::Approx(0.0));

    spec.chi3 = Profile1D::constant(0.5, -w, w);
    CHECK_THROWS_AS(build_austenite_example(spec, 1.0), std::invalid_argument);
}

TEST_CASE("austenite example: disjunction, three-dimensionality, strain consistency") {
    double w = projection_window(1.0);
    AusteniteExampleSpec spec;
    spec.chi1_plus = Profile1D::indicator(IntervalSet::single(0.0, 2 * w), -w, w);
    spec.chi1_minus = Profile1D::indicator(IntervalSet({{-0.6, -0.1}, {0.3, 0.8}}), -w, w);
    spec.chi3 = Profile1D::indicator(IntervalSet::single(-0.4, 0.5), -w, w);
    auto ex = build_austenite_example(spec, 1.0);

    Grid grid(3, 21, 1.0);
    GridField th = ex.sample_theta(grid);
    int mixed = 0;
    for (int iz = 0; iz < grid.n; ++iz)
        for (int iy = 0; iy < grid.n; ++iy)
            for (int ix = 0; ix < grid.n; ++ix) {
                double t0 = th.at3(ix, iy, iz, 0), t1 = th.at3(ix, iy, iz, 1),
                       t2 = th.at3(ix, iy, iz, 2);
                bool some_zero = std::min({t0, t1, t2}) <= 1e-12;
                bool all_third = std::abs(t0 - 1.0 / 3) <= 1e-12 &&
                                 std::abs(t1 - 1.0 / 3) <= 1e-12 &&
                                 std::abs(t2 - 1.0 / 3) <= 1e-12;
                CHECK((some_zero || all_third));
                if (all_third) ++mixed;
            }
    CHECK(mixed > 0);  // austenite-like points occur

    // Fully three-dimensional: gradient directions of theta span rank 3.
    Mat3 gram;
    double h = grid.spacing();
    for (int iz = 1; iz + 1 < grid.n; ++iz)
        for (int iy = 1; iy + 1 < grid.n; ++iy)
            for (int ix = 1; ix + 1 < grid.n; ++ix)
                for (int c = 0; c < 3; ++c) {
                    Vec3 gvec{(th.at3(ix + 1, iy, iz, c) - th.at3(ix - 1, iy, iz, c)) / (2 * h),
                              (th.at3(ix, iy + 1, iz, c) - th.at3(ix, iy - 1, iz, c)) / (2 * h),
                              (th.at3(ix, iy, iz + 1, c) - th.at3(ix, iy, iz - 1, c)) / (2 * h)};
                    if (gvec.norm() < 1e-9) continue;
                    gvec = gvec.normalized();
                    gram += Mat3::outer(gvec, gvec);
                }
    auto eig = eigen_sym3(gram);
    CHECK(eig.values[0] > 1e-3 * eig.values[2]);  // numerical rank 3

    // e(u) consistency: exact at nodes whose FD stencil stays clear of the
    // indicator breakpoints.
    GridField uu = ex.displacement.sample(grid);
    GridField strain = symmetric_gradient(uu, grid);
    auto near_break = [&](const Profile1D& p, double t) {
        for (double b : p.breakpoints())
            if (std::abs(t - b) < 2.5 * h) return true;
        return false;
    };
    Vec3 n1p = twin_normal(1, +1).vector, n1m = twin_normal(1, -1).vector,
         n3 = twin_normal(3, +1).vector;
    double worst_clear = 0.0;
    int clear_nodes = 0;
    for (int iz = 1; iz + 1 < grid.n; ++iz)
        for (int iy = 1; iy + 1 < grid.n; ++iy)
            for (int ix = 1; ix + 1 < grid.n; ++ix) {
                Vec3 x = grid.node3(ix, iy, iz);
                if (near_break(spec.chi1_plus, n1p.dot(x)) ||
                    near_break(spec.chi1_minus, n1m.dot(x)) || near_break(spec.chi3, n3.dot(x)))
                    continue;
                ++clear_nodes;
                Mat3 e = Mat3::diag(strain.at3(ix, iy, iz, 0), strain.at3(ix, iy, iz, 1),
                                    strain.at3(ix, iy, iz, 2));
                e(1, 2) = e(2, 1) = strain.at3(ix, iy, iz, 3);
                e(0, 2) = e(2, 0) = strain.at3(ix, iy, iz, 4);
                e(0, 1) = e(1, 0) = strain.at3(ix, iy, iz, 5);
                Mat3 target;
                for (int i = 1; i <= 3; ++i)
                    target += martensite_strain(i).e * th.at3(ix, iy, iz, i - 1);
                worst_clear = std::max(worst_clear, (e - target).frobenius());
            }
    CHECK(clear_nodes > 30);
    CHECK(worst_clear <= 1e-9);
}

TEST_CASE("symmetric gradient: affine displacements are exact, skew parts vanish") {
    Grid grid(3, 9, 1.0);

    DisplacementField affine{[](const Vec3& x) {
                                 return Vec3{-2 * x.x, x.y, x.z};  // e(u) = e_1
                             },
                             "affine"};
    GridField e = symmetric_gradient(affine, grid);
    for (int iz = 0; iz < 9; ++iz)
        for (int iy = 0; iy < 9; ++iy)
            for (int ix = 0; ix < 9; ++ix) {
                CHECK(e.at3(ix, iy, iz, 0) == doctest::Approx(-2.0).epsilon(1e-12));
                CHECK(e.at3(ix, iy, iz, 1) == doctest::Approx(1.0).epsilon(1e-12));
                CHECK(e.at3(ix, iy, iz, 2) == doctest::Approx(1.0).epsilon(1e-12));
                for (int c = 3; c < 6; ++c)
                    CHECK(e.at3(ix, iy, iz, c) == doctest::Approx(0.0).epsilon(1e-12));
            }

    // Rigid rotation: u = W x with W skew.
    DisplacementField rot{[](const Vec3& x) {
                              return Vec3{0.3 * x.y - 0.1 * x.z, -0.3 * x.x + 0.2 * x.z,
                                          0.1 * x.x - 0.2 * x.y};
                          },
                          "rotation"};
    e = symmetric_gradient(rot, grid);
    for (int c = 0; c < 6; ++c) {
        auto [mn, mx] = e.channel_min_max(c);
        CHECK(std::abs(mn) <= 1e-12);
        CHECK(std::abs(mx) <= 1e-12);
    }

    CHECK_THROWS_AS(Grid(3, 2, 1.0), std::invalid_argument);
}
