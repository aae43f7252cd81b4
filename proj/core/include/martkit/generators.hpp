#ifndef MARTKIT_GENERATORS_HPP
#define MARTKIT_GENERATORS_HPP

#include <array>
#include <functional>
#include <string>
#include <variant>

#include "martkit/decomposition.hpp"
#include "martkit/grid.hpp"
#include "martkit/interval_set.hpp"
#include "martkit/normals.hpp"
#include "martkit/profile.hpp"

namespace martkit {

/// Closed-form displacement with the spec that generated it.
struct DisplacementField {
    std::function<Vec3(const Vec3&)> u;
    std::string provenance;

    Vec3 operator()(const Vec3& x) const { return u(x); }
    /// Samples the three components on a 3-D grid.
    GridField sample(const Grid& grid) const;
};

struct GeneratorOutput {
    Decomposition decomposition;
    DisplacementField displacement;
    bool degenerate = false;
    std::string degenerate_reason;
};

// ---------------------------------------------------------------------------
// Configuration families
// ---------------------------------------------------------------------------

struct TwoVariantSpec {
    int i = 1;                 // vanishing variant
    Profile1D f_plus;          // free function of x . nu_i^+
    Profile1D f_minus;         // free function of x . nu_i^-
    double lambda = 0.0;       // affine drift along x_i
};

struct SecondOrderLaminateSpec {
    int i = 1;                 // affine variant
    int nu_sign = +1;          // selects nu in N_i
    IntervalSet A;
    double a = 0.0, b = 0.5;   // theta_i = a x.nu + b
};

struct CheckerboardSpec {
    int i = 1;                 // majority variant
    int nu_plus_sign = +1;     // selects nu in N_{i+1}
    int nu_minus_sign = +1;    // selects nu in N_{i-1}
    IntervalSet A, B;
    double a = 0.5, b = 0.5;   // weights, a + b = 1
};

enum class TripleOrientation { lower, upper };

struct TripleIntersectionSpec {
    SpaceDiagonal d;
    Vec3 x0{};
    TripleOrientation orientation = TripleOrientation::lower;
    double a = 0.0;
    std::array<double, 3> b{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};  // sum = 1
};

struct AusteniteExampleSpec {
    Profile1D chi1_plus;   // {0,1}-valued, argument x . nu_1^+
    Profile1D chi1_minus;  // {0,1}-valued, argument x . nu_1^-
    Profile1D chi3;        // {0,1}-valued, argument x . nu_3^+
};

using ConfigSpec = std::variant<TwoVariantSpec, SecondOrderLaminateSpec, CheckerboardSpec,
                                TripleIntersectionSpec, AusteniteExampleSpec>;

/// Family tag used in serialized specs and classification results.
enum class Family {
    two_variant,
    second_order_laminate,
    checkerboard,
    triple_intersection,
    austenite_example,
};
std::string family_name(Family f);
Family family_of(const ConfigSpec& spec);

// ---------------------------------------------------------------------------
// Builders. domain_half_width is the half width of the cube on which the
// output must be admissible; profile domains must cover its projections.
// ---------------------------------------------------------------------------

GeneratorOutput build_two_variant(const TwoVariantSpec& spec, double domain_half_width);
GeneratorOutput build_second_order_laminate(const SecondOrderLaminateSpec& spec,
                                            double domain_half_width);
GeneratorOutput build_checkerboard(const CheckerboardSpec& spec, double domain_half_width);
GeneratorOutput build_triple_intersection(const TripleIntersectionSpec& spec,
                                          double domain_half_width);

/// The fully three-dimensional construction with austenite present. Its
/// fractions satisfy "some theta_i = 0 or theta = (1/3,1/3,1/3)" nodewise and
/// do not fit a Decomposition (the strain lies in K union {0}).
struct AusteniteExample {
    std::function<VolumeFractions(const Vec3&)> theta;
    DisplacementField displacement;

    GridField sample_theta(const Grid& grid) const;
};
AusteniteExample build_austenite_example(const AusteniteExampleSpec& spec,
                                         double domain_half_width);

/// Dispatch on the family; austenite fields get an identity Decomposition
/// slot and must be sampled through build_austenite_example instead.
GeneratorOutput build(const ConfigSpec& spec, double domain_half_width);

/// Closed-form displacement realizing e(u) = sum theta_i e_i for any
/// decomposition whose profiles admit antiderivatives.
DisplacementField assemble_displacement(const Decomposition& d, std::string provenance);

// ---------------------------------------------------------------------------
// Strain from displacement
// ---------------------------------------------------------------------------

/// Symmetric gradient by central differences at interior nodes and one-sided
/// differences at the boundary. Channels: e11, e22, e33, e23, e13, e12.
GridField symmetric_gradient(const GridField& u, const Grid& grid);
GridField symmetric_gradient(const DisplacementField& u, const Grid& grid);

/// Projection window [-w, w] needed by profiles of x . nu on the cube of the
/// given half width (all twin normals have |nu|_1 = sqrt 2).
double projection_window(double domain_half_width);

}  // namespace martkit

#endif
