#ifndef MARTKIT_DECOMPOSITION_HPP
#define MARTKIT_DECOMPOSITION_HPP

#include <array>

#include "martkit/grid.hpp"
#include "martkit/normals.hpp"
#include "martkit/profile.hpp"
#include "martkit/strain.hpp"
#include "martkit/types.hpp"

namespace martkit {

/// Affine scalar map x -> constant + gradient . x.
struct AffineMap {
    double constant = 0.0;
    Vec3 gradient{};

    double eval(const Vec3& x) const { return constant + gradient.dot(x); }
    AffineMap operator+(const AffineMap& o) const {
        return {constant + o.constant, gradient + o.gradient};
    }
};

/// Index of a twin normal in the profile table: N_1+, N_1-, N_2+, N_2-, N_3+, N_3-.
inline std::size_t normal_index(const Normal& n) {
    return std::size_t(2 * (n.family - 1) + (n.sign > 0 ? 0 : 1));
}

/// Splitting of the diagonal strain into six 1-D profiles f_nu of x . nu and
/// three affine maps g_i:
///
///   e_ii = sum_{nu in N_{i+1}} f_nu - sum_{nu in N_{i-1}} f_nu + g_i.
///
/// The profiles cancel in the trace, so trace freeness is equivalent to
/// g_1 + g_2 + g_3 == 0, which is enforced at construction.
class Decomposition {
  public:
    Decomposition();
    Decomposition(std::array<Profile1D, 6> profiles, std::array<AffineMap, 3> affines);

    const Profile1D& profile(const Normal& n) const { return profiles_[normal_index(n)]; }
    const Profile1D& profile(std::size_t idx) const { return profiles_[idx]; }
    const AffineMap& affine(int i) const { return affines_[std::size_t(i - 1)]; }
    const std::array<Profile1D, 6>& profiles() const { return profiles_; }
    const std::array<AffineMap, 3>& affines() const { return affines_; }

    /// Diagonal strain entries (e_11, e_22, e_33) at x.
    std::array<double, 3> eval_strain_diagonal(const Vec3& x) const;
    /// Volume fractions theta_i = (1 - e_ii) / 3 at x.
    VolumeFractions eval(const Vec3& x) const;
    /// Dependence of theta_i on a single profile coordinate: theta_i picks up
    /// -f_nu/3 for nu in N_{i+1} and +f_nu/3 for nu in N_{i-1}.
    static double theta_sign(int component_i, const Normal& nu);

    /// Canonical affine gauge: every profile L2-orthogonal to {1, t} on its
    /// domain, compensations absorbed into the affine maps. Evaluation is
    /// unchanged.
    Decomposition gauge_fixed() const;

    /// theta on all nodes of a 3-D grid (3 channels). The grid cube must lie
    /// inside every profile's domain.
    GridField sample_to_grid(const Grid& grid) const;

    /// Analytic restriction of theta_component to the plane {x . nu = alpha},
    /// sampled on a 2-D grid of the given half width centered at alpha nu.
    /// Rejects the request when a non-affine constituent profile of that
    /// component is constant on the plane (no trace information).
    GridField hyperplane_trace(int component, double alpha, const Normal& nu,
                               int n2, double half_width2) const;

  private:
    std::array<Profile1D, 6> profiles_;
    std::array<AffineMap, 3> affines_;
};

/// Interpolated restriction of every channel of a 3-D field to the plane
/// {x . nu = alpha}. Sample points must stay inside the cube.
GridField hyperplane_trace_field(const GridField& f, double alpha, const Normal& nu, int n2,
                                 double half_width2);

/// Deterministic orthonormal basis (t1, t2) of the plane orthogonal to nu.
std::array<Vec3, 2> plane_basis(const Vec3& nu);

/// Largest in-plane half width such that the trace samples stay inside the
/// cube of half width hw.
double max_trace_half_width(double alpha, const Vec3& nu, double hw);

}  // namespace martkit

#endif
