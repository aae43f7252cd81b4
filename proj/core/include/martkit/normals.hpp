#ifndef MARTKIT_NORMALS_HPP
#define MARTKIT_NORMALS_HPP

#include <array>
#include <optional>
#include <string>

#include "martkit/types.hpp"

namespace martkit {

/// A twin normal nu_i^{+-}: unit vector orthogonal to the coordinate axis
/// E_family, stored with the crystallographic sign convention of the normal
/// table (nu_1^+ = (011)/sqrt2, nu_1^- = (01-1)/sqrt2, and cyclic).
struct Normal {
    Vec3 vector;
    int family = 1;   // i in {1,2,3}, vector . E_family == 0
    int sign = +1;    // +1 or -1

    std::string name() const;  // "nu1+", "nu2-", ...
    bool operator==(const Normal& o) const { return family == o.family && sign == o.sign; }
};

/// Cube space diagonal in {[111], [-111], [1-11], [11-1]} stored as an
/// integer vector with the fixed orientation convention of that list.
struct SpaceDiagonal {
    std::array<int, 3> v{1, 1, 1};

    Vec3 direction() const { return Vec3{double(v[0]), double(v[1]), double(v[2])}; }
    Vec3 unit() const { return direction() / std::sqrt(3.0); }
    std::string name() const;  // "[111]", "[-111]", ...
    bool operator==(const SpaceDiagonal& o) const { return v == o.v; }
};

/// The normal nu_family^sign from the table.
Normal twin_normal(int family, int sign);

/// All six normals, grouped N_1, N_2, N_3 with + before -.
const std::array<Normal, 6>& all_normals();

/// The four space diagonals [111], [-111], [1-11], [11-1].
const std::array<SpaceDiagonal, 4>& space_diagonals();

/// Matches a unit vector against the table up to sign flip and tolerance.
std::optional<Normal> match_normal(const Vec3& v, double tol = tol_alg);

/// The unique member of N_family orthogonal to d.
Normal normal_orthogonal_to(int family, const SpaceDiagonal& d);

struct DependentTriple {
    Normal third;                  // the unique nu_{i-1} closing the triple
    SpaceDiagonal diagonal;        // the common d with nu . d = 0 for all three
    std::array<int, 3> signs{};    // eps with eps_a nu_a + eps_b nu_b + eps_c nu_c = 0,
                                   // normalized so signs[0] = +1
};

/// For nu_a in N_i and nu_b in N_{i+1} (cyclically adjacent families) returns
/// the unique third normal making the triple linearly dependent, the common
/// orthogonal space diagonal, and the dependency signs. Rejects same-family
/// or non-adjacent-order input.
DependentTriple dependent_triple(const Normal& nu_a, const Normal& nu_b);

}  // namespace martkit

#endif
