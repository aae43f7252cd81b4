#ifndef MARTKIT_RANK_ONE_HPP
#define MARTKIT_RANK_ONE_HPP

#include <array>
#include <vector>

#include "martkit/strain.hpp"
#include "martkit/types.hpp"

namespace martkit {

/// Symmetric rank-one connection A - B = a (.) n with |n| = 1; the magnitude
/// is absorbed into the amplitude a.
struct RankOneConnection {
    Vec3 amplitude;
    Vec3 normal;

    Mat3 reconstruct() const { return sym_dyad(amplitude, normal); }
};

enum class RankOneStatus {
    two_connections,   // generic case, both (a, n) pairs returned
    one_connection,    // A - B itself symmetric rank one
    zero_difference,   // A == B, degenerate
    incompatible,      // rank 3 or two nonzero eigenvalues of equal sign
};

struct RankOneResult {
    RankOneStatus status = RankOneStatus::incompatible;
    std::vector<RankOneConnection> connections;
};

/// Eigenvalues and orthonormal eigenvectors of a symmetric 3x3 matrix,
/// ascending. Closed-form characteristic polynomial with a Jacobi-rotation
/// fallback when roots are closer than 1e-7.
struct EigenSym3 {
    std::array<double, 3> values{};
    std::array<Vec3, 3> vectors{};
};
EigenSym3 eigen_sym3(const Mat3& a);

/// Solves A - B = a (.) n for symmetric A, B.
RankOneResult rank_one_connect(const SymStrain& A, const SymStrain& B);

/// The fractions lambda in [0,1] for which lambda e_i + (1-lambda) e_j is
/// rank-one connected to austenite (the zero strain). For distinct martensite
/// indices this is always {1/3, 2/3}. Rejects i == j.
std::array<double, 2> austenite_compatible_fractions(int i, int j);

}  // namespace martkit

#endif
