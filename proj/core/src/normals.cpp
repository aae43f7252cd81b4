#include "martkit/normals.hpp"

#include <cmath>
#include <stdexcept>

namespace martkit {

namespace {

const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

std::array<Normal, 6> make_normals() {
    return {{
        {Vec3{0, 1, 1} * inv_sqrt2, 1, +1},
        {Vec3{0, 1, -1} * inv_sqrt2, 1, -1},
        {Vec3{1, 0, 1} * inv_sqrt2, 2, +1},
        {Vec3{-1, 0, 1} * inv_sqrt2, 2, -1},
        {Vec3{1, 1, 0} * inv_sqrt2, 3, +1},
        {Vec3{1, -1, 0} * inv_sqrt2, 3, -1},
    }};
}

std::array<SpaceDiagonal, 4> make_diagonals() {
    return {{SpaceDiagonal{{1, 1, 1}}, SpaceDiagonal{{-1, 1, 1}}, SpaceDiagonal{{1, -1, 1}},
             SpaceDiagonal{{1, 1, -1}}}};
}

}  // namespace

std::string Normal::name() const {
    return "nu" + std::to_string(family) + (sign > 0 ? "+" : "-");
}

std::string SpaceDiagonal::name() const {
    std::string s = "[";
    for (int c : v) s += (c < 0 ? "-1" : "1");
    return s + "]";
}

const std::array<Normal, 6>& all_normals() {
    static const auto table = make_normals();
    return table;
}

const std::array<SpaceDiagonal, 4>& space_diagonals() {
    static const auto table = make_diagonals();
    return table;
}

Normal twin_normal(int family, int sign) {
    if (family < 1 || family > 3 || (sign != 1 && sign != -1))
        throw std::out_of_range("twin_normal: family must be 1..3 and sign +-1");
    return all_normals()[std::size_t(2 * (family - 1) + (sign > 0 ? 0 : 1))];
}

std::optional<Normal> match_normal(const Vec3& v, double tol) {
    for (const Normal& n : all_normals()) {
        if ((v - n.vector).norm() <= tol || (v + n.vector).norm() <= tol) return n;
    }
    return std::nullopt;
}

Normal normal_orthogonal_to(int family, const SpaceDiagonal& d) {
    for (int sign : {+1, -1}) {
        Normal n = twin_normal(family, sign);
        if (std::abs(n.vector.dot(d.direction())) <= tol_alg) return n;
    }
    throw std::logic_error("normal_orthogonal_to: no member of N_" + std::to_string(family) +
                           " is orthogonal to " + d.name());
}

DependentTriple dependent_triple(const Normal& nu_a, const Normal& nu_b) {
    if (nu_a.family == nu_b.family)
        throw std::invalid_argument("dependent_triple: inputs from the same family N_" +
                                    std::to_string(nu_a.family));
    if (cyc_next(nu_a.family) != nu_b.family)
        throw std::invalid_argument("dependent_triple: families must be cyclically adjacent, got N_" +
                                    std::to_string(nu_a.family) + ", N_" +
                                    std::to_string(nu_b.family));

    // The common orthogonal space diagonal is unique.
    const SpaceDiagonal* common = nullptr;
    for (const SpaceDiagonal& d : space_diagonals()) {
        if (std::abs(nu_a.vector.dot(d.direction())) <= tol_alg &&
            std::abs(nu_b.vector.dot(d.direction())) <= tol_alg) {
            common = &d;
            break;
        }
    }
    if (!common) throw std::logic_error("dependent_triple: no common orthogonal diagonal");

    int third_family = cyc_prev(nu_a.family);
    Normal third = normal_orthogonal_to(third_family, *common);

    // Solve eps_a nu_a + eps_b nu_b + eps_c nu_c = 0 over {+-1}^3.
    DependentTriple result{third, *common, {0, 0, 0}};
    for (int sb : {+1, -1}) {
        for (int sc : {+1, -1}) {
            Vec3 s = nu_a.vector + nu_b.vector * double(sb) + third.vector * double(sc);
            if (s.norm() <= tol_alg) {
                result.signs = {1, sb, sc};
                return result;
            }
        }
    }
    throw std::logic_error("dependent_triple: sign system has no solution");
}

}  // namespace martkit
