#ifndef MARTKIT_TYPES_HPP
#define MARTKIT_TYPES_HPP

#include <array>
#include <cmath>
#include <cstddef>

namespace martkit {

// Absolute tolerance for exact-algebra assertions. All quantities in the
// strain algebra are O(1) rationals over sqrt(2).
inline constexpr double tol_alg = 1e-9;

// Absolute tolerance for sampled-field identities (partition of unity,
// gauge invariance, planarity).
inline constexpr double tol_field = 1e-9;

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3& operator+=(const Vec3& o) {
        x += o.x; y += o.y; z += o.z;
        return *this;
    }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(dot(*this)); }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    Vec3 normalized() const { return *this / norm(); }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

// Dense 3x3 matrix, row major.
struct Mat3 {
    std::array<double, 9> m{};

    double& operator()(int i, int j) { return m[std::size_t(3 * i + j)]; }
    double operator()(int i, int j) const { return m[std::size_t(3 * i + j)]; }

    static Mat3 zero() { return {}; }
    static Mat3 identity() {
        Mat3 r;
        r(0, 0) = r(1, 1) = r(2, 2) = 1.0;
        return r;
    }
    static Mat3 diag(double a, double b, double c) {
        Mat3 r;
        r(0, 0) = a; r(1, 1) = b; r(2, 2) = c;
        return r;
    }
    static Mat3 outer(const Vec3& a, const Vec3& b) {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r(i, j) = a[i] * b[j];
        return r;
    }

    Mat3 operator+(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 9; ++i) r.m[std::size_t(i)] = m[std::size_t(i)] + o.m[std::size_t(i)];
        return r;
    }
    Mat3 operator-(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 9; ++i) r.m[std::size_t(i)] = m[std::size_t(i)] - o.m[std::size_t(i)];
        return r;
    }
    Mat3 operator*(double s) const {
        Mat3 r;
        for (int i = 0; i < 9; ++i) r.m[std::size_t(i)] = m[std::size_t(i)] * s;
        return r;
    }
    Mat3& operator+=(const Mat3& o) {
        for (int i = 0; i < 9; ++i) m[std::size_t(i)] += o.m[std::size_t(i)];
        return *this;
    }

    Vec3 apply(const Vec3& v) const {
        return {(*this)(0, 0) * v.x + (*this)(0, 1) * v.y + (*this)(0, 2) * v.z,
                (*this)(1, 0) * v.x + (*this)(1, 1) * v.y + (*this)(1, 2) * v.z,
                (*this)(2, 0) * v.x + (*this)(2, 1) * v.y + (*this)(2, 2) * v.z};
    }

    Mat3 transposed() const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
        return r;
    }

    double trace() const { return (*this)(0, 0) + (*this)(1, 1) + (*this)(2, 2); }
    double frobenius() const {
        double s = 0.0;
        for (double v : m) s += v * v;
        return std::sqrt(s);
    }
    double dot(const Mat3& o) const {
        double s = 0.0;
        for (int i = 0; i < 9; ++i) s += m[std::size_t(i)] * o.m[std::size_t(i)];
        return s;
    }
};

inline Mat3 operator*(double s, const Mat3& a) { return a * s; }

// Symmetrized dyadic a (.) n = (a (x) n + n (x) a) / 2.
inline Mat3 sym_dyad(const Vec3& a, const Vec3& n) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = 0.5 * (a[i] * n[j] + n[i] * a[j]);
    return r;
}

// Cyclic successor/predecessor of a variant index in {1,2,3}.
inline int cyc_next(int i) { return i % 3 + 1; }
inline int cyc_prev(int i) { return (i + 1) % 3 + 1; }

}  // namespace martkit

#endif
