#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include "gaussmin/errors.hpp"

// Minimal fixed-size linear algebra for the 3x3 and planar work in this
// library. Everything is by value; no aliasing concerns.

namespace gaussmin {

struct Vec2 {
    double x = 0, y = 0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double cross(Vec2 o) const { return x * o.y - y * o.x; }
    double norm() const { return std::hypot(x, y); }
    double norm2() const { return x * x + y * y; }
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }

struct Vec3 {
    std::array<double, 3> v{};

    double& operator[](std::size_t i) { return v[i]; }
    double operator[](std::size_t i) const { return v[i]; }

    Vec3 operator+(const Vec3& o) const { return {{v[0] + o[0], v[1] + o[1], v[2] + o[2]}}; }
    Vec3 operator-(const Vec3& o) const { return {{v[0] - o[0], v[1] - o[1], v[2] - o[2]}}; }
    Vec3 operator*(double s) const { return {{v[0] * s, v[1] * s, v[2] * s}}; }
    double dot(const Vec3& o) const { return v[0] * o[0] + v[1] * o[1] + v[2] * o[2]; }
    double norm() const { return std::sqrt(dot(*this)); }
};

inline Vec3 ones3() { return {{1.0, 1.0, 1.0}}; }
inline Vec3 unit3(std::size_t i) {
    Vec3 e;
    e[i] = 1.0;
    return e;
}

struct Mat3 {
    // row-major
    std::array<double, 9> a{};

    double& operator()(std::size_t i, std::size_t j) { return a[3 * i + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a[3 * i + j]; }

    static Mat3 identity() {
        Mat3 m;
        m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
        return m;
    }
    static Mat3 diag(double d0, double d1, double d2) {
        Mat3 m;
        m(0, 0) = d0;
        m(1, 1) = d1;
        m(2, 2) = d2;
        return m;
    }

    Mat3 operator+(const Mat3& o) const {
        Mat3 r;
        for (std::size_t i = 0; i < 9; ++i) r.a[i] = a[i] + o.a[i];
        return r;
    }
    Mat3 operator-(const Mat3& o) const {
        Mat3 r;
        for (std::size_t i = 0; i < 9; ++i) r.a[i] = a[i] - o.a[i];
        return r;
    }
    Mat3 operator*(double s) const {
        Mat3 r;
        for (std::size_t i = 0; i < 9; ++i) r.a[i] = a[i] * s;
        return r;
    }

    Mat3 operator*(const Mat3& o) const {
        Mat3 r;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                double s = 0;
                for (std::size_t k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
                r(i, j) = s;
            }
        return r;
    }

    Vec3 operator*(const Vec3& x) const {
        Vec3 r;
        for (std::size_t i = 0; i < 3; ++i)
            r[i] = (*this)(i, 0) * x[0] + (*this)(i, 1) * x[1] + (*this)(i, 2) * x[2];
        return r;
    }

    Mat3 transposed() const {
        Mat3 r;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
        return r;
    }

    double det() const {
        const Mat3& m = *this;
        return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
               m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
               m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    }

    double frobenius() const {
        double s = 0;
        for (double x : a) s += x * x;
        return std::sqrt(s);
    }

    double max_abs() const {
        double m = 0;
        for (double x : a) m = std::max(m, std::abs(x));
        return m;
    }

    bool finite() const {
        for (double x : a)
            if (!std::isfinite(x)) return false;
        return true;
    }
};

// adjugate-based inverse; deterministic and exact enough for well-conditioned
// 3x3 work (all matrices here are sections/roots of admissible covariances)
inline Mat3 inverse(const Mat3& m, double singular_tol = 0.0) {
    double d = m.det();
    if (!(std::abs(d) > singular_tol))
        throw degenerate_error("3x3 matrix is singular (det = " + std::to_string(d) + ")");
    Mat3 r;
    r(0, 0) = (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) / d;
    r(0, 1) = (m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2)) / d;
    r(0, 2) = (m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1)) / d;
    r(1, 0) = (m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2)) / d;
    r(1, 1) = (m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0)) / d;
    r(1, 2) = (m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2)) / d;
    r(2, 0) = (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0)) / d;
    r(2, 1) = (m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1)) / d;
    r(2, 2) = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) / d;
    return r;
}

// lower-triangular Cholesky factor of an SPD matrix; throws if a pivot
// is not strictly positive
inline Mat3 cholesky_lower(const Mat3& m) {
    Mat3 L;
    for (std::size_t j = 0; j < 3; ++j) {
        double d = m(j, j);
        for (std::size_t k = 0; k < j; ++k) d -= L(j, k) * L(j, k);
        if (!(d > 0))
            throw degenerate_error("matrix is not positive definite (pivot " +
                                   std::to_string(j) + ")");
        L(j, j) = std::sqrt(d);
        for (std::size_t i = j + 1; i < 3; ++i) {
            double s = m(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= L(i, k) * L(j, k);
            L(i, j) = s / L(j, j);
        }
    }
    return L;
}

inline Vec3 solve_lower(const Mat3& L, const Vec3& b) {
    Vec3 x;
    for (std::size_t i = 0; i < 3; ++i) {
        double s = b[i];
        for (std::size_t k = 0; k < i; ++k) s -= L(i, k) * x[k];
        x[i] = s / L(i, i);
    }
    return x;
}

// eigenvalues of a symmetric 3x3 by cyclic Jacobi; returned ascending
inline std::array<double, 3> symmetric_eigenvalues(const Mat3& m) {
    Mat3 s = m;
    for (int sweep = 0; sweep < 32; ++sweep) {
        double off = std::abs(s(0, 1)) + std::abs(s(0, 2)) + std::abs(s(1, 2));
        if (off < 1e-15 * (1.0 + s.max_abs())) break;
        for (std::size_t p = 0; p < 3; ++p)
            for (std::size_t q = p + 1; q < 3; ++q) {
                if (s(p, q) == 0.0) continue;
                double theta = (s(q, q) - s(p, p)) / (2 * s(p, q));
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0), sn = t * c;
                Mat3 r = Mat3::identity();
                r(p, p) = c;
                r(q, q) = c;
                r(p, q) = sn;
                r(q, p) = -sn;
                s = r.transposed() * s * r;
            }
    }
    std::array<double, 3> ev{s(0, 0), s(1, 1), s(2, 2)};
    std::sort(ev.begin(), ev.end());
    return ev;
}

}  // namespace gaussmin
