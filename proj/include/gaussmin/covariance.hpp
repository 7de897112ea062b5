#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "gaussmin/errors.hpp"
#include "gaussmin/linalg.hpp"

// 3x3 covariance geometry: admissibility (Sigma^{-1} 1 > 0), kappa, standard
// square roots (N N^t = Sigma with N e1 = kappa^{-1} 1), the section triangle
// of the positive cone on the plane x1 = 1, and the reconstruction of Sigma
// from a section plus kappa.

namespace gaussmin {

inline constexpr double kSymmetryRelTol = 1e-12;
// strictness margin for the cone condition, applied to unit-normalized
// direction first-coordinates; near the boundary the section degenerates
inline constexpr double kDirectionEps = 1e-9;

struct CovarianceMatrix3 {
    Mat3 m;

    CovarianceMatrix3() : m(Mat3::identity()) {}
    explicit CovarianceMatrix3(const Mat3& mat) : m(mat) {}

    double operator()(std::size_t i, std::size_t j) const { return m(i, j); }

    bool symmetric() const {
        double scale = std::max(m.max_abs(), 1e-300);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j)
                if (std::abs(m(i, j) - m(j, i)) > kSymmetryRelTol * scale) return false;
        return true;
    }
};

struct AdmissibilityDiagnostics {
    bool finite = false;
    bool symmetric = false;
    bool positive_definite = false;
    Vec3 inv_sigma_ones;       // Sigma^{-1} 1 (valid when positive_definite)
    bool admissible = false;   // SPD and Sigma^{-1} 1 > 0 strictly
    std::string reason;        // empty when admissible
};

inline AdmissibilityDiagnostics validate_admissible(const CovarianceMatrix3& sigma) {
    AdmissibilityDiagnostics d;
    d.finite = sigma.m.finite();
    if (!d.finite) {
        d.reason = "entries are not finite";
        return d;
    }
    d.symmetric = sigma.symmetric();
    if (!d.symmetric) {
        d.reason = "matrix is not symmetric";
        return d;
    }
    auto ev = symmetric_eigenvalues(sigma.m);
    d.positive_definite = ev[0] > 0;
    if (!d.positive_definite) {
        d.reason = "matrix is not positive definite (min eigenvalue " +
                   std::to_string(ev[0]) + ")";
        return d;
    }
    d.inv_sigma_ones = inverse(sigma.m) * ones3();
    double lo = std::min({d.inv_sigma_ones[0], d.inv_sigma_ones[1], d.inv_sigma_ones[2]});
    if (!(lo > 0)) {
        d.reason = "Sigma^{-1} 1 has a non-positive component";
        return d;
    }
    d.admissible = true;
    return d;
}

inline void require_admissible(const CovarianceMatrix3& sigma) {
    auto d = validate_admissible(sigma);
    if (!d.admissible) throw inadmissible_error("inadmissible covariance: " + d.reason);
}

// kappa = sqrt(1^t Sigma^{-1} 1)
inline double kappa(const CovarianceMatrix3& sigma) {
    require_admissible(sigma);
    return std::sqrt(ones3().dot(inverse(sigma.m) * ones3()));
}

struct StandardRoot {
    Mat3 n;
    double kappa = 0;
};

// Cholesky factor composed with the Householder reflection sending e1 to
// L^{-1} 1 / kappa, then a deterministic sign fix so det(O) = +1.
inline StandardRoot standard_square_root(const CovarianceMatrix3& sigma) {
    require_admissible(sigma);
    Mat3 L = cholesky_lower(sigma.m);
    Vec3 w = solve_lower(L, ones3());
    double k = w.norm();
    Vec3 v = w * (1.0 / k);

    Mat3 O = Mat3::identity();
    Vec3 u = unit3(0) - v;
    double un = u.norm();
    if (un > 1e-14) {
        u = u * (1.0 / un);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) O(i, j) -= 2.0 * u[i] * u[j];
        // reflection has det -1; flip the last column to restore +1
        O(0, 2) = -O(0, 2);
        O(1, 2) = -O(1, 2);
        O(2, 2) = -O(2, 2);
    }
    return {L * O, k};
}

struct SectionTriangle {
    std::array<Vec2, 3> vertices;  // (alpha_i, beta_i) on the plane x1 = 1
};

// directions d_i = N^{-1} e_i rescaled to first coordinate 1; the last two
// coordinates are the section vertices
inline SectionTriangle section_triangle(const StandardRoot& root) {
    Mat3 ninv = inverse(root.n);
    SectionTriangle t;
    for (std::size_t i = 0; i < 3; ++i) {
        Vec3 d{{ninv(0, i), ninv(1, i), ninv(2, i)}};
        double nrm = d.norm();
        if (std::abs(d[0]) <= kDirectionEps * nrm)
            throw inadmissible_error(
                "cone direction nearly orthogonal to e1; Sigma is at the "
                "admissibility boundary");
        if (d[0] < 0) d = d * (-1.0);
        t.vertices[i] = {d[1] / d[0], d[2] / d[0]};
    }
    return t;
}

// Lemma-level reconstruction: W = [1; alpha; beta] by columns,
// mu = kappa W^{-1} e1, Sigma = (W Lambda)^{-1} (W Lambda)^{-t}
inline CovarianceMatrix3 sigma_from_section(const SectionTriangle& t, double kap) {
    if (!(kap > 0)) throw domain_error("kappa must be positive");
    Mat3 w;
    for (std::size_t i = 0; i < 3; ++i) {
        w(0, i) = 1.0;
        w(1, i) = t.vertices[i].x;
        w(2, i) = t.vertices[i].y;
    }
    if (std::abs(w.det()) < 1e-14)
        throw degenerate_error("section vertices are affinely dependent");
    Mat3 winv = inverse(w);
    Vec3 mu = (winv * unit3(0)) * kap;
    for (std::size_t i = 0; i < 3; ++i)
        if (!(mu[i] > 0))
            throw domain_error(
                "section is inconsistent: barycentric weight mu_" + std::to_string(i) +
                " is not positive (origin not interior or bad kappa)");
    Mat3 lam_inv = Mat3::diag(1 / mu[0], 1 / mu[1], 1 / mu[2]);
    Mat3 ninv_t = lam_inv * winv;  // this is P^t N with P = identity
    return CovarianceMatrix3(ninv_t * ninv_t.transposed());
}

struct PermutationReport {
    std::array<int, 3> best_permutation{0, 1, 2};
    double distance = 0;
};

// min over the 6 permutation matrices of || P^t a P - b ||_F, ties broken by
// lexicographic permutation order
inline PermutationReport permutation_distance(const CovarianceMatrix3& a,
                                              const CovarianceMatrix3& b) {
    static constexpr std::array<std::array<int, 3>, 6> perms{
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    PermutationReport best;
    best.distance = std::numeric_limits<double>::infinity();
    for (const auto& p : perms) {
        // (P^t a P)(i,j) = a(p[i], p[j])
        double s = 0;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                double d = a.m(p[i], p[j]) - b.m(i, j);
                s += d * d;
            }
        double dist = std::sqrt(s);
        if (dist < best.distance - 0.0) {
            best.distance = dist;
            best.best_permutation = p;
        }
    }
    return best;
}

}  // namespace gaussmin
