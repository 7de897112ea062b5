#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <vector>

#include "gaussmin/errors.hpp"
#include "gaussmin/triangle.hpp"

// Circular transforms of triangles. R_S(rho) is the angular measure of S on
// the circle of radius rho. Exact evaluation intersects the circle with each
// edge and classifies arcs by midpoint tests; the basis route sums the
// closed-form atoms Phi_{a,b} of the six right sub-triangles.

namespace gaussmin {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Phi_{a,b}(rho) = R_{T(a,b)}(rho):
//   arccos(a/b)                    for rho <= a
//   arccos(a/b) - arccos(a/rho)    for a < rho < b
//   0                              for rho >= b
template <typename Real = double>
Real phi_atom(Real a, Real b, Real rho) {
    if (!(a > 0) || !(b >= a)) throw domain_error("phi requires 0 < a <= b");
    if (!(rho > 0)) throw domain_error("phi requires rho > 0");
    if (rho >= b) return Real(0);
    Real base = std::acos(std::min(Real(1), a / b));
    if (rho <= a) return base;
    return base - std::acos(std::min(Real(1), a / rho));
}

// T(a,b) = conv((0,0),(a,0),(a,sqrt(b^2-a^2)))
inline Triangle2D basic_triangle(double a, double b) {
    if (!(a > 0) || !(b >= a)) throw domain_error("basic_triangle requires 0 < a <= b");
    double h = std::sqrt(b * b - a * a);
    if (h == 0) throw degenerate_error("basic_triangle with a = b is a segment");
    return {{Vec2{0, 0}, Vec2{a, 0}, Vec2{a, h}}};
}

struct Atom {
    double a = 0;  // height distance
    double b = 0;  // vertex distance, a <= b
    int coeff = 1; // +1 or -1
};

struct AtomSet {
    std::vector<Atom> atoms;       // 6 atoms (case I/II) or 5 (case III)
    TriangleCase label = TriangleCase::I;
    // cycle recorded as b1 a1 b2 a2 b3 a3; atoms are (a_i,b_i),(a_i,b_{i+1})
    std::array<double, 3> cycle_b{};  // vertex distances r_x, r_y, r_z
    std::array<double, 3> cycle_a{};  // height distances eta_1, eta_2, eta_3

    int coefficient_sum() const {
        int s = 0;
        for (const auto& at : atoms) s += at.coeff;
        return s;
    }
    double max_b() const {
        double m = 0;
        for (const auto& at : atoms) m = std::max(m, at.b);
        return m;
    }
};

// Sub-triangle decomposition. Per side with foot n and endpoints (p, q):
// atoms (||n||, ||p||) and (||n||, ||q||); in case II the atom of the vertex
// the exterior foot lies beyond gets coefficient -1; in case III the
// degenerate atom (eta = r) is omitted.
inline AtomSet decompose_atoms(const Triangle2D& t) {
    CaseReport cr = classify_case(t);
    auto feet = heights(t);
    auto r = t.vertex_distances();

    AtomSet set;
    set.label = cr.label;
    set.cycle_b = {r[0], r[1], r[2]};
    set.cycle_a = {feet[0].dist, feet[1].dist, feet[2].dist};

    for (int i = 0; i < 3; ++i) {
        double eta = feet[i].dist;
        double s = feet[i].s;
        int p = kSideEnds[i][0], q = kSideEnds[i][1];
        // foot beyond p when s > 1, beyond q when s < 0
        for (auto [vtx, beyond] : {std::pair{p, s > 1.0}, std::pair{q, s < 0.0}}) {
            if (cr.label == TriangleCase::III && i == cr.side &&
                std::abs(eta - r[vtx]) <= kCaseTol * std::max(1.0, r[vtx])) {
                continue;  // degenerate pair dropped
            }
            int c = (cr.label == TriangleCase::II && i == cr.side && beyond) ? -1 : 1;
            set.atoms.push_back({std::min(eta, r[vtx]), r[vtx], c});
        }
    }
    return set;
}

template <typename Real = double>
Real radon_from_atoms(const AtomSet& set, Real rho) {
    Real total = 0;
    for (const auto& at : set.atoms)
        total += Real(at.coeff) * phi_atom<Real>(Real(at.a), Real(at.b), rho);
    return total;
}

// Exact circle-triangle angular measure. Works for any triangle (the
// counterexample needs non-enclosing ones).
inline double radon_exact(const Triangle2D& t, double rho) {
    if (!(rho > 0)) throw domain_error("radon_exact requires rho > 0");

    auto inside = [&](Vec2 pt) {
        double d1 = (t.v[1] - t.v[0]).cross(pt - t.v[0]);
        double d2 = (t.v[2] - t.v[1]).cross(pt - t.v[1]);
        double d3 = (t.v[0] - t.v[2]).cross(pt - t.v[2]);
        bool neg = d1 < 0 || d2 < 0 || d3 < 0;
        bool pos = d1 > 0 || d2 > 0 || d3 > 0;
        return !(neg && pos);
    };

    std::vector<double> angles;
    for (const auto& ends : kSideEnds) {
        Vec2 p = t.v[ends[0]], q = t.v[ends[1]];
        Vec2 d = q - p;
        double A = d.norm2();
        double B = 2.0 * p.dot(d);
        double C = p.norm2() - rho * rho;
        double disc = B * B - 4 * A * C;
        if (!(disc > 0) || A == 0) continue;
        double sq = std::sqrt(disc);
        for (double tt : {(-B - sq) / (2 * A), (-B + sq) / (2 * A)}) {
            if (tt < 0.0 || tt > 1.0) continue;
            Vec2 pt = p + tt * d;
            double ang = std::atan2(pt.y, pt.x);
            if (ang < 0) ang += kTwoPi;
            angles.push_back(ang);
        }
    }

    if (angles.empty()) {
        // circle entirely inside or outside; probe one point
        Vec2 probe{rho * std::cos(0.1234567), rho * std::sin(0.1234567)};
        return inside(probe) ? kTwoPi : 0.0;
    }

    std::sort(angles.begin(), angles.end());
    double total = 0;
    const std::size_t n = angles.size();
    for (std::size_t i = 0; i < n; ++i) {
        double a0 = angles[i];
        double a1 = (i + 1 < n) ? angles[i + 1] : angles[0] + kTwoPi;
        double mid = 0.5 * (a0 + a1);
        Vec2 pt{rho * std::cos(mid), rho * std::sin(mid)};
        if (inside(pt)) total += a1 - a0;
    }
    return total;
}

struct RadonProfile {
    std::vector<double> rho;
    std::vector<double> value;
    // exact evaluator when the profile came from a known triangle/atom set
    std::function<double(double)> exact;
    std::vector<double> error_estimate;  // optional, from Laplace inversion

    std::size_t size() const { return rho.size(); }
};

struct ProfileOptions {
    std::size_t points = 2048;
    double upper_factor = 1.05;  // grid upper end relative to max vertex distance
};

// uniform grid on (0, upper_factor * max b] evaluated through the atoms
inline RadonProfile profile_from_atoms(const AtomSet& set, const ProfileOptions& opt = {}) {
    RadonProfile p;
    double hi = opt.upper_factor * set.max_b();
    p.rho.resize(opt.points);
    p.value.resize(opt.points);
    for (std::size_t i = 0; i < opt.points; ++i) {
        double r = hi * double(i + 1) / double(opt.points);
        p.rho[i] = r;
        p.value[i] = radon_from_atoms(set, r);
    }
    p.exact = [set](double r) { return radon_from_atoms(set, r); };
    return p;
}

inline RadonProfile profile_from_triangle(const Triangle2D& t, const ProfileOptions& opt = {}) {
    return profile_from_atoms(decompose_atoms(t), opt);
}

}  // namespace gaussmin
