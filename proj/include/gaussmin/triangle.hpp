#pragma once

#include <array>
#include <cmath>
#include <string>

#include "gaussmin/covariance.hpp"
#include "gaussmin/errors.hpp"
#include "gaussmin/linalg.hpp"

// Planar triangles around the origin: feet of perpendiculars, case
// classification (all feet interior / one exterior / one on a vertex).

namespace gaussmin {

inline constexpr double kInteriorTol = 1e-12;   // barycentric strictness
inline constexpr double kCaseTol = 1e-9;        // foot-parameter tolerance for case III

struct Triangle2D {
    std::array<Vec2, 3> v;  // x, y, z

    static Triangle2D from_section(const SectionTriangle& s) {
        return {{s.vertices[0], s.vertices[1], s.vertices[2]}};
    }

    double signed_area() const {
        return 0.5 * (v[1] - v[0]).cross(v[2] - v[0]);
    }

    // barycentric coordinates of the origin (normalized to sum 1)
    std::array<double, 3> origin_barycentric() const {
        double a2 = 2 * signed_area();
        if (a2 == 0) throw degenerate_error("triangle has zero area");
        // lambda_i proportional to the signed area of the opposite sub-triangle
        double l0 = (v[1]).cross(v[2]) / a2;
        double l1 = (v[2]).cross(v[0]) / a2;
        double l2 = (v[0]).cross(v[1]) / a2;
        return {l0, l1, l2};
    }

    bool encloses_origin() const {
        if (std::abs(signed_area()) == 0) return false;
        auto b = origin_barycentric();
        return b[0] > kInteriorTol && b[1] > kInteriorTol && b[2] > kInteriorTol;
    }

    std::array<double, 3> vertex_distances() const {
        return {v[0].norm(), v[1].norm(), v[2].norm()};
    }

    double max_vertex_distance() const {
        auto d = vertex_distances();
        return std::max({d[0], d[1], d[2]});
    }
};

// sides in the fixed order xy, yz, xz; endpoints as vertex indices
inline constexpr std::array<std::array<int, 2>, 3> kSideEnds{{{0, 1}, {1, 2}, {0, 2}}};

struct SideFoot {
    Vec2 foot;   // orthogonal projection of the origin onto the side's line
    double s;    // foot = s * p + (1 - s) * q for side (p, q)
    double dist; // ||foot||
};

inline SideFoot foot_of_perpendicular(Vec2 p, Vec2 q) {
    Vec2 d = p - q;
    double dd = d.norm2();
    if (dd == 0) throw degenerate_error("side endpoints coincide");
    double s = -(q.dot(d)) / dd;
    Vec2 n = s * p + (1.0 - s) * q;
    return {n, s, n.norm()};
}

// feet for sides xy, yz, xz
inline std::array<SideFoot, 3> heights(const Triangle2D& t) {
    if (t.signed_area() == 0) throw degenerate_error("triangle has zero area");
    std::array<SideFoot, 3> f;
    for (int i = 0; i < 3; ++i)
        f[i] = foot_of_perpendicular(t.v[kSideEnds[i][0]], t.v[kSideEnds[i][1]]);
    return f;
}

enum class TriangleCase { I, II, III };

inline std::string to_string(TriangleCase c) {
    switch (c) {
        case TriangleCase::I: return "I";
        case TriangleCase::II: return "II";
        default: return "III";
    }
}

struct CaseReport {
    TriangleCase label = TriangleCase::I;
    int side = -1;                     // offending side for II/III, else -1
    std::array<double, 3> s{};         // foot parameters per side
};

// case I: every foot strictly interior to its side; case III: a foot sits on
// a vertex (|s| or |1-s| within kCaseTol); case II otherwise
inline CaseReport classify_case(const Triangle2D& t) {
    if (!t.encloses_origin())
        throw domain_error("classify_case requires a triangle enclosing the origin");
    auto f = heights(t);
    CaseReport r;
    for (int i = 0; i < 3; ++i) r.s[i] = f[i].s;
    for (int i = 0; i < 3; ++i) {
        if (std::abs(r.s[i]) <= kCaseTol || std::abs(1.0 - r.s[i]) <= kCaseTol) {
            r.label = TriangleCase::III;
            r.side = i;
            return r;
        }
    }
    for (int i = 0; i < 3; ++i) {
        if (!(r.s[i] > kCaseTol && r.s[i] < 1.0 - kCaseTol)) {
            r.label = TriangleCase::II;
            r.side = i;
            return r;
        }
    }
    r.label = TriangleCase::I;
    return r;
}

}  // namespace gaussmin
