#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <vector>

#include "gaussmin/radon.hpp"
#include "gaussmin/triangle.hpp"

// The alternating sextuple (r_x, eta_1, r_y, eta_2, r_z, eta_3) of vertex and
// height distances determines a triangle enclosing the origin up to rotation.
// Conversions: atom multiset -> parametric form (walk the 6-cycle pairing),
// parametric form -> triangle (accumulate origin-subtended gaps to closure).

namespace gaussmin {

inline constexpr double kClosureTol = 1e-8;

struct ParametricForm {
    // slot order b1 a1 b2 a2 b3 a3 = (r_x, eta_1, r_y, eta_2, r_z, eta_3);
    // side i joins vertices i and i+1 (mod 3) through height a_i
    std::array<double, 3> b{};  // vertex distances
    std::array<double, 3> a{};  // height distances
    TriangleCase label = TriangleCase::I;
    // case II: the side with the exterior foot is side `special_side` and the
    // foot lies beyond vertex `special_vertex` (0 -> b[i], 1 -> b[i+1]);
    // case III: side `special_side` has its foot on vertex `special_vertex`
    int special_side = -1;
    int special_vertex = -1;

    std::array<double, 6> sextuple() const {
        return {b[0], a[0], b[1], a[1], b[2], a[2]};
    }
};

namespace detail {

// the 6 relabelings of a cycle: 3 rotations x 2 directions. Rotation shifts
// (b,a) slots together; reflection reverses orientation, re-pairing side i
// with the preceding vertex.
inline ParametricForm relabel(const ParametricForm& p, int rot, bool reflect) {
    ParametricForm q;
    q.label = p.label;
    if (!reflect) {
        for (int i = 0; i < 3; ++i) {
            q.b[i] = p.b[(i + rot) % 3];
            q.a[i] = p.a[(i + rot) % 3];
        }
        if (p.special_side >= 0) {
            q.special_side = (p.special_side - rot + 3) % 3;
            q.special_vertex = p.special_vertex;
        }
    } else {
        // reversed walk: vertices b'_i = b_{rot - i}, sides a'_i join b'_i,b'_{i+1}
        for (int i = 0; i < 3; ++i) {
            q.b[i] = p.b[((rot - i) % 3 + 3) % 3];
            q.a[i] = p.a[((rot - i - 1) % 3 + 3) % 3];
        }
        if (p.special_side >= 0) {
            q.special_side = ((rot - p.special_side - 1) % 3 + 3) % 3;
            q.special_vertex = 1 - p.special_vertex;
        }
    }
    return q;
}

inline bool lex_less(const std::array<double, 6>& x, const std::array<double, 6>& y) {
    for (int i = 0; i < 6; ++i) {
        if (x[i] < y[i]) return true;
        if (x[i] > y[i]) return false;
    }
    return false;
}

}  // namespace detail

// Deterministic representative among the 6 relabelings. Case II/III: the
// special side becomes side 0 with its special vertex first; remaining
// freedom (and all of case I) resolved lexicographically.
inline ParametricForm canonical_form(const ParametricForm& p) {
    std::optional<ParametricForm> best;
    for (int rot = 0; rot < 3; ++rot)
        for (int refl = 0; refl < 2; ++refl) {
            ParametricForm q = detail::relabel(p, rot, refl != 0);
            if (p.label != TriangleCase::I) {
                if (q.special_side != 0 || q.special_vertex != 0) continue;
            }
            if (!best || detail::lex_less(q.sextuple(), best->sextuple())) best = q;
        }
    return *best;
}

// congruence metric: min over relabelings of the sup entry difference
inline double parametric_distance(const ParametricForm& p, const ParametricForm& q) {
    double best = std::numeric_limits<double>::infinity();
    auto sq = q.sextuple();
    for (int rot = 0; rot < 3; ++rot)
        for (int refl = 0; refl < 2; ++refl) {
            auto sp = detail::relabel(p, rot, refl != 0).sextuple();
            double d = 0;
            for (int i = 0; i < 6; ++i) d = std::max(d, std::abs(sp[i] - sq[i]));
            best = std::min(best, d);
        }
    return best;
}

inline ParametricForm parametric_of_triangle(const Triangle2D& t) {
    auto cr = classify_case(t);
    auto feet = heights(t);
    auto r = t.vertex_distances();
    ParametricForm p;
    p.b = {r[0], r[1], r[2]};
    p.a = {feet[0].dist, feet[1].dist, feet[2].dist};
    p.label = cr.label;
    if (cr.label != TriangleCase::I) {
        p.special_side = cr.side;
        double s = cr.s[cr.side];
        // beyond/on first endpoint when s >= 1, second when s <= 0; side i
        // joins cycle vertices i,(i+1): side order xy,yz,xz matches vertex
        // pairs (0,1),(1,2),(2,0) except side 2 is (x,z) = (0,2)
        bool first_endpoint = s >= 0.5;
        int pidx = kSideEnds[cr.side][0], qidx = kSideEnds[cr.side][1];
        int vtx = first_endpoint ? pidx : qidx;
        // map vertex index to cycle position of side cr.side
        if (cr.side == 2) {  // side xz joins cycle vertices 2 and 0
            p.special_vertex = (vtx == 2) ? 0 : 1;
        } else {
            p.special_vertex = (vtx == cr.side) ? 0 : 1;
        }
    }
    // side 2 of the cycle is (z, x) while kSideEnds has (x, z); a[] order is
    // unaffected (eta_3 belongs to the xz line either way)
    return canonical_form(p);
}

// ---- atom multiset -> parametric form -------------------------------------

// Walks the bipartite 6-cycle between height values and vertex values. In
// case III the degenerate pair (a,a) is first restored. Repeated distances
// are handled by an Euler walk over value multiplicities; per the pairing
// lemma any alternating completion yields a congruent triangle.
inline ParametricForm pairs_to_parametric(const AtomSet& set, double value_tol = 1e-9) {
    std::vector<Atom> atoms = set.atoms;
    if (atoms.size() != 6 && atoms.size() != 5)
        throw data_error("atom set must contain 5 or 6 atoms");

    // group nearly-equal values so duplicates land on a shared node
    auto node_of = [&](std::vector<double>& reps, double v) {
        for (std::size_t i = 0; i < reps.size(); ++i)
            if (std::abs(reps[i] - v) <= value_tol * std::max(1.0, std::abs(v))) return int(i);
        reps.push_back(v);
        return int(reps.size() - 1);
    };
    std::vector<double> a_reps, b_reps;
    struct Edge {
        int an, bn;
        int coeff;
        bool used = false;
    };
    std::vector<Edge> edges;
    for (const auto& at : atoms)
        edges.push_back({node_of(a_reps, at.a), node_of(b_reps, at.b), at.coeff});

    if (atoms.size() == 5) {
        // restore the degenerate pair: the height and vertex values of odd
        // degree must coincide numerically
        std::vector<int> adeg(a_reps.size(), 0), bdeg(b_reps.size(), 0);
        for (auto& e : edges) {
            adeg[e.an]++;
            bdeg[e.bn]++;
        }
        int an = -1, bn = -1;
        for (std::size_t i = 0; i < adeg.size(); ++i)
            if (adeg[i] % 2 == 1) an = int(i);
        for (std::size_t i = 0; i < bdeg.size(); ++i)
            if (bdeg[i] % 2 == 1) bn = int(i);
        if (an < 0 || bn < 0 ||
            std::abs(a_reps[an] - b_reps[bn]) > 10 * value_tol * std::max(1.0, b_reps[bn]))
            throw data_error("five-atom set has no degenerate pair to restore");
        edges.push_back({an, bn, 0});
    }

    // alternating closed walk through all six edges; repeated distances make
    // this a multigraph, so a greedy walk can dead-end and we backtrack.
    // Edge order is sorted for determinism.
    int start_b = 0;
    for (std::size_t i = 1; i < b_reps.size(); ++i)
        if (b_reps[i] < b_reps[start_b]) start_b = int(i);

    std::array<double, 3> walk_b{}, walk_a{};
    std::array<int, 3> side_coeff{1, 1, 1};

    auto edge_order = [&](bool from_b, int node) {
        std::vector<int> idx;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (!edges[i].used && (from_b ? edges[i].bn : edges[i].an) == node)
                idx.push_back(int(i));
        std::sort(idx.begin(), idx.end(), [&](int l, int r) {
            double vl = from_b ? a_reps[edges[l].an] : b_reps[edges[l].bn];
            double vr = from_b ? a_reps[edges[r].an] : b_reps[edges[r].bn];
            return vl < vr;
        });
        return idx;
    };

    std::function<bool(int, int)> walk = [&](int step, int cur_b) -> bool {
        if (step == 3) return cur_b == start_b;
        walk_b[step] = b_reps[cur_b];
        for (int e1 : edge_order(true, cur_b)) {
            edges[e1].used = true;
            int an = edges[e1].an;
            for (int e2 : edge_order(false, an)) {
                edges[e2].used = true;
                walk_a[step] = a_reps[an];
                side_coeff[step] = 1;
                if (edges[e1].coeff != 1) side_coeff[step] = edges[e1].coeff;
                if (edges[e2].coeff != 1) side_coeff[step] = edges[e2].coeff;
                if (walk(step + 1, edges[e2].bn)) return true;
                edges[e2].used = false;
            }
            edges[e1].used = false;
        }
        return false;
    };
    if (!walk(0, start_b)) throw data_error("atom pairing is not a single 6-cycle");

    ParametricForm p;
    p.label = set.label;
    // walk produced b1 a1 b2 a2 b3 a3 with side i joining walk_b[i], walk_b[i+1]
    p.b = walk_b;
    p.a = walk_a;
    int sum = 0;
    for (const auto& at : atoms) sum += at.coeff;
    if (atoms.size() == 5) {
        p.label = TriangleCase::III;
        for (int i = 0; i < 3; ++i)
            if (side_coeff[i] == 0) {
                p.special_side = i;
                // the restored edge tied walk_a[i] to one of its endpoints
                p.special_vertex =
                    std::abs(walk_a[i] - walk_b[i]) <= std::abs(walk_a[i] - walk_b[(i + 1) % 3])
                        ? 0 : 1;
            }
    } else if (sum == 4) {
        p.label = TriangleCase::II;
        for (int i = 0; i < 3; ++i)
            if (side_coeff[i] == -1) p.special_side = i;
        // the negative atom names the vertex the foot lies beyond
        for (const auto& at : atoms)
            if (at.coeff == -1) {
                int i = p.special_side;
                p.special_vertex =
                    std::abs(at.b - p.b[i]) <= std::abs(at.b - p.b[(i + 1) % 3]) ? 0 : 1;
            }
    } else {
        p.label = TriangleCase::I;
    }
    return canonical_form(p);
}

// ---- parametric form -> triangle -------------------------------------------

struct ReconstructionOptions {
    double closure_tol = kClosureTol;
    double roundtrip_tol = 1e-8;  // parametric form of the output vs input
    bool verify_roundtrip = true;
};

// Places vertex 1 at angle 0 and accumulates the origin-subtended gap of each
// side counterclockwise. A side with height eta between radii (rp, rq)
// subtends arccos(eta/rp) + arccos(eta/rq); if the foot lies beyond a vertex
// the corresponding term flips sign. The case fixes the pattern; the gaps
// must close to 2*pi.
inline Triangle2D triangle_from_parametric(const ParametricForm& pf,
                                           const ReconstructionOptions& opt = {}) {
    for (int i = 0; i < 3; ++i) {
        double lo = std::min(pf.b[i], pf.b[(i + 1) % 3]);
        if (!(pf.a[i] > 0) || pf.a[i] > lo * (1 + 1e-12))
            throw domain_error(
                "inconsistent parametric form: height exceeds an adjacent vertex distance");
    }
    std::array<double, 3> gap{};
    for (int i = 0; i < 3; ++i) {
        double rp = pf.b[i], rq = pf.b[(i + 1) % 3], eta = pf.a[i];
        double tp = std::acos(std::min(1.0, eta / rp));
        double tq = std::acos(std::min(1.0, eta / rq));
        if (pf.label == TriangleCase::II && i == pf.special_side) {
            // exterior foot: subtract the angle at the vertex it lies beyond
            gap[i] = (pf.special_vertex == 0) ? tq - tp : tp - tq;
            if (gap[i] <= 0)
                throw domain_error("inconsistent parametric form: case II side does not open");
        } else {
            gap[i] = tp + tq;
        }
    }
    double closure = gap[0] + gap[1] + gap[2] - kTwoPi;
    if (std::abs(closure) > opt.closure_tol)
        throw domain_error("parametric form does not close around the origin (defect " +
                           std::to_string(closure) + ")");
    // distribute the closure defect so the vertices sit at consistent angles
    double adjust = closure / 3.0;
    Triangle2D t;
    double theta = 0;
    for (int i = 0; i < 3; ++i) {
        t.v[i] = {pf.b[i] * std::cos(theta), pf.b[i] * std::sin(theta)};
        theta += gap[i] - adjust;
    }
    if (opt.verify_roundtrip) {
        ParametricForm back = parametric_of_triangle(t);
        double d = parametric_distance(back, pf);
        if (d > opt.roundtrip_tol)
            throw domain_error("reconstructed triangle does not reproduce the parametric form "
                               "(distance " + std::to_string(d) + ")");
    }
    return t;
}

}  // namespace gaussmin
