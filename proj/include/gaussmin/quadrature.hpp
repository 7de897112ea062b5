#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "gaussmin/errors.hpp"

// Adaptive Gauss-Kronrod (G7,K15) quadrature, templated on the float type so
// the Laplace machinery can run it in long double.

namespace gaussmin {

namespace detail {

// K15 nodes on [0,1] of the positive half, with Kronrod weights and the
// embedded G7 weights (zero where a node is Kronrod-only)
template <typename Real>
struct GK15 {
    static constexpr int n = 8;
    static constexpr Real node[n] = {
        Real(0.991455371120812639206854697526329L), Real(0.949107912342758524526189684047851L),
        Real(0.864864423359769072789712788640926L), Real(0.741531185599394439863864773280788L),
        Real(0.586087235467691130294144838258730L), Real(0.405845151377397166906606412076961L),
        Real(0.207784955007898467600689403773245L), Real(0.000000000000000000000000000000000L)};
    static constexpr Real wk[n] = {
        Real(0.022935322010529224963732008058970L), Real(0.063092092629978553290700663189204L),
        Real(0.104790010322250183839876322541518L), Real(0.140653259715525918745189590510238L),
        Real(0.169004726639267902826583426598550L), Real(0.190350578064785409913256402421014L),
        Real(0.204432940075298892414161999234649L), Real(0.209482141084727828012999174891714L)};
    static constexpr Real wg[n] = {
        Real(0.0L), Real(0.129484966168869693270611432679082L),
        Real(0.0L), Real(0.279705391489276667901467771423780L),
        Real(0.0L), Real(0.381830050505118944950369775488975L),
        Real(0.0L), Real(0.417959183673469387755102040816327L)};
};

template <typename Real, typename F>
void gk15_panel(const F& f, Real a, Real b, Real& value, Real& err) {
    using T = GK15<Real>;
    const Real h = (b - a) / 2, c = (a + b) / 2;
    Real sk = 0, sg = 0;
    for (int i = 0; i < T::n; ++i) {
        Real x = h * T::node[i];
        Real fv = (i + 1 == T::n) ? f(c) : f(c - x) + f(c + x);
        sk += T::wk[i] * fv;
        sg += T::wg[i] * fv;
    }
    value = sk * h;
    Real diff = std::abs((sk - sg) * h);
    // QUADPACK-style error rescale
    err = diff;
    Real scale = std::abs(value);
    if (scale > 0 && diff > 0) {
        Real r = std::pow(Real(200) * diff / scale, Real(1.5));
        if (r < 1) err = scale * r;
    }
}

}  // namespace detail

struct QuadratureOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_depth = 48;
};

// adaptive bisection on one interval
template <typename Real, typename F>
Real integrate_gk(const F& f, Real a, Real b, const QuadratureOptions& opt = {}) {
    struct Item {
        Real a, b, value, err;
        int depth;
    };
    Real v0, e0;
    detail::gk15_panel<Real>(f, a, b, v0, e0);
    std::vector<Item> stack{{a, b, v0, e0, 0}};
    Real total = 0, total_err = 0;
    Real whole = std::abs(v0);
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        Real tol = std::max(Real(opt.abs_tol),
                            Real(opt.rel_tol) * std::max(whole, std::abs(it.value)));
        if (it.err <= tol || it.depth >= opt.max_depth) {
            total += it.value;
            total_err += it.err;
            continue;
        }
        Real m = (it.a + it.b) / 2;
        Real vl, el, vr, er;
        detail::gk15_panel<Real>(f, it.a, m, vl, el);
        detail::gk15_panel<Real>(f, m, it.b, vr, er);
        whole = std::max(whole, std::abs(vl) + std::abs(vr));
        stack.push_back({it.a, m, vl, el, it.depth + 1});
        stack.push_back({m, it.b, vr, er, it.depth + 1});
    }
    return total;
}

// integrate over [0, s_n] split at interior knots (piecewise-smooth integrands)
template <typename Real, typename F>
Real integrate_segmented(const F& f, const std::vector<Real>& knots,
                         const QuadratureOptions& opt = {}) {
    Real total = 0;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i)
        if (knots[i + 1] > knots[i]) total += integrate_gk<Real>(f, knots[i], knots[i + 1], opt);
    return total;
}

}  // namespace gaussmin
