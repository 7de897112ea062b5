#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "gaussmin/errors.hpp"
#include "gaussmin/radon.hpp"

// Breakpoint detection on a sampled circular transform. The profile of an
// origin-enclosing triangle is smooth except at the six distances
// {eta_1,eta_2,eta_3,r_x,r_y,r_z}: square-root kinks at heights, slope jumps
// at vertex distances. Both spike in the discrete second difference.

namespace gaussmin {

struct BreakpointOptions {
    double spike_factor = 25.0;      // threshold over the median second difference
    double merge_steps = 2.5;        // cluster spikes closer than this many steps
    double refine_tol = 1e-10;       // window width target when refining
    std::size_t max_breakpoints = 8;
};

namespace detail {

// shrinking-window search for the maximum |second difference| around x0,
// using an exact evaluator
template <typename F>
double refine_breakpoint(const F& f, double x0, double halfwidth, double lo_limit,
                         double hi_limit, double tol) {
    double center = x0, width = halfwidth;
    for (int it = 0; it < 80 && width > tol; ++it) {
        double step = width / 4;
        double best = center;
        double best_v = -1;
        for (int i = -4; i <= 4; ++i) {
            double x = center + i * step;
            if (x - step < lo_limit || x + step > hi_limit) continue;
            double d2 = std::abs(f(x - step) - 2 * f(x) + f(x + step));
            if (d2 > best_v) {
                best_v = d2;
                best = x;
            }
        }
        center = best;
        width /= 2.2;
    }
    return center;
}

}  // namespace detail

// Returns the estimated discontinuity locations of the profile or its
// derivative, sorted ascending. Requires breakpoints separated by at least
// ~3 grid steps; closer pairs raise resolution_error with a usable step.
inline std::vector<double> detect_breakpoints(const RadonProfile& profile,
                                              const BreakpointOptions& opt = {}) {
    const auto& x = profile.rho;
    const auto& y = profile.value;
    if (x.size() < 16) throw data_error("profile too short for breakpoint detection");
    const std::size_t n = x.size();
    const double h = x[1] - x[0];

    std::vector<double> d2(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) d2[i] = std::abs(y[i - 1] - 2 * y[i] + y[i + 1]);

    std::vector<double> positive;
    for (double v : d2)
        if (v > 0) positive.push_back(v);
    if (positive.empty()) throw data_error("profile has no curvature; not a triangle transform");
    std::nth_element(positive.begin(), positive.begin() + positive.size() / 2, positive.end());
    double med = positive[positive.size() / 2];
    double threshold = std::max(opt.spike_factor * med, 1e-13);

    // local maxima above threshold
    std::vector<std::size_t> spikes;
    for (std::size_t i = 2; i + 2 < n; ++i) {
        if (d2[i] <= threshold) continue;
        if (d2[i] >= d2[i - 1] && d2[i] >= d2[i + 1]) spikes.push_back(i);
    }
    if (spikes.empty()) throw data_error("no breakpoints found; not a triangle transform");

    // cluster
    std::vector<std::size_t> kept;
    for (std::size_t idx : spikes) {
        if (!kept.empty() && double(idx - kept.back()) <= opt.merge_steps) {
            if (d2[idx] > d2[kept.back()]) kept.back() = idx;
        } else {
            kept.push_back(idx);
        }
    }

    std::vector<double> result;
    for (std::size_t idx : kept) {
        double x0 = x[idx];
        if (profile.exact) {
            result.push_back(detail::refine_breakpoint(profile.exact, x0, 2.0 * h,
                                                       std::max(x.front(), 0.25 * h),
                                                       x.back(), opt.refine_tol));
        } else {
            // parabolic vertex through the spike triple
            double a = d2[idx - 1], b = d2[idx], c = d2[idx + 1];
            double denom = a - 2 * b + c;
            double shift = (denom != 0) ? 0.5 * (a - c) / denom : 0.0;
            shift = std::clamp(shift, -1.0, 1.0);
            result.push_back(x0 + shift * h);
        }
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end(),
                             [&](double a, double b) { return std::abs(a - b) < 1.5 * h; }),
                 result.end());

    for (std::size_t i = 0; i + 1 < result.size(); ++i)
        if (result[i + 1] - result[i] < 3 * h)
            throw resolution_error("breakpoints closer than 3 grid steps; refine the grid",
                                   (result[i + 1] - result[i]) / 4.0);
    if (result.size() > opt.max_breakpoints)
        throw data_error("too many breakpoints detected; profile is noisy or not a "
                         "triangle transform");
    return result;
}

}  // namespace gaussmin
