#pragma once

#include <stdexcept>
#include <string>

namespace gaussmin {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// bad arguments to a pure function (a > b, non-enclosing triangle, ...)
struct domain_error : error {
    using error::error;
};

// covariance fails SPD or the cone condition Sigma^{-1} 1 > 0
struct inadmissible_error : error {
    using error::error;
};

// singular or degenerate geometry (zero-area triangle, singular W)
struct degenerate_error : error {
    using error::error;
};

// malformed or inconsistent numeric data (non-monotone tail, empty grid)
struct data_error : error {
    using error::error;
};

// sampling grid too coarse to separate breakpoints
struct resolution_error : error {
    resolution_error(const std::string& msg, double suggested)
        : error(msg), suggested_step(suggested) {}
    double suggested_step;
};

// Laplace inversion order-comparison diverged
struct inversion_unstable_error : error {
    using error::error;
};

}  // namespace gaussmin
