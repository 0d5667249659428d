#pragma once

#include <cmath>
#include <utility>

namespace rdp {

// Scalar root finding for the monotone dual updates. Newton steps with
// analytic derivatives, safeguarded by a maintained bracket; any step that
// leaves the bracket (or hits a zero derivative) falls back to bisection.

struct RootOptions {
    double tol = 1e-12;  // |f(x)| target
    int max_iter = 200;
};

// eval(x) must return {f(x), f'(x)} with f strictly decreasing on [lo, hi]
// and f(lo) > 0 >= f(hi). x0 is the initial guess, clamped into (lo, hi).
template <class Eval>
double newton_decreasing(Eval&& eval, double lo, double hi, double x0,
                         const RootOptions& opt = {}) {
    double x = x0;
    if (!(x > lo && x < hi)) x = lo + 0.5 * (hi - lo);
    for (int k = 0; k < opt.max_iter; ++k) {
        const auto [f, fp] = eval(x);
        if (std::abs(f) <= opt.tol) return x;
        if (f > 0.0) {
            lo = x;
        } else {
            hi = x;
        }
        double next = (fp != 0.0 && std::isfinite(fp)) ? x - f / fp : lo + 0.5 * (hi - lo);
        if (!(next > lo && next < hi) || !std::isfinite(next)) next = lo + 0.5 * (hi - lo);
        if (next == x) return x;  // bracket exhausted at double precision
        x = next;
    }
    return x;
}

}  // namespace rdp
