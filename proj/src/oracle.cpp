#include "rgdiff/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "rgdiff/errors.hpp"

namespace rgdiff {

namespace {

// `step_sq` is s in the header comment; `dt` only enters the Van der Pol
// difference quotient.
Trajectory run_scheme(const NonlinearityKind& kind, double step_sq, double dt, double eps,
                      double z0, double z1, long steps, std::size_t stride) {
    if (steps < 2) {
        throw std::invalid_argument("oracle needs at least 2 steps");
    }
    if (stride < 1) {
        throw std::invalid_argument("stride must be >= 1");
    }
    Trajectory traj;
    traj.dt = dt;
    traj.stride = stride;
    traj.values.reserve(static_cast<std::size_t>(steps) / stride + 1);
    traj.values.push_back(z0);
    if (stride == 1) {
        traj.values.push_back(z1);
    }

    const double centre = 2.0 - step_sq;
    const double damping = eps * step_sq / dt * kind.coupling();
    const bool cubic = kind.variant == Nonlinearity::Cubic;
    double prev = z0;
    double cur = z1;
    for (long n = 1; n < steps; ++n) {
        double next;
        if (cubic) {
            next = centre * cur - prev - eps * step_sq * cur * cur * cur;
        } else {
            const double g = damping * (1.0 - cur * cur);
            const double lead = 1.0 - g;
            if (std::abs(lead) < kSingularStep) {
                throw SingularStepError("singular Van der Pol step at n = " + std::to_string(n));
            }
            next = (centre * cur - prev - g * prev) / lead;
        }
        if (!(std::abs(next) <= kDivergenceBound)) {
            throw DivergenceError("trajectory diverged at n = " + std::to_string(n + 1));
        }
        prev = cur;
        cur = next;
        if (static_cast<std::size_t>(n + 1) % stride == 0) {
            traj.values.push_back(next);
        }
    }
    return traj;
}

}  // namespace

Trajectory iterate(const NonlinearityKind& kind, const SchemeParams& params, double z0,
                   double z1, long steps, std::size_t stride) {
    params.validate();
    return run_scheme(kind, params.dt * params.dt, params.dt, params.eps, z0, z1, steps, stride);
}

std::pair<double, double> init_from_amplitude(Complex a0, const SchemeParams& params) {
    const auto r = characteristic_roots(params);
    return {2.0 * a0.real(), 2.0 * (a0 * r.plus).real()};
}

Trajectory iterate_mickens(const NonlinearityKind& kind, double h, double eps, double z0,
                           double z1, long steps, std::size_t stride) {
    if (!(h > 0.0 && h < std::numbers::pi)) {
        throw std::invalid_argument("Mickens step h must lie in (0, pi)");
    }
    if (!(eps >= 0.0)) {
        throw std::invalid_argument("eps must be non-negative");
    }
    const double s = std::sin(h / 2.0);
    return run_scheme(kind, 4.0 * s * s, h, eps, z0, z1, steps, stride);
}

}  // namespace rgdiff
