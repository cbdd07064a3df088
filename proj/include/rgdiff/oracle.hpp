#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force iteration of the nonlinear schemes.
 *
 * Cubic:        z(n+1) = (2 - s) z(n) - z(n-1) - eps s z(n)^3
 * Van der Pol:  z(n+1) (1 - g) = (2 - s) z(n) - z(n-1) - g z(n-1),
 *               g = eps (s / dt) coupling (1 - z(n)^2)
 *
 * with s = dt^2 for the central-difference scheme and s = 4 sin^2(h/2) for
 * the frequency-preserving nonstandard variant. Each trajectory is a serial
 * fold with a fixed evaluation order, so reruns are bit-identical.
 */

#include <cstddef>
#include <utility>
#include <vector>

#include "rgdiff/perturbation.hpp"

namespace rgdiff {

/// Samples z(0), z(stride), z(2 stride), ... of a scheme with step dt.
struct Trajectory {
    double dt = 0.0;
    std::size_t stride = 1;
    std::vector<double> values;

    [[nodiscard]] double sample_spacing() const noexcept {
        return dt * static_cast<double>(stride);
    }
    [[nodiscard]] long index(std::size_t i) const noexcept {
        return static_cast<long>(i * stride);
    }
    [[nodiscard]] double time(std::size_t i) const noexcept {
        return static_cast<double>(i) * sample_spacing();
    }
    [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
};

/// |z| past this aborts the iteration with DivergenceError.
inline constexpr double kDivergenceBound = 1e8;
/// |1 - g| below this aborts a Van der Pol step with SingularStepError.
inline constexpr double kSingularStep = 1e-12;

/// Iterates N steps (z(0..N)) of the central-difference scheme. Requires N >= 2.
[[nodiscard]] Trajectory iterate(const NonlinearityKind& kind, const SchemeParams& params,
                                 double z0, double z1, long steps, std::size_t stride = 1);

/// Zeroth-order bridge from amplitude to initial data:
/// z0 = 2 Re(a0), z1 = 2 Re(a0 lambda+).
[[nodiscard]] std::pair<double, double> init_from_amplitude(Complex a0,
                                                            const SchemeParams& params);

/// Nonstandard scheme with denominator 4 sin^2(h/2). Requires 0 < h < pi.
/// For eps = 0, cos(n h) is an exact solution.
[[nodiscard]] Trajectory iterate_mickens(const NonlinearityKind& kind, double h, double eps,
                                         double z0, double z1, long steps,
                                         std::size_t stride = 1);

}  // namespace rgdiff
