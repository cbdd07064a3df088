#pragma once

/**
 * @file analysis.hpp
 * @brief Measurements on trajectories: error profiles, zero-crossing periods,
 *        peak envelopes.
 */

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "rgdiff/oracle.hpp"

namespace rgdiff {

class TooFewCrossingsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class TooFewPeaksError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ErrorProfile {
    std::vector<double> abs_diff;
    double max = 0.0;
    std::size_t argmax = 0;
    /// Least-squares slope of the running maximum against time.
    double slope = 0.0;
};

/// Samples gen(n) on the same grid an oracle run of `steps` steps would use.
[[nodiscard]] Trajectory sample(const std::function<double(long)>& gen, double dt, long steps,
                                std::size_t stride = 1);

/// Pointwise |a - b|. Throws std::invalid_argument on mismatched grids.
[[nodiscard]] ErrorProfile compare(const Trajectory& a, const Trajectory& b);

/// Least-squares slope of the running maximum of `err`, samples spaced `spacing` apart.
[[nodiscard]] double running_max_slope(std::span<const double> err, double spacing);

struct PeriodEstimate {
    double mean = 0.0;
    double stddev = 0.0;
    std::size_t crossings = 0;
};

/// Minimum number of upward crossings behind a valid PeriodEstimate.
inline constexpr std::size_t kMinCrossings = 4;

/// Mean spacing of upward zero crossings, located by linear interpolation.
/// Crossings within half a period of either end are discarded.
[[nodiscard]] PeriodEstimate zero_crossing_period(const Trajectory& traj);

struct Peak {
    double time = 0.0;
    double amplitude = 0.0;
};

/// Local maxima of |z| with three-point parabolic refinement, in time order.
[[nodiscard]] std::vector<Peak> envelope(const Trajectory& traj);

}  // namespace rgdiff
