#include "rgdiff/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <numeric>
#include <string>

namespace rgdiff {

Trajectory sample(const std::function<double(long)>& gen, double dt, long steps,
                  std::size_t stride) {
    if (stride < 1) {
        throw std::invalid_argument("stride must be >= 1");
    }
    Trajectory traj;
    traj.dt = dt;
    traj.stride = stride;
    for (long n = 0; n <= steps; n += static_cast<long>(stride)) {
        traj.values.push_back(gen(n));
    }
    return traj;
}

double running_max_slope(std::span<const double> err, double spacing) {
    const std::size_t n = err.size();
    if (n < 2) {
        return 0.0;
    }
    // Centred time keeps the normal equations well conditioned.
    const double t_mean = 0.5 * static_cast<double>(n - 1) * spacing;
    double running = 0.0;
    double sum_y = 0.0;
    std::vector<double> rm(n);
    for (std::size_t i = 0; i < n; ++i) {
        running = std::max(running, err[i]);
        rm[i] = running;
        sum_y += running;
    }
    const double y_mean = sum_y / static_cast<double>(n);
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = static_cast<double>(i) * spacing - t_mean;
        sxy += dx * (rm[i] - y_mean);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

ErrorProfile compare(const Trajectory& a, const Trajectory& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("trajectory lengths differ");
    }
    if (a.dt != b.dt || a.stride != b.stride) {
        throw std::invalid_argument("trajectory sample spacings differ");
    }
    ErrorProfile p;
    p.abs_diff.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        p.abs_diff[i] = std::abs(a.values[i] - b.values[i]);
        if (p.abs_diff[i] > p.max) {
            p.max = p.abs_diff[i];
            p.argmax = i;
        }
    }
    p.slope = running_max_slope(p.abs_diff, a.sample_spacing());
    return p;
}

PeriodEstimate zero_crossing_period(const Trajectory& traj) {
    const auto& z = traj.values;
    const double h = traj.sample_spacing();
    std::vector<double> up;
    for (std::size_t i = 0; i + 1 < z.size(); ++i) {
        if (z[i] < 0.0 && z[i + 1] >= 0.0) {
            up.push_back(traj.time(i) + h * (-z[i]) / (z[i + 1] - z[i]));
        }
    }
    if (up.size() < 2) {
        throw TooFewCrossingsError("trajectory has fewer than two upward zero crossings");
    }
    const double rough = (up.back() - up.front()) / static_cast<double>(up.size() - 1);
    const double t_end = traj.time(z.size() - 1);
    std::vector<double> kept;
    std::copy_if(up.begin(), up.end(), std::back_inserter(kept), [&](double t) {
        return t >= 0.5 * rough && t <= t_end - 0.5 * rough;
    });
    if (kept.size() < kMinCrossings) {
        throw TooFewCrossingsError("only " + std::to_string(kept.size()) +
                                   " usable upward zero crossings");
    }
    std::vector<double> gaps(kept.size() - 1);
    for (std::size_t i = 0; i + 1 < kept.size(); ++i) {
        gaps[i] = kept[i + 1] - kept[i];
    }
    const double mean = std::accumulate(gaps.begin(), gaps.end(), 0.0) /
                        static_cast<double>(gaps.size());
    double var = 0.0;
    for (double g : gaps) {
        var += (g - mean) * (g - mean);
    }
    var /= static_cast<double>(gaps.size());
    return {mean, std::sqrt(var), kept.size()};
}

std::vector<Peak> envelope(const Trajectory& traj) {
    const auto& z = traj.values;
    const double h = traj.sample_spacing();
    std::vector<Peak> peaks;
    for (std::size_t i = 1; i + 1 < z.size(); ++i) {
        const double y0 = std::abs(z[i - 1]);
        const double y1 = std::abs(z[i]);
        const double y2 = std::abs(z[i + 1]);
        if (!(y1 >= y0 && y1 > y2)) {
            continue;
        }
        const double curvature = y0 - 2.0 * y1 + y2;
        const double offset = curvature != 0.0 ? 0.5 * (y0 - y2) / curvature : 0.0;
        peaks.push_back({traj.time(i) + offset * h, y1 - 0.25 * (y0 - y2) * offset});
    }
    if (peaks.size() < 2) {
        throw TooFewPeaksError("trajectory has fewer than two peaks");
    }
    return peaks;
}

}  // namespace rgdiff
