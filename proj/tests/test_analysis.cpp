#include <cmath>
#include <numbers>

#include "doctest.h"
#include "rgdiff/analysis.hpp"

using namespace rgdiff;

namespace {

Trajectory from_function(double dt, long steps, std::size_t stride, double (*f)(double)) {
    return sample([&](long n) { return f(static_cast<double>(n) * dt); }, dt, steps, stride);
}

}  // namespace

TEST_CASE("sample uses the oracle grid") {
    const auto t = sample([](long n) { return static_cast<double>(n); }, 0.1, 10, 3);
    CHECK(t.values == std::vector<double>{0.0, 3.0, 6.0, 9.0});
    CHECK(t.dt == 0.1);
    CHECK(t.stride == 3);
    CHECK_THROWS_AS((void)sample([](long) { return 0.0; }, 0.1, 10, 0), std::invalid_argument);
}

TEST_CASE("compare") {
    const auto a = sample([](long n) { return std::sin(0.01 * double(n)); }, 0.01, 1000);
    const auto b = sample([](long n) { return std::sin(0.01 * double(n)) + 1e-3 * double(n) / 1000.0; }, 0.01, 1000);

    const auto self = compare(a, a);
    CHECK(self.max == 0.0);
    CHECK(self.slope == 0.0);

    const auto ab = compare(a, b);
    const auto ba = compare(b, a);
    CHECK(ab.max == ba.max);
    CHECK(ab.abs_diff == ba.abs_diff);
    CHECK(ab.max == doctest::Approx(1e-3));
    CHECK(ab.argmax == 1000);
    // Error grows linearly at 1e-4 per unit time.
    CHECK(ab.slope == doctest::Approx(1e-4).epsilon(1e-9));

    const auto shorter = sample([](long) { return 0.0; }, 0.01, 999);
    CHECK_THROWS_AS((void)compare(a, shorter), std::invalid_argument);
    const auto other_dt = sample([](long) { return 0.0; }, 0.02, 1000);
    CHECK_THROWS_AS((void)compare(a, other_dt), std::invalid_argument);
}

TEST_CASE("running-max slope") {
    CHECK(running_max_slope(std::vector<double>{}, 0.1) == 0.0);
    CHECK(running_max_slope(std::vector<double>{1.0}, 0.1) == 0.0);
    // Running maximum 0, 5, 5, 5, 5, 5.
    const std::vector<double> spike{0.0, 5.0, 0.0, 1.0, 0.0, 2.0};
    CHECK(running_max_slope(spike, 1.0) == doctest::Approx(12.5 / 17.5).epsilon(1e-12));
    const std::vector<double> ramp{0.0, 1.0, 2.0, 3.0};
    CHECK(running_max_slope(ramp, 0.5) == doctest::Approx(2.0));
}

TEST_CASE("zero-crossing period of a sinusoid") {
    const double dt = 0.01;
    const auto t = from_function(dt, 20000, 1, [](double x) { return std::sin(x + 0.3); });
    const auto p = zero_crossing_period(t);
    CHECK(p.mean == doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-6));
    CHECK(p.stddev <= 1e-5);
    CHECK(p.crossings >= kMinCrossings);
}

TEST_CASE("period estimate scales with time") {
    const auto slow = from_function(0.01, 40000, 1, [](double x) { return std::cos(0.5 * x); });
    const auto fast = from_function(0.005, 40000, 1, [](double x) { return std::cos(x); });
    CHECK(zero_crossing_period(slow).mean ==
          doctest::Approx(2.0 * zero_crossing_period(fast).mean).epsilon(1e-9));
}

TEST_CASE("too few crossings") {
    const auto flat = from_function(0.01, 1000, 1, [](double x) { return 1.0 + 0.0 * x; });
    CHECK_THROWS_AS((void)zero_crossing_period(flat), TooFewCrossingsError);
    const auto short_run = from_function(0.01, 1500, 1, [](double x) { return std::sin(x); });
    CHECK_THROWS_AS((void)zero_crossing_period(short_run), TooFewCrossingsError);
}

TEST_CASE("peak envelope") {
    const auto t = from_function(0.01, 10000, 1, [](double x) { return 1.5 * std::cos(x); });
    const auto peaks = envelope(t);
    // |cos| peaks every pi, including the one at t = 0 which has no left neighbour.
    CHECK(peaks.size() == 31);
    for (const auto& pk : peaks) {
        CHECK(pk.amplitude == doctest::Approx(1.5).epsilon(1e-5));
        const double k = std::round(pk.time / std::numbers::pi);
        CHECK(std::abs(pk.time - k * std::numbers::pi) <= 1e-4);
    }
    for (std::size_t i = 1; i < peaks.size(); ++i) {
        CHECK(peaks[i].time > peaks[i - 1].time);
    }

    const auto mono = from_function(0.01, 100, 1, [](double x) { return x; });
    CHECK_THROWS_AS((void)envelope(mono), TooFewPeaksError);
}
