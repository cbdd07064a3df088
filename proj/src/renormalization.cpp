#include "rgdiff/renormalization.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "rgdiff/errors.hpp"

namespace rgdiff {

namespace {
constexpr double kFlowOverflow = 1e12;
constexpr Complex kI{0.0, 1.0};
}  // namespace

SecularModel leading_order_secular(const NonlinearityKind& kind, double dt) {
    if (kind.variant == Nonlinearity::Cubic) {
        return [dt](Complex a, Complex b) {
            return SecularReport{1.5 * kI * dt * a * a * b, -1.5 * kI * dt * a * b * b};
        };
    }
    const double g = kind.coupling() * dt;
    return [g](Complex a, Complex b) {
        return SecularReport{g * (a - a * a * b), g * (b - a * b * b)};
    };
}

SecularModel exact_secular(const NonlinearityKind& kind, const SchemeParams& params) {
    return [kind, params](Complex a, Complex b) {
        return extract_secular(first_order_solution(kind, AmplitudePair{a, b}, params), params);
    };
}

AmplitudePair DiscreteAmplitudeFlow::step(const AmplitudePair& amps) const {
    const auto s = secular(amps.a, amps.b);
    return {amps.a + eps * s.sigma_plus, amps.b + eps * s.sigma_minus};
}

DiscreteAmplitudeFlow build_flow(const NonlinearityKind& kind, const SchemeParams& params) {
    return {params.eps, leading_order_secular(kind, params.dt)};
}

DiscreteAmplitudeFlow build_flow(SecularModel secular, double eps) {
    return {eps, std::move(secular)};
}

AmplitudePair iterate_flow(const DiscreteAmplitudeFlow& flow, const AmplitudePair& init,
                           long steps) {
    if (steps < 0) {
        throw std::invalid_argument("flow step count must be non-negative");
    }
    AmplitudePair amps = init;
    for (long m = 0; m < steps; ++m) {
        amps = flow.step(amps);
        if (!(std::abs(amps.a) <= kFlowOverflow)) {
            throw DivergenceError("amplitude flow overflow at step " + std::to_string(m + 1));
        }
    }
    return amps;
}

AmplitudePair solve_cubic_discrete_closed(Complex a0, Complex b0, const SchemeParams& params,
                                          long m) {
    const Complex c = a0 * b0;
    const Complex rate = 1.5 * params.eps * kI * c * params.dt;
    return {a0 * power(1.0 + rate, m), b0 * power(1.0 - rate, m)};
}

AmplitudePair solve_cubic_continuum(Complex a0, Complex b0, double eps, double t) {
    const Complex phase = 1.5 * eps * a0 * b0 * kI * t;
    return {a0 * std::exp(phase), b0 * std::exp(-phase)};
}

double vdp_kappa(double c, KappaConvention convention) {
    return convention == KappaConvention::PaperOnePlusC ? 1.0 + c : 1.0 + c * c;
}

VdpRealAmplitudes solve_vdp_continuum(double a0, double c, double eps, double t,
                                      KappaConvention convention) {
    if (a0 == 0.0) {
        throw std::invalid_argument("Van der Pol integration constant must be nonzero");
    }
    const double kappa = vdp_kappa(c, convention);
    const double grow = std::exp(eps * t);
    const double denom = 1.0 + kappa * a0 * a0 * grow * grow;
    if (!(denom > 0.0)) {
        throw std::domain_error("Van der Pol amplitude blows up: 1 + kappa a0^2 e^{2 eps t} <= 0");
    }
    const double a1 = a0 * grow / std::sqrt(denom);
    return {a1, c * a1};
}

double vdp_integration_constant(double a1_initial, double c, KappaConvention convention) {
    const double u0 = a1_initial * a1_initial;
    const double kappa = vdp_kappa(c, convention);
    if (!(kappa * u0 < 1.0)) {
        throw std::domain_error("no real integration constant at or above the limit cycle");
    }
    return std::copysign(std::sqrt(u0 / (1.0 - kappa * u0)), a1_initial);
}

VdpContinuumAmplitude::VdpContinuumAmplitude(Complex a_initial, double eps,
                                             KappaConvention convention)
    : a0_(a_initial), eps_(eps) {
    const double a1 = a0_.real();
    const double a2 = a0_.imag();
    // kappa A1^2 without dividing by A1: (1 + c) A1^2 = A1^2 + A1 A2, (1 + c^2) A1^2 = |A|^2.
    kappa_u0_ = convention == KappaConvention::PaperOnePlusC ? a1 * a1 + a1 * a2
                                                             : a1 * a1 + a2 * a2;
}

Complex VdpContinuumAmplitude::operator()(double t) const {
    const double e2 = std::exp(2.0 * eps_ * t);
    const double denom = 1.0 - kappa_u0_ + kappa_u0_ * e2;
    if (!(denom > 0.0)) {
        throw std::domain_error("Van der Pol amplitude blows up in finite time");
    }
    return a0_ * std::sqrt(e2 / denom);
}

double continuum_limit_check(const DiscreteAmplitudeFlow& flow,
                             const std::function<AmplitudePair(double)>& ode,
                             const AmplitudePair& init, double dt, double t_max) {
    const long steps = std::lround(t_max / dt);
    AmplitudePair amps = init;
    double worst = std::abs(amps.a - ode(0.0).a);
    for (long m = 1; m <= steps; ++m) {
        amps = flow.step(amps);
        worst = std::max(worst, std::abs(amps.a - ode(static_cast<double>(m) * dt).a));
    }
    return worst;
}

}  // namespace rgdiff
