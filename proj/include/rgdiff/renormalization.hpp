#pragma once

/**
 * @file renormalization.hpp
 * @brief Amplitude (renormalization) equations and their solutions.
 *
 * Promoting the integration constants (A, B) to functions of the base index m
 * and demanding Delta_m y(n, m) = 0 absorbs the secular terms of z1 into
 *
 *     Delta A(m) = eps sigma+(A, B),   Delta B(m) = eps sigma-(A, B).
 *
 * With t = m dt and dt -> 0 this becomes an ODE in t. Both the discrete map
 * and the continuum closed forms live here.
 */

#include <functional>

#include "rgdiff/perturbation.hpp"

namespace rgdiff {

/// sigma+-(A, B) as functions of the amplitudes.
using SecularModel = std::function<SecularReport(Complex a, Complex b)>;

/// Closed-form leading-order secular coefficients:
/// cubic sigma+ = (3/2) i dt A^2 B, Van der Pol sigma+ = dt (A - A^2 B).
[[nodiscard]] SecularModel leading_order_secular(const NonlinearityKind& kind, double dt);

/// Secular coefficients read off the full first-order solution, exact in dt.
[[nodiscard]] SecularModel exact_secular(const NonlinearityKind& kind,
                                         const SchemeParams& params);

/// One step: (A, B) -> (A + eps sigma+, B + eps sigma-).
struct DiscreteAmplitudeFlow {
    double eps = 0.0;
    SecularModel secular;

    [[nodiscard]] AmplitudePair step(const AmplitudePair& amps) const;
};

/// Flow driven by the leading-order closed forms.
[[nodiscard]] DiscreteAmplitudeFlow build_flow(const NonlinearityKind& kind,
                                               const SchemeParams& params);
[[nodiscard]] DiscreteAmplitudeFlow build_flow(SecularModel secular, double eps);

/// Applies the map `steps` times, left to right. Throws DivergenceError once
/// |A| exceeds 1e12.
[[nodiscard]] AmplitudePair iterate_flow(const DiscreteAmplitudeFlow& flow,
                                         const AmplitudePair& init, long steps);

/// A B; exact invariant of the cubic continuum flow.
[[nodiscard]] inline Complex conserved_product(const AmplitudePair& amps) {
    return amps.a * amps.b;
}

/// A = A1 + i A2.
struct VdpRealAmplitudes {
    double a1 = 0.0;
    double a2 = 0.0;

    static VdpRealAmplitudes from(Complex a) { return {a.real(), a.imag()}; }
    [[nodiscard]] Complex complex() const { return {a1, a2}; }
    /// c = A2 / A1; conserved exactly by the Van der Pol flows.
    [[nodiscard]] double ratio() const { return a2 / a1; }
};

/// Frozen-c solution A0 (1 + 3/2 eps i c dt)^m, c = A0 B0.
[[nodiscard]] AmplitudePair solve_cubic_discrete_closed(Complex a0, Complex b0,
                                                        const SchemeParams& params, long m);

/// A0 exp(3/2 eps c i t), B0 exp(-3/2 eps c i t), c = A0 B0.
[[nodiscard]] AmplitudePair solve_cubic_continuum(Complex a0, Complex b0, double eps, double t);

enum class KappaConvention {
    PaperOnePlusC,    ///< kappa = 1 + c
    OnePlusCSquared,  ///< kappa = 1 + c^2, from 1 - A1^2 - A2^2 with A2 = c A1
};

[[nodiscard]] double vdp_kappa(double c, KappaConvention convention);

/// A1(t) = a0 e^{eps t} / sqrt(1 + kappa a0^2 e^{2 eps t}), A2 = c A1.
/// Solves A1' = eps A1 (1 - kappa A1^2). Throws std::domain_error when the
/// square-root argument is not positive.
[[nodiscard]] VdpRealAmplitudes solve_vdp_continuum(double a0, double c, double eps, double t,
                                                    KappaConvention convention);

/// The a0 of solve_vdp_continuum that puts A1(0) at `a1_initial`. Real a0 exists
/// only below the limit cycle, kappa a1^2 < 1; std::domain_error otherwise.
[[nodiscard]] double vdp_integration_constant(double a1_initial, double c,
                                              KappaConvention convention);

/// Continuum Van der Pol amplitude started from A(0). Uses the logistic form
/// A1^2(t) = u0 e^{2 eps t} / (1 - kappa u0 + kappa u0 e^{2 eps t}), which
/// covers starts above the limit cycle as well.
class VdpContinuumAmplitude {
public:
    VdpContinuumAmplitude(Complex a_initial, double eps, KappaConvention convention);

    [[nodiscard]] Complex operator()(double t) const;
    [[nodiscard]] Complex initial() const noexcept { return a0_; }

private:
    Complex a0_;
    double eps_;
    double kappa_u0_;  // kappa * A1(0)^2
};

/// Iterates `flow` for round(t_max / dt) steps from `init` and returns
/// max_m |A_discrete(m) - A_ode(m dt)|.
[[nodiscard]] double continuum_limit_check(const DiscreteAmplitudeFlow& flow,
                                           const std::function<AmplitudePair(double)>& ode,
                                           const AmplitudePair& init, double dt, double t_max);

}  // namespace rgdiff
