#pragma once

/**
 * @file asymptotic.hpp
 * @brief Secular-free first-order solutions with renormalized amplitudes.
 *
 * Discrete form:   z(n) = 2 Re[ A(n dt) lambda+^n + eps g A(n dt)^3 lambda+^{3n} ]
 * Continuum form:  z(t) = 2 Re[ A(t) e^{i w t}   + eps g0 A(t)^3 e^{3 i w t} ]
 *
 * A(t) comes from the continuum amplitude ODE. g is the exact dt-dependent
 * third-harmonic gain of the first-order solution and g0 its dt -> 0 limit
 * (1/8 cubic, i/4 Van der Pol). w = 1 + 3/2 eps |A0|^2 for the cubic scheme,
 * 1 for Van der Pol.
 */

#include <optional>

#include "rgdiff/renormalization.hpp"

namespace rgdiff {

class GlobalSolution {
public:
    /// `a0` is A(0); B(0) = conj(a0).
    GlobalSolution(NonlinearityKind kind, SchemeParams params, Complex a0,
                   KappaConvention kappa = KappaConvention::OnePlusCSquared);

    [[nodiscard]] const NonlinearityKind& kind() const noexcept { return kind_; }
    [[nodiscard]] const SchemeParams& params() const noexcept { return params_; }
    [[nodiscard]] Complex a0() const noexcept { return a0_; }
    [[nodiscard]] KappaConvention kappa_convention() const noexcept { return kappa_; }

    /// Cubic: c = |A0|^2. Van der Pol: c = A2/A1 (infinite when A1 = 0).
    [[nodiscard]] double conserved() const;

    /// Renormalized amplitude A(t).
    [[nodiscard]] Complex amplitude(double t) const;

    /// Exact dt-dependent third-harmonic gain used by eval_discrete.
    [[nodiscard]] Complex discrete_gain() const noexcept { return gain_; }

private:
    NonlinearityKind kind_;
    SchemeParams params_;
    Complex a0_;
    KappaConvention kappa_;
    Complex gain_;
    CharacteristicRoots roots_;
    std::optional<VdpContinuumAmplitude> vdp_;

    friend double eval_discrete(const GlobalSolution&, long);
};

[[nodiscard]] double eval_discrete(const GlobalSolution& sol, long n);

[[nodiscard]] double eval_continuum_waveform(const GlobalSolution& sol, double t);

/// 1 + 3/2 eps |A0|^2. Throws std::invalid_argument for Van der Pol, whose
/// fundamental frequency stays 1 at this order.
[[nodiscard]] double frequency_shift(const GlobalSolution& sol);

/// Leading-order waveform amplitude 2 |A(t)|.
[[nodiscard]] double envelope_amplitude(const GlobalSolution& sol, double t);

}  // namespace rgdiff
