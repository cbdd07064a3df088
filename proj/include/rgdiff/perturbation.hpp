#pragma once

/**
 * @file perturbation.hpp
 * @brief First-order perturbation series of the weakly nonlinear scheme
 *
 *     z(n+1) - (2 - dt^2) z(n) + z(n-1) = dt^2 eps f(z(n+1), z(n), z(n-1)).
 *
 * With z = z0 + eps z1 + O(eps^2):
 *   z0(n) = A lambda+^n + B lambda-^n,
 *   z1 solves the linear scheme forced by dt^2 f(z0).
 *
 * Products of modes are collected with lambda+^n lambda-^n -> 1. Under the
 * exact roots that is an identity; under 1 +- i dt it drops a (1 + dt^2)^n
 * factor.
 */

#include "rgdiff/linear_difference.hpp"

namespace rgdiff {

enum class Nonlinearity {
    Cubic,      ///< f = -z(n)^3
    VanDerPol,  ///< dt^2 f = dt (1 - z(n)^2) (z(n+1) - z(n-1))
};

struct NonlinearityKind {
    Nonlinearity variant = Nonlinearity::Cubic;
    /// Van der Pol only: halve the centred difference, i.e. eps -> eps/2.
    bool vdp_halving = false;

    static NonlinearityKind cubic() { return {Nonlinearity::Cubic, false}; }
    static NonlinearityKind van_der_pol(bool halving = false) {
        return {Nonlinearity::VanDerPol, halving};
    }

    /// Multiplier on eps: 1/2 for halved Van der Pol, 1 otherwise.
    [[nodiscard]] double coupling() const noexcept;

    /// f(z(n+1), z(n), z(n-1)) in the normalization where the scheme's right
    /// side is dt^2 eps f.
    [[nodiscard]] Complex forcing_value(const Triple& z, double dt) const;
};

/// Integration constants (A, B) of the zeroth-order solution.
struct AmplitudePair {
    Complex a;
    Complex b;

    /// B = conj(A): the real-solution branch.
    static AmplitudePair real(Complex a) { return {a, std::conj(a)}; }
    [[nodiscard]] bool is_real(double tol = 1e-14) const {
        return std::abs(b - std::conj(a)) <= tol * std::max(1.0, std::abs(a));
    }
};

/// Coefficients of n lambda+^n and n lambda-^n in z1.
struct SecularReport {
    Complex sigma_plus;
    Complex sigma_minus;
};

[[nodiscard]] HarmonicSum zeroth_order(const AmplitudePair& amps, const SchemeParams& params);

/// dt^2 f(z0) expanded into modes lambda+^{3n}, lambda+^n, lambda-^n, lambda-^{3n}.
[[nodiscard]] HarmonicSum first_order_forcing(const NonlinearityKind& kind,
                                              const AmplitudePair& amps,
                                              const SchemeParams& params);

[[nodiscard]] HarmonicSum first_order_solution(const NonlinearityKind& kind,
                                               const AmplitudePair& amps,
                                               const SchemeParams& params);

/// Throws UnexpectedSecularBaseError for a secular term off lambda+/lambda-.
[[nodiscard]] SecularReport extract_secular(const HarmonicSum& z1, const SchemeParams& params);

/// Coefficient g with z1 containing g A^3 lambda+^{3n}; depends on dt only.
[[nodiscard]] Complex third_harmonic_gain(const NonlinearityKind& kind,
                                          const SchemeParams& params);

/// dt -> 0 limit of third_harmonic_gain: 1/8 (cubic), i/4 * coupling (Van der Pol).
[[nodiscard]] Complex third_harmonic_gain_limit(const NonlinearityKind& kind);

/// z0 + eps z1 with constant amplitudes. Built once, evaluated many times.
class NaiveExpansion {
public:
    /// Requires amps.is_real().
    NaiveExpansion(const NonlinearityKind& kind, const AmplitudePair& amps,
                   const SchemeParams& params);

    [[nodiscard]] Complex complex_value(long n) const;
    [[nodiscard]] double operator()(long n) const { return complex_value(n).real(); }
    [[nodiscard]] const HarmonicSum& zeroth() const noexcept { return z0_; }
    [[nodiscard]] const HarmonicSum& first() const noexcept { return z1_; }

private:
    HarmonicSum z0_;
    HarmonicSum z1_;
    double eps_;
};

[[nodiscard]] double naive_solution(const NonlinearityKind& kind, const AmplitudePair& amps,
                                    const SchemeParams& params, long n);

/// Residual of an arbitrary real sequence against the full nonlinear scheme at index n.
[[nodiscard]] double nonlinear_residual(const NonlinearityKind& kind,
                                        const SchemeParams& params, const Triple& z);

}  // namespace rgdiff
