#pragma once

/**
 * @file linear_difference.hpp
 * @brief Linear central-difference oscillator scheme and its harmonic solutions.
 *
 *     z(n+1) - (2 - dt^2) z(n) + z(n-1) = g(n)
 *
 * The characteristic polynomial is lambda^2 - (2 - dt^2) lambda + 1. Its
 * exact roots e^{+-i theta}, cos(theta) = 1 - dt^2/2, lie on the unit circle.
 * The first-order approximants 1 +- i dt are also supported; they leave a
 * per-step residual of i dt^3 and have product 1 + dt^2 instead of 1.
 */

#include <complex>
#include <initializer_list>
#include <optional>
#include <vector>

#include "rgdiff/newton_expansion.hpp"

namespace rgdiff {

enum class RootConvention {
    PaperFirstOrder,   ///< lambda = 1 +- i dt
    ExactUnitModulus,  ///< lambda = e^{+-i theta}, cos(theta) = 1 - dt^2/2
};

/// eps above this is accepted but flagged as outside the weakly nonlinear regime.
inline constexpr double kEpsWarnThreshold = 0.5;

struct SchemeParams {
    double dt = 0.01;
    double eps = 0.0;
    RootConvention roots = RootConvention::PaperFirstOrder;

    /// Throws std::invalid_argument unless 0 < dt < 2 and eps >= 0.
    void validate() const;
    [[nodiscard]] bool eps_is_large() const noexcept { return eps > kEpsWarnThreshold; }
    /// 2 - dt^2, the centre coefficient of the scheme.
    [[nodiscard]] double centre_coefficient() const noexcept { return 2.0 - dt * dt; }
};

struct CharacteristicRoots {
    Complex plus;
    Complex minus;
};

[[nodiscard]] CharacteristicRoots characteristic_roots(const SchemeParams& params);

/// lambda + 1/lambda - 2 + dt^2; zero exactly at the exact characteristic roots.
[[nodiscard]] Complex characteristic_value(Complex lambda, const SchemeParams& params);

/// z(n-1), z(n), z(n+1).
struct Triple {
    Complex prev;
    Complex cur;
    Complex next;
};

/// z+ - (2 - dt^2) z0 + z- - dt^2 eps f.
[[nodiscard]] Complex scheme_residual(const Triple& z, const SchemeParams& params,
                                      Complex forcing_value);

/// Default resonance tolerance, 1e-9 (1 + |lambda|).
[[nodiscard]] double default_resonance_tol(Complex lambda) noexcept;

/// True when lambda is a characteristic root under the active convention:
/// either it annihilates the characteristic polynomial, or it coincides with
/// one of the convention's two roots (the only way 1 +- i dt can qualify).
[[nodiscard]] bool is_resonant(Complex lambda, const SchemeParams& params,
                               std::optional<double> tol = std::nullopt);

/// coeff * n^p * base^n with p in {0, 1}.
struct HarmonicTerm {
    Complex coeff;
    Complex base;
    int n_power = 0;

    HarmonicTerm(Complex coeff, Complex base, int n_power = 0);

    [[nodiscard]] Complex operator()(long n) const;
};

/// Finite sum of harmonic terms, kept normalized: at most one term per
/// (base, n_power). Bases within 1e-12 relative distance are merged into the
/// earlier term.
class HarmonicSum {
public:
    HarmonicSum() = default;
    HarmonicSum(std::initializer_list<HarmonicTerm> terms);

    void add(const HarmonicTerm& term);
    [[nodiscard]] const std::vector<HarmonicTerm>& terms() const noexcept { return terms_; }
    [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }

    /// Coefficient of n^p base^n, or zero when absent.
    [[nodiscard]] Complex coefficient(Complex base, int n_power) const;

    /// True when every term has its conjugate partner, so the sequence is real.
    [[nodiscard]] bool is_real(double tol = 1e-12) const;

    [[nodiscard]] Complex operator()(long n) const;

    HarmonicSum& operator+=(const HarmonicSum& other);
    friend HarmonicSum operator+(HarmonicSum lhs, const HarmonicSum& rhs) { return lhs += rhs; }
    friend HarmonicSum operator*(Complex s, const HarmonicSum& hs);

private:
    std::vector<HarmonicTerm> terms_;
};

/// Same-base test used for normalization and root matching.
[[nodiscard]] bool same_base(Complex a, Complex b, double rel_tol = 1e-12) noexcept;

/// base^n in polar form; stays accurate for large n.
[[nodiscard]] Complex power(Complex base, long n);

[[nodiscard]] Complex evaluate(const HarmonicSum& hs, long n);

/// Particular solution of the scheme forced by `forcing` (all terms n_power 0).
/// Non-resonant c*lambda^n maps to c/(lambda + 1/lambda - 2 + dt^2) lambda^n;
/// resonant ones map to c/(lambda - 1/lambda) n lambda^n.
[[nodiscard]] HarmonicSum particular_solution(const HarmonicSum& forcing,
                                              const SchemeParams& params,
                                              std::optional<double> tol = std::nullopt);

}  // namespace rgdiff
