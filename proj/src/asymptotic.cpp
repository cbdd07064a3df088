#include "rgdiff/asymptotic.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace rgdiff {

GlobalSolution::GlobalSolution(NonlinearityKind kind, SchemeParams params, Complex a0,
                               KappaConvention kappa)
    : kind_(kind),
      params_(params),
      a0_(a0),
      kappa_(kappa),
      gain_(third_harmonic_gain(kind, params)),
      roots_(characteristic_roots(params)) {
    if (kind_.variant == Nonlinearity::VanDerPol) {
        vdp_.emplace(a0_, params_.eps * kind_.coupling(), kappa_);
    }
}

double GlobalSolution::conserved() const {
    if (kind_.variant == Nonlinearity::Cubic) {
        return std::norm(a0_);
    }
    if (a0_.real() == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return a0_.imag() / a0_.real();
}

Complex GlobalSolution::amplitude(double t) const {
    if (vdp_) {
        return (*vdp_)(t);
    }
    return solve_cubic_continuum(a0_, std::conj(a0_), params_.eps, t).a;
}

double eval_discrete(const GlobalSolution& sol, long n) {
    const double t = static_cast<double>(n) * sol.params_.dt;
    const Complex a = sol.amplitude(t);
    const Complex fundamental = a * power(sol.roots_.plus, n);
    const Complex third = sol.gain_ * a * a * a * power(sol.roots_.plus, 3 * n);
    return 2.0 * (fundamental + sol.params_.eps * third).real();
}

double eval_continuum_waveform(const GlobalSolution& sol, double t) {
    const double w = sol.kind().variant == Nonlinearity::Cubic ? frequency_shift(sol) : 1.0;
    const Complex a = sol.kind().variant == Nonlinearity::Cubic ? sol.a0() : sol.amplitude(t);
    const Complex g0 = third_harmonic_gain_limit(sol.kind());
    const Complex fundamental = a * std::polar(1.0, w * t);
    const Complex third = g0 * a * a * a * std::polar(1.0, 3.0 * w * t);
    return 2.0 * (fundamental + sol.params().eps * third).real();
}

double frequency_shift(const GlobalSolution& sol) {
    if (sol.kind().variant != Nonlinearity::Cubic) {
        throw std::invalid_argument("frequency shift is defined for the cubic scheme only");
    }
    return 1.0 + 1.5 * sol.params().eps * std::norm(sol.a0());
}

double envelope_amplitude(const GlobalSolution& sol, double t) {
    return 2.0 * std::abs(sol.amplitude(t));
}

}  // namespace rgdiff
