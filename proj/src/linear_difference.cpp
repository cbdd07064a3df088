#include "rgdiff/linear_difference.hpp"

#include <cmath>
#include <stdexcept>

#include "rgdiff/errors.hpp"

namespace rgdiff {

void SchemeParams::validate() const {
    if (!(dt > 0.0)) {
        throw std::invalid_argument("dt must be positive");
    }
    if (!(dt < 2.0)) {
        throw std::invalid_argument("dt must be less than 2");
    }
    if (!(eps >= 0.0)) {
        throw std::invalid_argument("eps must be non-negative");
    }
}

CharacteristicRoots characteristic_roots(const SchemeParams& params) {
    params.validate();
    if (params.roots == RootConvention::PaperFirstOrder) {
        return {Complex{1.0, params.dt}, Complex{1.0, -params.dt}};
    }
    // lambda = (b +- i sqrt(4 - b^2)) / 2 with b = 2 - dt^2; 4 - b^2 = dt^2 (4 - dt^2).
    const double b = params.centre_coefficient();
    const double s = params.dt * std::sqrt(4.0 - params.dt * params.dt);
    return {Complex{b / 2.0, s / 2.0}, Complex{b / 2.0, -s / 2.0}};
}

Complex characteristic_value(Complex lambda, const SchemeParams& params) {
    return lambda + 1.0 / lambda - params.centre_coefficient();
}

Complex scheme_residual(const Triple& z, const SchemeParams& params, Complex forcing_value) {
    return z.next - params.centre_coefficient() * z.cur + z.prev -
           params.dt * params.dt * params.eps * forcing_value;
}

double default_resonance_tol(Complex lambda) noexcept {
    return 1e-9 * (1.0 + std::abs(lambda));
}

bool is_resonant(Complex lambda, const SchemeParams& params, std::optional<double> tol) {
    if (lambda == Complex{0.0, 0.0}) {
        throw std::invalid_argument("resonance test needs a nonzero base");
    }
    const double t = tol.value_or(default_resonance_tol(lambda));
    if (std::abs(characteristic_value(lambda, params)) <= t) {
        return true;
    }
    const auto r = characteristic_roots(params);
    return std::abs(lambda - r.plus) <= t || std::abs(lambda - r.minus) <= t;
}

HarmonicTerm::HarmonicTerm(Complex c, Complex b, int p) : coeff(c), base(b), n_power(p) {
    if (base == Complex{0.0, 0.0}) {
        throw std::invalid_argument("harmonic term base must be nonzero");
    }
    if (n_power != 0 && n_power != 1) {
        throw std::invalid_argument("harmonic term n_power must be 0 or 1");
    }
}

Complex power(Complex base, long n) {
    return std::polar(std::pow(std::abs(base), static_cast<double>(n)),
                      static_cast<double>(n) * std::arg(base));
}

Complex HarmonicTerm::operator()(long n) const {
    Complex v = coeff * power(base, n);
    if (n_power == 1) {
        v *= static_cast<double>(n);
    }
    return v;
}

bool same_base(Complex a, Complex b, double rel_tol) noexcept {
    return std::abs(a - b) <= rel_tol * std::max(std::abs(a), std::abs(b));
}

HarmonicSum::HarmonicSum(std::initializer_list<HarmonicTerm> terms) {
    for (const auto& t : terms) {
        add(t);
    }
}

void HarmonicSum::add(const HarmonicTerm& term) {
    for (auto& t : terms_) {
        if (t.n_power == term.n_power && same_base(t.base, term.base)) {
            t.coeff += term.coeff;
            return;
        }
    }
    terms_.push_back(term);
}

Complex HarmonicSum::coefficient(Complex base, int n_power) const {
    for (const auto& t : terms_) {
        if (t.n_power == n_power && same_base(t.base, base)) {
            return t.coeff;
        }
    }
    return {0.0, 0.0};
}

bool HarmonicSum::is_real(double tol) const {
    for (const auto& t : terms_) {
        const Complex partner = coefficient(std::conj(t.base), t.n_power);
        if (std::abs(partner - std::conj(t.coeff)) > tol * std::max(1.0, std::abs(t.coeff))) {
            return false;
        }
    }
    return true;
}

Complex HarmonicSum::operator()(long n) const {
    Complex sum{0.0, 0.0};
    for (const auto& t : terms_) {
        sum += t(n);
    }
    return sum;
}

HarmonicSum& HarmonicSum::operator+=(const HarmonicSum& other) {
    for (const auto& t : other.terms_) {
        add(t);
    }
    return *this;
}

HarmonicSum operator*(Complex s, const HarmonicSum& hs) {
    HarmonicSum out = hs;
    for (auto& t : out.terms_) {
        t.coeff *= s;
    }
    return out;
}

Complex evaluate(const HarmonicSum& hs, long n) {
    return hs(n);
}

HarmonicSum particular_solution(const HarmonicSum& forcing, const SchemeParams& params,
                                std::optional<double> tol) {
    HarmonicSum out;
    for (const auto& term : forcing.terms()) {
        if (term.n_power != 0) {
            throw std::invalid_argument(
                "particular_solution handles n_power = 0 forcings only");
        }
        const Complex lambda = term.base;
        const double t = tol.value_or(default_resonance_tol(lambda));
        const Complex detuning = characteristic_value(lambda, params);
        const Complex split = lambda - 1.0 / lambda;
        if (std::abs(detuning) <= t && std::abs(split) <= t) {
            throw DegenerateDenominatorError(
                "forcing base makes both particular-solution denominators vanish");
        }
        if (is_resonant(lambda, params, t)) {
            out.add(HarmonicTerm(term.coeff / split, lambda, 1));
        } else {
            out.add(HarmonicTerm(term.coeff / detuning, lambda, 0));
        }
    }
    return out;
}

}  // namespace rgdiff
