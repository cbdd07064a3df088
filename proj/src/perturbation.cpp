#include "rgdiff/perturbation.hpp"

#include <map>
#include <stdexcept>

#include "rgdiff/errors.hpp"

namespace rgdiff {

double NonlinearityKind::coupling() const noexcept {
    return (variant == Nonlinearity::VanDerPol && vdp_halving) ? 0.5 : 1.0;
}

Complex NonlinearityKind::forcing_value(const Triple& z, double dt) const {
    if (variant == Nonlinearity::Cubic) {
        return -z.cur * z.cur * z.cur;
    }
    return coupling() * (1.0 - z.cur * z.cur) * (z.next - z.prev) / dt;
}

namespace {

// Sequence sum_k c_k mu_k^n where mu_k = lambda+^k (k > 0), lambda-^|k| (k < 0),
// 1 (k = 0). Products add mode indices, i.e. lambda+ lambda- is taken as 1.
using ModeSeries = std::map<int, Complex>;

ModeSeries multiply(const ModeSeries& x, const ModeSeries& y) {
    ModeSeries out;
    for (const auto& [kx, cx] : x) {
        for (const auto& [ky, cy] : y) {
            out[kx + ky] += cx * cy;
        }
    }
    return out;
}

Complex mode_base(int k, const CharacteristicRoots& r) {
    Complex base{1.0, 0.0};
    const Complex step = k > 0 ? r.plus : r.minus;
    for (int i = 0; i < std::abs(k); ++i) {
        base *= step;
    }
    return base;
}

HarmonicSum to_harmonic(const ModeSeries& s, const CharacteristicRoots& r, Complex scale) {
    HarmonicSum out;
    for (const auto& [k, c] : s) {
        if (c != Complex{0.0, 0.0}) {
            out.add(HarmonicTerm(scale * c, mode_base(k, r), 0));
        }
    }
    return out;
}

}  // namespace

HarmonicSum zeroth_order(const AmplitudePair& amps, const SchemeParams& params) {
    const auto r = characteristic_roots(params);
    return HarmonicSum{HarmonicTerm(amps.a, r.plus), HarmonicTerm(amps.b, r.minus)};
}

HarmonicSum first_order_forcing(const NonlinearityKind& kind, const AmplitudePair& amps,
                                const SchemeParams& params) {
    const auto r = characteristic_roots(params);
    const double dt = params.dt;
    const ModeSeries z0{{1, amps.a}, {-1, amps.b}};

    if (kind.variant == Nonlinearity::Cubic) {
        return to_harmonic(multiply(multiply(z0, z0), z0), r, -dt * dt);
    }

    // z0(n+1) - z0(n-1) = A (l+ - 1/l+) l+^n + B (l- - 1/l-) l-^n.
    const ModeSeries centred{{1, amps.a * (r.plus - 1.0 / r.plus)},
                             {-1, amps.b * (r.minus - 1.0 / r.minus)}};
    ModeSeries damping = multiply(z0, z0);
    for (auto& [k, c] : damping) {
        c = -c;
    }
    damping[0] += 1.0;
    return to_harmonic(multiply(damping, centred), r, dt * kind.coupling());
}

HarmonicSum first_order_solution(const NonlinearityKind& kind, const AmplitudePair& amps,
                                 const SchemeParams& params) {
    return particular_solution(first_order_forcing(kind, amps, params), params);
}

SecularReport extract_secular(const HarmonicSum& z1, const SchemeParams& params) {
    const auto r = characteristic_roots(params);
    SecularReport report{{0.0, 0.0}, {0.0, 0.0}};
    for (const auto& t : z1.terms()) {
        if (t.n_power != 1) {
            continue;
        }
        if (same_base(t.base, r.plus)) {
            report.sigma_plus += t.coeff;
        } else if (same_base(t.base, r.minus)) {
            report.sigma_minus += t.coeff;
        } else {
            throw UnexpectedSecularBaseError(
                "secular term on a base that is not a characteristic root");
        }
    }
    return report;
}

Complex third_harmonic_gain(const NonlinearityKind& kind, const SchemeParams& params) {
    const auto r = characteristic_roots(params);
    const auto z1 = first_order_solution(kind, AmplitudePair{{1.0, 0.0}, {0.0, 0.0}}, params);
    return z1.coefficient(r.plus * r.plus * r.plus, 0);
}

Complex third_harmonic_gain_limit(const NonlinearityKind& kind) {
    if (kind.variant == Nonlinearity::Cubic) {
        return {0.125, 0.0};
    }
    return Complex{0.0, 0.25} * kind.coupling();
}

NaiveExpansion::NaiveExpansion(const NonlinearityKind& kind, const AmplitudePair& amps,
                               const SchemeParams& params)
    : z0_(zeroth_order(amps, params)),
      z1_(first_order_solution(kind, amps, params)),
      eps_(params.eps) {
    if (!amps.is_real()) {
        throw std::invalid_argument("naive solution needs B = conj(A)");
    }
}

Complex NaiveExpansion::complex_value(long n) const {
    return z0_(n) + eps_ * z1_(n);
}

double naive_solution(const NonlinearityKind& kind, const AmplitudePair& amps,
                      const SchemeParams& params, long n) {
    return NaiveExpansion(kind, amps, params)(n);
}

double nonlinear_residual(const NonlinearityKind& kind, const SchemeParams& params,
                          const Triple& z) {
    return scheme_residual(z, params, kind.forcing_value(z, params.dt)).real();
}

}  // namespace rgdiff
