#include <cmath>
#include <numbers>

#include "doctest.h"
#include "rgdiff/errors.hpp"
#include "rgdiff/renormalization.hpp"

using namespace rgdiff;

namespace {

const Complex I{0.0, 1.0};

SchemeParams exact(double dt, double eps) { return {dt, eps, RootConvention::ExactUnitModulus}; }

}  // namespace

TEST_CASE("leading-order and exact secular models agree as dt -> 0") {
    const Complex a{0.4, -0.3};
    for (const auto kind : {NonlinearityKind::cubic(), NonlinearityKind::van_der_pol(),
                            NonlinearityKind::van_der_pol(true)}) {
        for (double dt : {0.05, 0.01}) {
            const auto lead = leading_order_secular(kind, dt)(a, std::conj(a));
            const auto full = exact_secular(kind, exact(dt, 0.1))(a, std::conj(a));
            CHECK(std::abs(lead.sigma_plus - full.sigma_plus) <= dt * dt * dt);
            CHECK(std::abs(lead.sigma_minus - full.sigma_minus) <= dt * dt * dt);
        }
    }
    const auto c = leading_order_secular(NonlinearityKind::cubic(), 0.1)(2.0, 3.0);
    CHECK(std::abs(c.sigma_plus - 1.5 * I * 0.1 * 12.0) <= 1e-15);
    CHECK(std::abs(c.sigma_minus + 1.5 * I * 0.1 * 18.0) <= 1e-15);
    const auto v = leading_order_secular(NonlinearityKind::van_der_pol(), 0.1)(2.0, 3.0);
    CHECK(v.sigma_plus.real() == doctest::Approx(0.1 * (2.0 - 12.0)));
    CHECK(v.sigma_minus.real() == doctest::Approx(0.1 * (3.0 - 18.0)));
}

TEST_CASE("one flow step") {
    const auto flow = build_flow(NonlinearityKind::van_der_pol(), exact(0.1, 0.2));
    const auto next = flow.step(AmplitudePair::real(0.5));
    CHECK(next.a.real() == doctest::Approx(0.5 + 0.2 * 0.1 * (0.5 - 0.125)));
    CHECK(next.is_real());

    const auto custom = build_flow([](Complex a, Complex b) { return SecularReport{a, -b}; }, 0.5);
    const auto s = custom.step({2.0, 4.0});
    CHECK(s.a == Complex{3.0, 0.0});
    CHECK(s.b == Complex{2.0, 0.0});
}

TEST_CASE("iterate_flow") {
    const auto flow = build_flow(NonlinearityKind::cubic(), exact(0.01, 0.1));
    const AmplitudePair init = AmplitudePair::real({0.5, 0.1});
    const auto same = iterate_flow(flow, init, 0);
    CHECK(same.a == init.a);
    CHECK_THROWS_AS((void)iterate_flow(flow, init, -1), std::invalid_argument);

    const auto two = iterate_flow(flow, init, 2);
    const auto manual = flow.step(flow.step(init));
    CHECK(two.a == manual.a);
    CHECK(two.b == manual.b);

    const auto wild = build_flow(NonlinearityKind::van_der_pol(), exact(0.5, 1.0));
    CHECK_THROWS_AS((void)iterate_flow(wild, AmplitudePair::real(100.0), 50), DivergenceError);
}

TEST_CASE("cubic flow: product drift per step is 9/4 eps^2 dt^2 (AB)^3") {
    const double dt = 0.01;
    const double eps = 0.1;
    const auto flow = build_flow(NonlinearityKind::cubic(), exact(dt, eps));
    AmplitudePair amps = AmplitudePair::real({0.3, 0.4});
    for (int m = 0; m < 100; ++m) {
        const Complex c = conserved_product(amps);
        amps = flow.step(amps);
        const Complex drift = conserved_product(amps) - c;
        const Complex expected = 2.25 * eps * eps * dt * dt * c * c * c;
        CHECK(std::abs(drift - expected) <= 1e-7 * std::abs(expected));
        CHECK(amps.is_real(1e-12));
    }
}

TEST_CASE("cubic closed forms") {
    const SchemeParams p = exact(0.01, 0.1);
    const Complex a0{0.5, 0.0};
    const auto one = solve_cubic_discrete_closed(a0, std::conj(a0), p, 1);
    const auto stepped = build_flow(NonlinearityKind::cubic(), p).step(AmplitudePair::real(a0));
    CHECK(std::abs(one.a - stepped.a) <= 1e-16);

    const auto zero = solve_cubic_continuum(a0, std::conj(a0), p.eps, 0.0);
    CHECK(zero.a == a0);
    for (double t : {1.0, 10.0, 50.0}) {
        const auto cont = solve_cubic_continuum(a0, std::conj(a0), p.eps, t);
        CHECK(std::abs(cont.a) == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(std::abs(conserved_product(cont) - 0.25) <= 1e-14);
        CHECK(std::arg(cont.a) == doctest::Approx(std::remainder(1.5 * 0.1 * 0.25 * t, 2 * std::numbers::pi)));
        // (1 + i y)^m: modulus (1 + y^2)^{m/2}, phase m atan(y).
        const long m = std::lround(t / p.dt);
        const double y = 1.5 * p.eps * 0.25 * p.dt;
        const auto disc = solve_cubic_discrete_closed(a0, std::conj(a0), p, m);
        CHECK(std::abs(disc.a) == doctest::Approx(0.5 * std::pow(1.0 + y * y, 0.5 * double(m))).epsilon(1e-12));
        CHECK(std::abs(disc.a - std::abs(disc.a) * std::polar(1.0, double(m) * std::atan(y))) <= 1e-12);
    }
}

TEST_CASE("Van der Pol flow conserves A2/A1") {
    const auto flow = build_flow(NonlinearityKind::van_der_pol(), exact(0.01, 0.1));
    AmplitudePair amps = AmplitudePair::real({0.2, 0.4});
    const double c0 = VdpRealAmplitudes::from(amps.a).ratio();
    CHECK(c0 == doctest::Approx(2.0));
    for (int m = 0; m < 20000; ++m) {
        amps = flow.step(amps);
    }
    CHECK(VdpRealAmplitudes::from(amps.a).ratio() == doctest::Approx(c0).epsilon(1e-12));
    CHECK(std::abs(amps.a) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(VdpRealAmplitudes{0.3, 0.6}.complex() == Complex{0.3, 0.6});
}

TEST_CASE("kappa conventions") {
    CHECK(vdp_kappa(2.0, KappaConvention::OnePlusCSquared) == 5.0);
    CHECK(vdp_kappa(2.0, KappaConvention::PaperOnePlusC) == 3.0);
    CHECK(vdp_kappa(0.0, KappaConvention::PaperOnePlusC) == 1.0);
    CHECK(vdp_kappa(1.0, KappaConvention::PaperOnePlusC) ==
          vdp_kappa(1.0, KappaConvention::OnePlusCSquared));
}

TEST_CASE("Van der Pol continuum solution solves its ODE") {
    const double eps = 0.1;
    for (const auto conv : {KappaConvention::OnePlusCSquared, KappaConvention::PaperOnePlusC}) {
        for (double c : {0.0, 0.5, 2.0}) {
            const double kappa = vdp_kappa(c, conv);
            const double a0 = vdp_integration_constant(0.1, c, conv);
            CHECK(solve_vdp_continuum(a0, c, eps, 0.0, conv).a1 == doctest::Approx(0.1).epsilon(1e-14));
            const double h = 1e-4;
            for (double t : {0.0, 5.0, 20.0, 60.0}) {
                const auto s = solve_vdp_continuum(a0, c, eps, t, conv);
                const double up = solve_vdp_continuum(a0, c, eps, t + h, conv).a1;
                const double down = solve_vdp_continuum(a0, c, eps, t - h, conv).a1;
                const double derivative = (up - down) / (2 * h);
                CHECK(derivative == doctest::Approx(eps * s.a1 * (1 - kappa * s.a1 * s.a1)).epsilon(1e-6));
                CHECK(s.a2 == doctest::Approx(c * s.a1));
            }
            const auto late = solve_vdp_continuum(a0, c, eps, 400.0, conv);
            CHECK(late.a1 == doctest::Approx(1.0 / std::sqrt(kappa)).epsilon(1e-10));
        }
    }
    CHECK_THROWS_AS((void)solve_vdp_continuum(0.0, 1.0, eps, 1.0, KappaConvention::OnePlusCSquared),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)vdp_integration_constant(1.0, 0.0, KappaConvention::OnePlusCSquared),
                    std::domain_error);
    CHECK(vdp_integration_constant(-0.1, 0.0, KappaConvention::OnePlusCSquared) < 0.0);
}

TEST_CASE("logistic amplitude covers starts on both sides of the limit cycle") {
    const double eps = 0.05;
    for (const Complex a0 : {Complex{0.1, 0.0}, Complex{0.6, 1.2}, Complex{1.5, 0.0}, Complex{-0.9, 0.9}}) {
        const VdpContinuumAmplitude amp(a0, eps, KappaConvention::OnePlusCSquared);
        CHECK(amp.initial() == a0);
        CHECK(std::abs(amp(0.0) - a0) <= 1e-15);
        const double h = 1e-4;
        for (double t : {1.0, 30.0}) {
            const Complex d = (amp(t + h) - amp(t - h)) / (2 * h);
            const Complex a = amp(t);
            CHECK(std::abs(d - eps * a * (1.0 - std::norm(a))) <= 1e-8);
            CHECK(std::arg(a) == doctest::Approx(std::arg(a0)));
        }
        CHECK(std::abs(amp(600.0)) == doctest::Approx(1.0).epsilon(1e-10));
    }

    // Below the limit cycle the two closed forms coincide.
    const double c = 0.5;
    const Complex a0{0.2, 0.1};
    const VdpContinuumAmplitude amp(a0, eps, KappaConvention::PaperOnePlusC);
    const double k = vdp_integration_constant(0.2, c, KappaConvention::PaperOnePlusC);
    for (double t : {3.0, 40.0}) {
        CHECK(amp(t).real() == doctest::Approx(
                                   solve_vdp_continuum(k, c, eps, t, KappaConvention::PaperOnePlusC).a1)
                                   .epsilon(1e-12));
    }
}

TEST_CASE("continuum limit: the discrete flow converges at first order in dt") {
    const double eps = 0.1;
    const Complex a0{0.1, 0.0};
    const VdpContinuumAmplitude amp(a0, eps, KappaConvention::OnePlusCSquared);
    auto ode = [&](double t) { return AmplitudePair::real(amp(t)); };
    double prev = 0.0;
    for (double dt : {0.04, 0.02, 0.01}) {
        const auto flow = build_flow(NonlinearityKind::van_der_pol(), exact(dt, eps));
        const double err = continuum_limit_check(flow, ode, AmplitudePair::real(a0), dt, 60.0);
        CHECK(err <= 10 * eps * eps * dt);
        if (prev > 0.0) {
            CHECK(prev / err == doctest::Approx(2.0).epsilon(0.05));
        }
        prev = err;
    }

    const auto cubic = build_flow(NonlinearityKind::cubic(), exact(0.01, eps));
    const Complex c0{0.5, 0.0};
    const double err = continuum_limit_check(
        cubic, [&](double t) { return solve_cubic_continuum(c0, c0, eps, t); },
        AmplitudePair::real(c0), 0.01, 50.0);
    CHECK(err <= 1e-3);
}
