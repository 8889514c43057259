#include <doctest.h>

#include <cmath>
#include <vector>

#include "chaosbath/response.hpp"

using namespace chaosbath;

namespace {

ModelParams paper_params(double ratio = 1.0) {
    ModelParams p;
    p.m = 1.0;
    p.omega0 = 0.0052;
    p.gamma = 4.6555199021914210e-4;
    p.hbar = 1e-4;
    p.e_c0 = 0.38;
    p.e_o0 = ratio * 0.38;
    return p;
}

std::vector<double> uniform_grid(double t_max, double dt) {
    std::vector<double> g;
    for (double t = 0.0; t <= t_max + 1e-9; t += dt) g.push_back(t);
    return g;
}

}  // namespace

TEST_CASE("response function shape") {
    const CorrelationFit fit = reference_fit();
    const ResponseFunction phi = response_function(fit, 0.38);
    CHECK(phi(0.0) == 0.0);

    // scan oracle for the first maximum
    double best_t = 0, best_v = -1;
    for (int i = 0; i <= 400000; ++i) {
        const double t = 40.0 * i / 400000.0;
        if (phi(t) > best_v) {
            best_v = phi(t);
            best_t = t;
        }
    }
    const double t_star = std::atan(fit.omega_cap / fit.beta) / fit.omega_cap;
    CHECK(best_t == doctest::Approx(t_star).epsilon(1e-3));
    CHECK(best_v == doctest::Approx(phi(t_star)).epsilon(1e-6));
    CHECK(best_v == doctest::Approx(1.5539406659).epsilon(1e-6));
}

TEST_CASE("memory kernel") {
    const CorrelationFit fit = reference_fit();
    const MemoryKernel f = memory_kernel(fit, 0.38);
    CHECK(f.at_zero() == doctest::Approx(10.490363031523067).epsilon(1e-12));
    CHECK(std::abs(f(400.0)) < 1e-6);

    // F'(t) = -phi_xx(t) with the (alpha, omega)-unified response
    const ResponseFunction phi_u{2.0 * fit.mu / 0.38, fit.alpha, fit.omega};
    const double h = 1e-6;
    for (double t : {0.5, 3.0, 11.0, 40.0}) {
        const double deriv = (f(t + h) - f(t - h)) / (2.0 * h);
        CHECK(std::abs(deriv + phi_u(t)) < 1e-8);
    }
}

TEST_CASE("derived kernel constants and the two Lambda routes") {
    const CorrelationFit fit = reference_fit();
    const ModelParams p = paper_params();
    const EffectiveKernel k = derive_kernel(fit, p);

    CHECK(k.lambda == doctest::Approx(2.3594114667012693e-06).epsilon(1e-10));
    CHECK(k.f0 == doctest::Approx(10.490363031523067).epsilon(1e-12));
    CHECK(k.gamma_big == doctest::Approx(0.38 / (1e-4 * 0.0052)).epsilon(1e-12));
    CHECK(k.eps == doctest::Approx(k.lambda / 0.0052).epsilon(1e-12));
    CHECK(!k.gamma_warning);
    CHECK(k.ehrenfest_margin > 1.0);

    // consistency of the stored routes
    CHECK(std::abs(k.lambda - p.gamma * p.gamma * k.b_prime / (p.m * p.e_c0)) <=
          1e-10 * k.lambda);
    // raw-fit route disagrees by the known factor, reported not rejected
    const double lambda_raw = p.gamma * p.gamma * k.b_prime_raw / (p.m * p.e_c0);
    CHECK(k.lambda / lambda_raw == doctest::Approx(2.137446623).epsilon(1e-6));

    // quadrature oracle: trapezoid of F on [0, 400] against the closed form
    const MemoryKernel f = memory_kernel(fit, p.e_c0);
    const double h = 0.002;
    double acc = 0.5 * (f(0.0) + f(400.0));
    for (int i = 1; i < 200000; ++i) acc += f(h * i);
    acc *= h;
    const double closed = 2.0 * p.m * k.lambda / (p.gamma * p.gamma);
    CHECK(acc == doctest::Approx(closed).epsilon(1e-6));

    SUBCASE("gamma = 0 gives Lambda = eps = 0") {
        ModelParams p0 = p;
        p0.gamma = 0.0;
        const EffectiveKernel k0 = derive_kernel(fit, p0);
        CHECK(k0.lambda == 0.0);
        CHECK(k0.eps == 0.0);
    }
    SUBCASE("order-of-magnitude agreement with the secular root estimate") {
        // reference secular root real part 4e-5 alpha ~ 1.672e-6; factor-2 band
        CHECK(k.lambda > 0.5 * 1.672e-6);
        CHECK(k.lambda < 2.0 * 1.672e-6);
    }
    SUBCASE("stability violation throws") {
        ModelParams bad = p;
        bad.gamma = 0.1;  // gamma^2 F0/m >> omega0^2
        CHECK_THROWS_AS(derive_kernel(fit, bad), std::runtime_error);
    }
    SUBCASE("Gamma <= 1 sets the warning state") {
        ModelParams hot = p;
        hot.hbar = 100.0;
        const EffectiveKernel kw = derive_kernel(fit, hot);
        CHECK(kw.gamma_warning);
    }
}

TEST_CASE("equilibrium ratio") {
    const CorrelationFit fit = reference_fit();
    ModelParams p = paper_params();
    CHECK(equilibrium_ratio(fit, p) == doctest::Approx(0.23408099987).epsilon(1e-9));

    SUBCASE("increasing in omega0") {
        ModelParams hi = p;
        hi.omega0 = 0.01;
        CHECK(equilibrium_ratio(fit, hi) > equilibrium_ratio(fit, p));
    }
    SUBCASE("linear in sigma") {
        CorrelationFit f2 = fit;
        f2.sigma_c *= 2.0;
        CHECK(equilibrium_ratio(f2, p) ==
              doctest::Approx(2.0 * equilibrium_ratio(fit, p)).epsilon(1e-14));
    }
}

TEST_CASE("slope coefficient A") {
    const CorrelationFit fit = reference_fit();
    SUBCASE("vanishes at the equilibrium ratio") {
        ModelParams p = paper_params();
        p.e_o0 = equilibrium_ratio(fit, p) * p.e_c0;
        CHECK(std::abs(slope_coefficient(fit, p)) < 1e-12);
    }
    SUBCASE("pinned value at ratio 1.0") {
        CHECK(slope_coefficient(fit, paper_params(1.0)) ==
              doctest::Approx(-6.344484853434917).epsilon(1e-9));
    }
    SUBCASE("sign follows equilibrium_ratio - ratio") {
        ModelParams p = paper_params();
        const double req = equilibrium_ratio(fit, p);
        for (double r : {0.05, 0.15, 0.3, 0.7, 1.3}) {
            p.e_o0 = r * p.e_c0;
            CHECK(slope_coefficient(fit, p) * (req - r) >= 0.0);
        }
    }
}

TEST_CASE("LRT prediction: gamma = 0 stays at E_o(0)") {
    const CorrelationFit fit = reference_fit();
    ModelParams p = paper_params(0.6);
    p.gamma = 0.0;
    const auto pred = lrt_energy_prediction(fit, p, uniform_grid(400.0, 4.0));
    for (double v : pred.e_o.values) CHECK(v == doctest::Approx(p.e_o0).epsilon(1e-12));
}

TEST_CASE("LRT prediction slope matches gamma^2 A/m within 5 percent") {
    const CorrelationFit fit = reference_fit();
    const double t0 = 1.0 / 0.0052;
    const auto grid = uniform_grid(5.1 * t0, 4.0);
    for (double ratio : {0.1, 0.25, 1.0}) {
        const ModelParams p = paper_params(ratio);
        const auto pred = lrt_energy_prediction(fit, p, grid);
        const TrendFit tf = harmonic_trend(pred.e_o, p.omega0, t0, 5.0 * t0);
        const double expected = p.gamma * p.gamma * slope_coefficient(fit, p) / p.m;
        CHECK(std::abs(tf.slope - expected) <= 0.05 * std::abs(expected));
    }
}

TEST_CASE("LRT prediction slope at the equilibrium ratio is small") {
    const CorrelationFit fit = reference_fit();
    const double t0 = 1.0 / 0.0052;
    const auto grid = uniform_grid(5.1 * t0, 4.0);
    ModelParams p = paper_params();
    p.e_o0 = equilibrium_ratio(fit, p) * p.e_c0;
    const auto pred_eq = lrt_energy_prediction(fit, p, grid);
    const double s_eq = harmonic_trend(pred_eq.e_o, p.omega0, t0, 5.0 * t0).slope;
    const auto pred_1 = lrt_energy_prediction(fit, paper_params(1.0), grid);
    const double s_1 = harmonic_trend(pred_1.e_o, p.omega0, t0, 5.0 * t0).slope;
    CHECK(std::abs(s_eq) < 0.05 * std::abs(s_1));
}

TEST_CASE("harmonic_trend recovers a planted trend under a 2 w0 oscillation") {
    TimeSeries s;
    const double w0 = 0.0052;
    for (int i = 0; i <= 500; ++i) {
        const double t = 2.0 * i;
        s.times.push_back(t);
        s.values.push_back(3.0 - 2.5e-6 * t + 0.02 * std::cos(2.0 * w0 * t + 0.3));
        s.stderrs.push_back(0.0);
    }
    const TrendFit tf = harmonic_trend(s, w0, 100.0, 900.0);
    CHECK(tf.slope == doctest::Approx(-2.5e-6).epsilon(1e-6));
    CHECK(tf.intercept == doctest::Approx(3.0).epsilon(1e-6));
}
