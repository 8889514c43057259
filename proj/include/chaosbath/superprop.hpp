#pragma once

// Closed-form Feynman-Vernon superpropagator of the damped oscillator and
// its two applications: single-Gaussian evolution (dissipation, diffusion)
// and two-Gaussian decoherence. Raw coefficients are singular at
// sin(w0 T) = 0; the observable-level functions below are regular for all T.

#include <complex>
#include <span>
#include <vector>

#include "chaosbath/model.hpp"
#include "chaosbath/response.hpp"

namespace chaosbath {

struct GaussianPacket {
    double sigma;     // initial width
    double p = 0.0;   // initial momentum
    double q0 = 0.0;  // separation of the second packet (cat states)

    static GaussianPacket coherent(const ModelParams& params, double p = 0.0, double q0 = 0.0);
};

struct SuperpropCoeffs {
    double k1_t;  // K~1(T)
    double k2_t;  // K~2(T)
    double l_t;   // L~(T)
    double n_t;   // N~(T)
    double a_t;   // A~(T)
    double b_t;   // B~(T)
    double c_t;   // C~(T)
    double t;
};

// Throws std::domain_error near sin(w0 T) = 0; use the observable-level
// operations there, the physical outputs are regular.
SuperpropCoeffs coefficients(double t, const EffectiveKernel& kernel, const ModelParams& params);

double gaussian_center(double t, const EffectiveKernel& kernel, const ModelParams& params,
                       const GaussianPacket& packet);

// sigma^2(T), the closed-form width of the evolved packet.
double packet_width(double t, const EffectiveKernel& kernel, const GaussianPacket& packet);

// Short-time law sigma^2 [1 + (Gamma-1) 2 Lambda T] and the associated
// diffusion constant, plus the thermal-bath analogue E_c Lambda/(2 m w0^2).
struct LinearizedWidth {
    double width;
    double diffusion_constant;
    double thermal_analog;
};
LinearizedWidth width_linearized(double t, const EffectiveKernel& kernel,
                                 const ModelParams& params, const GaussianPacket& packet);

// Normalized probability density of the evolved single Gaussian on r_grid.
std::vector<double> gaussian_density(std::span<const double> r_grid, double t,
                                     const EffectiveKernel& kernel, const ModelParams& params,
                                     const GaussianPacket& packet);

struct CatStateDensity {
    std::vector<double> rho11;
    std::vector<double> rho22;
    std::vector<double> interference;
    double f_tilde;    // 2[2 hbar C~1 + sigma^2 K~1^2]
    double h;          // exp(-n (1+g)), n = q0^2/(8 sigma^2)
    double q_center;   // Q(T), center of the second packet
    double g;          // decoherence factor from the coefficient route
};

// Requires packet.q0 > 0.
CatStateDensity cat_state_density(std::span<const double> r_grid, double t,
                                  const EffectiveKernel& kernel, const ModelParams& params,
                                  const GaussianPacket& packet);

// g(T) = Gamma b/((1+eps^2) + Gamma b),
// b = e^{2 Lambda T} - 1 - 2 eps sin cos - 2 eps^2 sin^2.
double decoherence_factor(double t, const EffectiveKernel& kernel);

// Large-Gamma approximation g = 2 Gamma Lambda T/(1 + 2 Gamma Lambda T).
double decoherence_factor_approx(double t, const EffectiveKernel& kernel);

struct DecoherenceTime {
    double t_prime;
    double n_tilde;
    double t_prime_lambda;  // T' Lambda, documents T' << 1/Lambda
};

// n = q0^2/(8 sigma^2) must exceed ln 10.
DecoherenceTime decoherence_time(double n, const EffectiveKernel& kernel);

// J(r_T, y_T, r_0, y_0; T) up to the normalization factor G(T,0).
std::complex<double> superpropagator_value(double r_t, double y_t, double r_0, double y_0,
                                           double t, const EffectiveKernel& kernel,
                                           const ModelParams& params);

// The evolved Gaussian density matrix rho_o(r_T, y_T) in closed form, with
// G(T,0) = 1 (same convention as superpropagator_value); the quadrature
// convolution of the superpropagator against the initial state reproduces it.
std::complex<double> evolved_gaussian(double r_t, double y_t, double t,
                                      const EffectiveKernel& kernel, const ModelParams& params,
                                      const GaussianPacket& packet);

}  // namespace chaosbath
