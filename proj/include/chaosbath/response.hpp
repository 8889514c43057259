#pragma once

// Linear-response layer: correlation fits, response function phi_xx, memory
// kernel F, the derived constants (Lambda, B', Gamma, eps) and the LRT
// prediction of the oscillator's average energy.

#include <vector>

#include "chaosbath/fit.hpp"
#include "chaosbath/model.hpp"
#include "chaosbath/timeseries.hpp"

namespace chaosbath {

struct CorrelationFit {
    double sigma_c;    // amplitude of <x(0)x(t)>_e
    double alpha;      // its decay rate
    double omega;      // its frequency
    double mu;         // amplitude of <p_x(0)x(t)>_e
    double beta;       // its decay rate
    double omega_cap;  // its frequency (Omega)
    double chi2_xx = 0.0;
    double chi2_px = 0.0;

    void validate() const;
};

CorrelationFit fit_correlations(const TimeSeries& xx, const TimeSeries& px);

// Reference fit of the Nelson correlation functions at E_c(0)=0.38
// (used for defaults and cross checks).
CorrelationFit reference_fit();

// phi_xx(t) = (2 mu / E_c) e^{-beta t} sin(Omega t)
struct ResponseFunction {
    double amp, beta, omega_cap;
    double operator()(double t) const;
};
ResponseFunction response_function(const CorrelationFit& fit, double e_c0);

// F(t) = pref e^{-alpha t}(omega cos(omega t) + alpha sin(omega t)),
// pref = 2 mu / (E_c (alpha^2+omega^2)); uses (alpha, omega) from the
// position autocorrelation (beta ~ alpha, Omega ~ omega unification).
struct MemoryKernel {
    double pref, alpha, omega;
    double operator()(double t) const;
    double at_zero() const { return pref * omega; }
};
MemoryKernel memory_kernel(const CorrelationFit& fit, double e_c0);

struct EffectiveKernel {
    double lambda;       // damping rate Lambda
    double b_prime;      // matched kernel integral B' (Lambda = gamma^2 B'/(m E_c))
    double gamma_big;    // E_c(0)/(hbar omega0)
    double eps;          // Lambda/omega0
    double f0;           // F(0)
    double omega0;       // oscillator frequency the kernel was built for
    double b_prime_raw;  // sigma_c alpha/(alpha^2+omega^2), raw-fit route
    double ehrenfest_margin;  // ln(S_c/hbar)/(alpha/omega0), >= 1 required
    bool gamma_warning;       // Gamma <= 1 (outside the validity regime)
};

// Throws std::runtime_error if omega0^2 - gamma^2 F(0)/m <= 0.
EffectiveKernel derive_kernel(const CorrelationFit& fit, const ModelParams& params,
                              double s_c = 10.0);

double equilibrium_ratio(const CorrelationFit& fit, const ModelParams& params);

// Linear coefficient A of the short-time energy law.
double slope_coefficient(const CorrelationFit& fit, const ModelParams& params);

struct LrtPrediction {
    TimeSeries e_o;   // predicted <E_o(t)>
    TimeSeries e_or;  // predicted <E_or(t)>
};

// Quadrature of the double convolution integrals with the fitted forms
// inserted ((alpha, omega)-unified response), iterated trapezoid with
// Richardson extrapolation. t_grid must be uniform and start at 0.
LrtPrediction lrt_energy_prediction(const CorrelationFit& fit, const ModelParams& params,
                                    const std::vector<double>& t_grid);

struct TrendFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_stderr = 0.0;
};

// Least squares against [1, t, cos(2 w0 t), sin(2 w0 t)] on times in
// [t_lo, t_hi]; the harmonic columns absorb the oscillating part of the
// energy law so the linear coefficient is clean. slope_stderr comes from
// block-averaged residuals (block_len points per block).
TrendFit harmonic_trend(const TimeSeries& series, double w0, double t_lo, double t_hi,
                        std::size_t block_len = 25);

}  // namespace chaosbath
