#include "chaosbath/response.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace chaosbath {

void CorrelationFit::validate() const {
    if (!(sigma_c > 0.0 && mu > 0.0))
        throw std::invalid_argument("CorrelationFit: amplitudes must be > 0");
    if (!(alpha > 0.0 && beta > 0.0))
        throw std::invalid_argument("CorrelationFit: decay rates must be > 0");
    if (!(omega > 0.0 && omega_cap > 0.0))
        throw std::invalid_argument("CorrelationFit: frequencies must be > 0");
    if (!(chi2_xx >= 0.0 && chi2_px >= 0.0))
        throw std::invalid_argument("CorrelationFit: chi2 must be >= 0");
}

CorrelationFit fit_correlations(const TimeSeries& xx, const TimeSeries& px) {
    const SinusoidFit fx = fit_damped_sinusoid(xx, SinusoidKind::Cosine);
    const SinusoidFit fp = fit_damped_sinusoid(px, SinusoidKind::Sine);
    CorrelationFit out{fx.amplitude, fx.decay, fx.frequency,
                       fp.amplitude, fp.decay, fp.frequency,
                       fx.chi2,      fp.chi2};
    out.validate();
    return out;
}

CorrelationFit reference_fit() {
    return CorrelationFit{1.865, 0.0418, 0.1963, 0.409, 0.0456, 0.2043, 1e-4, 1e-4};
}

double ResponseFunction::operator()(double t) const {
    return amp * std::exp(-beta * t) * std::sin(omega_cap * t);
}

ResponseFunction response_function(const CorrelationFit& fit, double e_c0) {
    fit.validate();
    if (!(e_c0 > 0.0)) throw std::invalid_argument("response_function: e_c0 must be > 0");
    return ResponseFunction{2.0 * fit.mu / e_c0, fit.beta, fit.omega_cap};
}

double MemoryKernel::operator()(double t) const {
    return pref * std::exp(-alpha * t) * (omega * std::cos(omega * t) + alpha * std::sin(omega * t));
}

MemoryKernel memory_kernel(const CorrelationFit& fit, double e_c0) {
    fit.validate();
    if (!(e_c0 > 0.0)) throw std::invalid_argument("memory_kernel: e_c0 must be > 0");
    const double w2 = fit.alpha * fit.alpha + fit.omega * fit.omega;
    return MemoryKernel{2.0 * fit.mu / (e_c0 * w2), fit.alpha, fit.omega};
}

EffectiveKernel derive_kernel(const CorrelationFit& fit, const ModelParams& params, double s_c) {
    fit.validate();
    params.validate();
    const double a = fit.alpha, w = fit.omega;
    const double w2 = a * a + w * w;
    EffectiveKernel k;
    // Matched B' makes the two Lambda routes coincide exactly; the raw-fit
    // value is kept as a diagnostic.
    k.b_prime = 2.0 * fit.mu * a * w / (w2 * w2);
    k.b_prime_raw = fit.sigma_c * a / w2;
    k.lambda = params.gamma * params.gamma * k.b_prime / (params.m * params.e_c0);
    k.gamma_big = params.e_c0 / (params.hbar * params.omega0);
    k.eps = k.lambda / params.omega0;
    k.f0 = 2.0 * fit.mu * w / (params.e_c0 * w2);
    k.omega0 = params.omega0;
    k.ehrenfest_margin = std::log(s_c / params.hbar) / (a / params.omega0);
    k.gamma_warning = k.gamma_big <= 1.0;
    const double shifted = params.omega0 * params.omega0 - params.gamma * params.gamma * k.f0 / params.m;
    if (!(shifted > 0.0))
        throw std::runtime_error("derive_kernel: stability condition omega0^2 - gamma^2 F(0)/m > 0 violated");
    return k;
}

double equilibrium_ratio(const CorrelationFit& fit, const ModelParams& params) {
    fit.validate();
    const double w0 = params.omega0;
    return fit.sigma_c / (4.0 * fit.mu * fit.omega) *
           (w0 * w0 + fit.omega * fit.omega + fit.alpha * fit.alpha);
}

double slope_coefficient(const CorrelationFit& fit, const ModelParams& params) {
    fit.validate();
    const double w0 = params.omega0, w = fit.omega, a = fit.alpha;
    const double dm = ((w0 - w) * (w0 - w) + a * a) * ((w0 + w) * (w0 + w) + a * a);
    const double bracket = equilibrium_ratio(fit, params) - params.e_o0 / params.e_c0;
    return 4.0 * fit.mu * w * a * bracket / dm;
}

namespace {

struct LrtGrids {
    std::vector<double> e_o, e_or;
};

// Single-resolution evaluation of the convolution integrals on a uniform
// grid (trapezoid weights). The double integrals reduce exactly:
//   chi-chi + Gamma-Gamma energy sum -> (1/2m) D0(t) + oscillating part R(t)
//   with D0(t) = 2 int_0^t (t-tau) cos(w0 tau) C(tau) dtau and
//   R(t) handled through the complex cumulative integrals of C e^{+-i w0 tau}.
LrtGrids lrt_on_grid(const CorrelationFit& fit, const ModelParams& params,
                     const std::vector<double>& ts) {
    const std::size_t n = ts.size();
    const double h = ts[1] - ts[0];
    const double w0 = params.omega0, m = params.m;
    const double g2 = params.gamma * params.gamma;
    const double e_o0 = params.e_o0;
    const double p0 = std::sqrt(2.0 * m * e_o0);
    const double f0 = memory_kernel(fit, params.e_c0).at_zero();

    // fitted forms, (alpha, omega)-unified response
    std::vector<double> phi(n), corr(n), zd(n), cosw(n), sinw(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = ts[i];
        phi[i] = (2.0 * fit.mu / params.e_c0) * std::exp(-fit.alpha * t) * std::sin(fit.omega * t);
        corr[i] = fit.sigma_c * std::exp(-fit.alpha * t) * std::cos(fit.omega * t);
        zd[i] = p0 / (m * w0) * std::sin(w0 * t);
        cosw[i] = std::cos(w0 * t);
        sinw[i] = std::sin(w0 * t);
    }

    // psi(s) = int_0^s phi(s-u) z_d(u) du
    std::vector<double> psi(n, 0.0);
    for (std::size_t k = 1; k < n; ++k) {
        double acc = 0.5 * (phi[k] * zd[0] + phi[0] * zd[k]);
        for (std::size_t j = 1; j < k; ++j) acc += phi[k - j] * zd[j];
        psi[k] = h * acc;
    }
    // J_c, J_s = convolutions of cos/sin(w0 .) with psi
    std::vector<double> jc(n, 0.0), js(n, 0.0);
    for (std::size_t k = 1; k < n; ++k) {
        double ac = 0.5 * (cosw[k] * psi[0] + cosw[0] * psi[k]);
        double as = 0.5 * (sinw[k] * psi[0] + sinw[0] * psi[k]);
        for (std::size_t j = 1; j < k; ++j) {
            ac += cosw[k - j] * psi[j];
            as += sinw[k - j] * psi[j];
        }
        jc[k] = h * ac;
        js[k] = h * as;
    }

    // cumulative trapezoids for the reduced double integrals
    std::vector<double> cum_k(n, 0.0), cum_tk(n, 0.0);
    std::vector<std::complex<double>> cum_m(n, 0.0), cum_p(n, 0.0);
    {
        double a1 = 0.0, a2 = 0.0;
        std::complex<double> a3 = 0.0, a4 = 0.0;
        double prev_k = cosw[0] * corr[0], prev_tk = 0.0;
        std::complex<double> prev_m = corr[0], prev_p = corr[0];
        for (std::size_t k = 1; k < n; ++k) {
            const double fk = cosw[k] * corr[k];
            const double ftk = ts[k] * fk;
            const std::complex<double> e = std::polar(1.0, -w0 * ts[k]);
            const std::complex<double> fm = corr[k] * e;
            const std::complex<double> fp = corr[k] / e;
            a1 += 0.5 * h * (prev_k + fk);
            a2 += 0.5 * h * (prev_tk + ftk);
            a3 += 0.5 * h * (prev_m + fm);
            a4 += 0.5 * h * (prev_p + fp);
            cum_k[k] = a1;
            cum_tk[k] = a2;
            cum_m[k] = a3;
            cum_p[k] = a4;
            prev_k = fk;
            prev_tk = ftk;
            prev_m = fm;
            prev_p = fp;
        }
    }

    LrtGrids out;
    out.e_o.resize(n);
    out.e_or.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double t = ts[k];
        const double d0 = 2.0 * (t * cum_k[k] - cum_tk[k]);
        const std::complex<double> e2t = std::polar(1.0, 2.0 * w0 * t);
        const std::complex<double> intg =
            (cum_m[k] - cum_p[k] / e2t) / std::complex<double>(0.0, w0);
        const double r_osc = (e2t * intg).real();
        const double ipp = 0.5 * d0 + 0.5 * r_osc;
        const double izz = (0.5 * d0 - 0.5 * r_osc) / (w0 * w0);
        const double pzd = p0 * cosw[k];
        const double pz2 = pzd * pzd + g2 * (2.0 * pzd * jc[k] + ipp);
        const double z2 = zd[k] * zd[k] + g2 * (2.0 / m * zd[k] * js[k] / w0 + izz / (m * m));
        const double e_o = 0.5 * pz2 / m + 0.5 * m * w0 * w0 * z2;
        out.e_o[k] = e_o;
        out.e_or[k] = e_o - 0.5 * g2 * f0 * z2;
    }
    return out;
}

}  // namespace

LrtPrediction lrt_energy_prediction(const CorrelationFit& fit, const ModelParams& params,
                                    const std::vector<double>& t_grid) {
    fit.validate();
    params.validate();
    if (t_grid.size() < 3 || t_grid.front() != 0.0)
        throw std::invalid_argument("lrt_energy_prediction: grid must be uniform from 0");
    const double h = t_grid[1] - t_grid[0];
    for (std::size_t i = 1; i < t_grid.size(); ++i)
        if (std::abs(t_grid[i] - t_grid[i - 1] - h) > 1e-9 * h)
            throw std::invalid_argument("lrt_energy_prediction: grid must be uniform");

    // Refine so the quadrature step resolves the fastest kernel frequency,
    // then Richardson-extrapolate the trapezoid results (h^2 error model).
    int refine = 1;
    while (h / refine > 0.5 && (t_grid.size() - 1) * static_cast<std::size_t>(refine) < 2000)
        refine *= 2;
    auto make_grid = [&](int r) {
        std::vector<double> g((t_grid.size() - 1) * r + 1);
        for (std::size_t i = 0; i < g.size(); ++i) g[i] = h * static_cast<double>(i) / r;
        return g;
    };
    const LrtGrids coarse = lrt_on_grid(fit, params, make_grid(refine));
    const LrtGrids fine = lrt_on_grid(fit, params, make_grid(2 * refine));

    LrtPrediction out;
    out.e_o.times = t_grid;
    out.e_or.times = t_grid;
    const std::size_t n = t_grid.size();
    out.e_o.values.resize(n);
    out.e_or.values.resize(n);
    out.e_o.stderrs.assign(n, 0.0);
    out.e_or.stderrs.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t kc = i * refine, kf = i * 2 * refine;
        const double eo = (4.0 * fine.e_o[kf] - coarse.e_o[kc]) / 3.0;
        const double eor = (4.0 * fine.e_or[kf] - coarse.e_or[kc]) / 3.0;
        if (!std::isfinite(eo) || !std::isfinite(eor))
            throw std::runtime_error("lrt_energy_prediction: quadrature failure");
        out.e_o.values[i] = eo;
        out.e_or.values[i] = eor;
    }
    return out;
}

TrendFit harmonic_trend(const TimeSeries& series, double w0, double t_lo, double t_hi,
                        std::size_t block_len) {
    std::vector<double> ts, ys;
    for (std::size_t i = 0; i < series.size(); ++i)
        if (series.times[i] >= t_lo && series.times[i] <= t_hi) {
            ts.push_back(series.times[i]);
            ys.push_back(series.values[i]);
        }
    const std::size_t n = ts.size();
    if (n < 8) throw std::invalid_argument("harmonic_trend: too few points in window");

    // normal equations for [1, t, cos(2 w0 t), sin(2 w0 t)]
    double ata[4][4] = {{0}}, atb[4] = {0, 0, 0, 0};
    auto row = [&](double t, double (&r)[4]) {
        r[0] = 1.0;
        r[1] = t;
        r[2] = std::cos(2.0 * w0 * t);
        r[3] = std::sin(2.0 * w0 * t);
    };
    for (std::size_t i = 0; i < n; ++i) {
        double r[4];
        row(ts[i], r);
        for (int p = 0; p < 4; ++p) {
            atb[p] += r[p] * ys[i];
            for (int q = 0; q < 4; ++q) ata[p][q] += r[p] * r[q];
        }
    }
    // Gaussian elimination, 4x4
    double m[4][5];
    for (int p = 0; p < 4; ++p) {
        for (int q = 0; q < 4; ++q) m[p][q] = ata[p][q];
        m[p][4] = atb[p];
    }
    for (int c = 0; c < 4; ++c) {
        int piv = c;
        for (int r2 = c + 1; r2 < 4; ++r2)
            if (std::abs(m[r2][c]) > std::abs(m[piv][c])) piv = r2;
        for (int k = 0; k < 5; ++k) std::swap(m[c][k], m[piv][k]);
        if (std::abs(m[c][c]) < 1e-300)
            throw std::runtime_error("harmonic_trend: singular normal equations");
        for (int r2 = 0; r2 < 4; ++r2) {
            if (r2 == c) continue;
            const double f = m[r2][c] / m[c][c];
            for (int k = c; k < 5; ++k) m[r2][k] -= f * m[c][k];
        }
    }
    double beta[4];
    for (int p = 0; p < 4; ++p) beta[p] = m[p][4] / m[p][p];

    // slope uncertainty from block-averaged residual scatter
    TrendFit out;
    out.intercept = beta[0];
    out.slope = beta[1];
    std::vector<double> bt, br;
    for (std::size_t i = 0; i < n; i += block_len) {
        const std::size_t j = std::min(n, i + block_len);
        double mt = 0, mr = 0;
        for (std::size_t k = i; k < j; ++k) {
            double r[4];
            row(ts[k], r);
            double fitv = 0;
            for (int p = 0; p < 4; ++p) fitv += beta[p] * r[p];
            mt += ts[k];
            mr += ys[k] - fitv;
        }
        bt.push_back(mt / static_cast<double>(j - i));
        br.push_back(mr / static_cast<double>(j - i));
    }
    if (bt.size() >= 3) {
        double st = 0, stt = 0, srr = 0;
        for (double v : bt) st += v;
        const double mt = st / static_cast<double>(bt.size());
        for (std::size_t i = 0; i < bt.size(); ++i) {
            stt += (bt[i] - mt) * (bt[i] - mt);
            srr += br[i] * br[i];
        }
        const double s2 = srr / static_cast<double>(bt.size() - 2);
        out.slope_stderr = std::sqrt(s2 / stt);
    }
    return out;
}

}  // namespace chaosbath
