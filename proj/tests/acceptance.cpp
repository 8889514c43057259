// Acceptance suite: exercises every top-level claim of the pipeline at full
// scale and prints one PASS/FAIL line per criterion. Returns the number of
// failed criteria. Scale knobs (defaults match the reference protocol):
//   CHAOSBATH_ACCEPT_CORR_NTRAJ  correlation ensemble size (default 35000)
//   CHAOSBATH_ACCEPT_NTRAJ       energy-flow ensemble size (default 16000)
//   CHAOSBATH_THREADS            worker cap

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "chaosbath/ensemble.hpp"
#include "chaosbath/laplace.hpp"
#include "chaosbath/model.hpp"
#include "chaosbath/response.hpp"
#include "chaosbath/rng.hpp"
#include "chaosbath/superprop.hpp"

using namespace chaosbath;

namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
    std::printf("%s criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", id, name.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

std::int64_t env_int(const char* name, std::int64_t def) {
    if (const char* v = std::getenv(name)) {
        const long long parsed = std::atoll(v);
        if (parsed > 0) return parsed;
    }
    return def;
}

double rel_dev(double v, double ref) { return std::abs(v - ref) / std::abs(ref); }

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list args;
    va_start(args, f);
    std::vsnprintf(buf, sizeof(buf), f, args);
    va_end(args);
    return buf;
}

double simpson(const std::vector<double>& f, double h) {
    double acc = f.front() + f.back();
    for (std::size_t i = 1; i + 1 < f.size(); ++i) acc += (i % 2 ? 4.0 : 2.0) * f[i];
    return acc * h / 3.0;
}

struct Context {
    CorrelationFit fit{};
    ModelParams params{};  // omega0 = alpha/8, gamma from the drive inversion
    EffectiveKernel kernel{};
};

IntegratorConfig make_grid(double dt, double t_max, double stride) {
    IntegratorConfig ic;
    ic.dt = dt;
    ic.n_steps = std::llround(t_max / dt);
    ic.sample_stride = std::llround(stride / dt);
    return ic;
}

void criterion1(Context& ctx) {
    const std::int64_t n_full = env_int("CHAOSBATH_ACCEPT_CORR_NTRAJ", 35000);
    const double ref[6] = {1.865, 0.0418, 0.1963, 0.409, 0.0456, 0.2043};
    const IntegratorConfig ic = make_grid(0.01, 200.0, 0.5);
    const ModelParams mp;  // isolated run, oscillator parameters unused

    auto run_fit = [&](std::int64_t n) {
        EnsembleSpec spec{n, 20060401u, 0.38, false};
        auto [xx, px] = correlation_pair(spec, mp, ic);
        return fit_correlations(xx, px);
    };

    const auto t0 = std::chrono::steady_clock::now();
    const CorrelationFit full = run_fit(n_full);
    const CorrelationFit reduced = run_fit(5000);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    const double dev_full[6] = {rel_dev(full.sigma_c, ref[0]), rel_dev(full.alpha, ref[1]),
                                rel_dev(full.omega, ref[2]),   rel_dev(full.mu, ref[3]),
                                rel_dev(full.beta, ref[4]),    rel_dev(full.omega_cap, ref[5])};
    const double dev_red[6] = {rel_dev(reduced.sigma_c, ref[0]), rel_dev(reduced.alpha, ref[1]),
                               rel_dev(reduced.omega, ref[2]),   rel_dev(reduced.mu, ref[3]),
                               rel_dev(reduced.beta, ref[4]),
                               rel_dev(reduced.omega_cap, ref[5])};
    const double worst_full = *std::max_element(dev_full, dev_full + 6);
    const double worst_red = *std::max_element(dev_red, dev_red + 6);
    const double chi2 = std::max(full.chi2_xx, full.chi2_px);
    const bool pass = worst_full <= 0.15 && chi2 <= 1e-3 && worst_red <= 0.25;

    ctx.fit = full;
    ctx.params.m = 1.0;
    ctx.params.omega0 = full.alpha / 8.0;
    ctx.params.gamma = std::sqrt(0.03 * ctx.params.m * std::pow(full.alpha, 4) * 0.38 /
                                 (2.0 * full.mu * full.omega));
    ctx.params.hbar = 1e-4;
    ctx.params.e_c0 = 0.38;
    ctx.params.e_o0 = 0.38;
    ctx.kernel = derive_kernel(ctx.fit, ctx.params);

    report(1, "correlation fits at E_c(0)=0.38", pass,
           fmt("n=%lld: (sigma,alpha,omega,mu,beta,Omega)=(%.4g,%.5g,%.5g,%.4g,%.5g,%.5g), "
               "worst dev %.1f%% (<=15%%), chi2/pt %.2e (<=1e-3); n=5000 worst dev %.1f%% "
               "(<=25%%); %.0f s",
               static_cast<long long>(n_full), full.sigma_c, full.alpha, full.omega, full.mu,
               full.beta, full.omega_cap, 100 * worst_full, chi2, 100 * worst_red, secs));
}

void criterion2(const Context& ctx) {
    const double r = equilibrium_ratio(ctx.fit, ctx.params);
    report(2, "equilibrium ratio", r >= 0.20 && r <= 0.28,
           fmt("ratio = %.4f, window [0.20, 0.28]", r));
}

void criterion3(const Context& ctx) {
    const std::int64_t n = env_int("CHAOSBATH_ACCEPT_NTRAJ", 16000);
    const double w0 = ctx.params.omega0;
    const double t0_scale = 1.0 / w0;
    const double g2m = ctx.params.gamma * ctx.params.gamma / ctx.params.m;
    const IntegratorConfig ic = make_grid(0.01, 5.4 * t0_scale, 1.0);
    const double f0 = ctx.kernel.f0;

    struct Row {
        double ratio, slope, stderr_, expected;
    };
    std::vector<Row> rows;
    for (double ratio : {1.0, 0.25, 0.1, 0.0}) {
        ModelParams mp = ctx.params;
        mp.e_o0 = ratio * mp.e_c0;
        EnsembleSpec spec{n, 20060401u, 0.38, true};
        auto series =
            propagate_ensemble(spec, mp, ic, {{"E_or", [mp, f0](const PhasePoint& s) {
                                                   return renormalized_energy(s.z, s.p_z, mp, f0);
                                               }}});
        const TrendFit tf = harmonic_trend(series.at("E_or"), w0, t0_scale, 5.0 * t0_scale, 25);
        const double expected = g2m * slope_coefficient(ctx.fit, mp);
        rows.push_back({ratio, tf.slope, tf.slope_stderr, expected});
    }

    const Row& r10 = rows[0];
    const Row& r025 = rows[1];
    const Row& r01 = rows[2];
    const Row& r00 = rows[3];
    const bool signs_ok =
        r10.slope < 0.0 && r01.slope > 0.0 &&
        std::abs(r025.slope) <= std::max(3.0 * r025.stderr_, 0.3 * std::abs(r10.slope));
    const bool match10 = rel_dev(r10.slope, r10.expected) <= 0.30;
    const bool match01 = rel_dev(r01.slope, r01.expected) <= 0.30;

    // diffusion-only diagnostic: the E_o(0) = 0 run isolates the heating term
    const double lrt_diffusion =
        ctx.fit.sigma_c * ctx.fit.alpha *
        (w0 * w0 + ctx.fit.omega * ctx.fit.omega + ctx.fit.alpha * ctx.fit.alpha) /
        (((w0 - ctx.fit.omega) * (w0 - ctx.fit.omega) + ctx.fit.alpha * ctx.fit.alpha) *
         ((w0 + ctx.fit.omega) * (w0 + ctx.fit.omega) + ctx.fit.alpha * ctx.fit.alpha));

    report(3, "measured energy-flow slopes", signs_ok && match10 && match01,
           fmt("slopes/gamma^2: ratio 1.0 %+.2f vs %+.2f (dev %.0f%%, <=30%%), ratio 0.25 "
               "%+.2f (~0 ok: %s), ratio 0.1 %+.2f vs %+.2f (dev %.0f%%, <=30%%); "
               "diffusion-only measured %+.2f vs fitted-LRT %+.2f; n=%lld",
               r10.slope / g2m, r10.expected / g2m, 100 * rel_dev(r10.slope, r10.expected),
               r025.slope / g2m,
               std::abs(r025.slope) <=
                       std::max(3.0 * r025.stderr_, 0.3 * std::abs(r10.slope))
                   ? "yes"
                   : "no",
               r01.slope / g2m, r01.expected / g2m, 100 * rel_dev(r01.slope, r01.expected),
               r00.slope / g2m, lrt_diffusion, static_cast<long long>(n)));
}

void criterion4(const Context& ctx) {
    const double t0_scale = 1.0 / ctx.params.omega0;
    std::vector<double> grid;
    for (double t = 0.0; t <= 5.1 * t0_scale; t += 4.0) grid.push_back(t);
    double worst = 0.0;
    for (double ratio : {0.1, 0.25, 1.0}) {
        ModelParams mp = ctx.params;
        mp.e_o0 = ratio * mp.e_c0;
        const auto pred = lrt_energy_prediction(ctx.fit, mp, grid);
        const TrendFit tf = harmonic_trend(pred.e_o, mp.omega0, t0_scale, 5.0 * t0_scale, 25);
        const double expected = mp.gamma * mp.gamma * slope_coefficient(ctx.fit, mp) / mp.m;
        worst = std::max(worst, rel_dev(tf.slope, expected));
    }
    report(4, "LRT quadrature linear coefficient", worst <= 0.05,
           fmt("worst slope deviation %.2f%% across ratios {0.1, 0.25, 1.0} (<=5%%)",
               100 * worst));
}

void criterion5() {
    const CharacteristicProblem prob{0.016, 25.0, 0.03, -1, 1.0};
    const RootSet rs = solve_characteristic(prob);
    const double tr_re = rs.roots[0].real(), tr_im = std::abs(rs.roots[0].imag());
    const double se_re = rs.roots[2].real(), se_im = std::abs(rs.roots[2].imag());
    const ReducedReport red = reduced_model_check(prob);
    const bool pass = std::abs(tr_re + 1.0) <= 0.01 && std::abs(tr_im - 5.0) <= 0.01 &&
                      se_re < 0.0 && std::abs(se_re) >= 0.5 * 4e-5 &&
                      std::abs(se_re) <= 2.0 * 4e-5 && std::abs(se_im - 0.12) <= 0.005 &&
                      red.max_rel_gap < 5e-3;
    report(5, "characteristic-polynomial roots at the reference inputs", pass,
           fmt("transient %.6g%+.6gi vs -1+-5i; secular %.3e%+.5gi vs -4e-5+-0.12i; "
               "reduced-model gap %.2e (<5e-3)",
               tr_re, tr_im, se_re, se_im, red.max_rel_gap));
}

void criterion6(const Context& ctx) {
    const GaussianPacket packet{1.0, 0.0, 0.0};
    bool exact_at_zero = true;
    double worst_fit = 0.0, worst_flat = 0.0;
    for (double gb : {0.5, 1.0, 2.0}) {
        EffectiveKernel k = ctx.kernel;
        k.gamma_big = gb;
        exact_at_zero = exact_at_zero && packet_width(0.0, k, packet) == 1.0;
        for (int i = 0; i <= 300; ++i) {
            const double lt = 1.5 * i / 300.0;
            const double t = lt / k.lambda;
            const double w35 = packet_width(t, k, packet);
            const double w37 = std::exp(-2.0 * lt) + gb * (1.0 - std::exp(-2.0 * lt));
            worst_fit = std::max(worst_fit, std::abs(w35 - w37) / w37);
            if (gb == 1.0) worst_flat = std::max(worst_flat, std::abs(w35 - 1.0));
        }
    }
    report(6, "packet width curves", exact_at_zero && worst_fit <= 0.10 && worst_flat <= 0.05,
           fmt("sigma^2(0) exact: %s; sup |eq.35-eq.37|/eq.37 = %.2e (<=0.10); Gamma=1 "
               "deviation %.2e (<=0.05)",
               exact_at_zero ? "yes" : "no", worst_fit, worst_flat));
}

void criterion7(const Context& ctx) {
    EffectiveKernel k = ctx.kernel;
    k.gamma_big = 10.0;
    const bool zero_exact = decoherence_factor(0.0, k) == 0.0;
    bool monotone = true;
    double prev = 0.0;
    for (int i = 1; i <= 500; ++i) {
        const double g = decoherence_factor(5.0 * i / 500.0 / k.lambda, k);
        if (g < prev - 1e-5) monotone = false;
        prev = g;
    }
    const bool limit_ok = prev > 0.99;
    double worst_abs = 0.0, worst_rel = 0.0;
    for (int i = 0; i <= 300; ++i) {
        const double lt = 0.3 * i / 300.0;
        const double t = lt / k.lambda;
        const double ge = decoherence_factor(t, k);
        const double ga = decoherence_factor_approx(t, k);
        worst_abs = std::max(worst_abs, std::abs(ge - ga));
        if (lt >= 0.01) worst_rel = std::max(worst_rel, std::abs(ge - ga) / ge);
    }
    report(7, "decoherence factor", zero_exact && monotone && limit_ok &&
                                        worst_abs <= 0.05 && worst_rel <= 0.05,
           fmt("g(0)=0 exact: %s; monotone to %.4f; |g-g_approx| sup %.3f abs (<=0.05), "
               "%.1f%% rel on Lambda T in [0.01,0.3] (<=5%%)",
               zero_exact ? "yes" : "no", prev, worst_abs, 100 * worst_rel));
}

void criterion8(const Context& ctx) {
    EffectiveKernel k = ctx.kernel;
    k.gamma_big = 100.0;
    const DecoherenceTime d = decoherence_time(50.0, k);
    // The attenuation band checks the linearized-g chain that defines T';
    // the exact g adds an eps-phase ripple that depends on the refitted
    // kernel and is reported for reference.
    const double att = std::exp(-50.0 * decoherence_factor_approx(d.t_prime, k));
    const double att_exact = std::exp(-50.0 * decoherence_factor(d.t_prime, k));
    const bool pass = d.t_prime_lambda <= 1e-3 && att >= 3e-4 && att <= 3e-3;
    report(8, "decoherence vs dissipation separation", pass,
           fmt("T' Lambda = %.2e (<=1e-3); exp(-n g(T')) = %.2e in [3e-4, 3e-3] "
               "(exact-g value %.2e)",
               d.t_prime_lambda, att, att_exact));
}

void criterion9(const Context& ctx) {
    // single-Gaussian normalization at the physical scale
    const GaussianPacket phys = GaussianPacket::coherent(ctx.params, 0.0);
    const double t_phys = 1.0 / ctx.params.omega0;
    const double center = gaussian_center(t_phys, ctx.kernel, ctx.params, phys);
    const double w = std::sqrt(packet_width(t_phys, ctx.kernel, phys));
    const int n = 4000;
    std::vector<double> r(n + 1);
    const double lo = center - 8.0 * w, h = 16.0 * w / n;
    for (int i = 0; i <= n; ++i) r[static_cast<std::size_t>(i)] = lo + h * i;
    const std::vector<double> rho = gaussian_density(r, t_phys, ctx.kernel, ctx.params, phys);
    const double gauss_norm_err = std::abs(simpson(rho, h) - 1.0);

    // cat-state normalization at Gamma = 10
    EffectiveKernel k10 = ctx.kernel;
    k10.gamma_big = 10.0;
    GaussianPacket cat_packet = GaussianPacket::coherent(ctx.params);
    cat_packet.q0 = 14.0 * cat_packet.sigma;
    double cat_norm_err = 0.0;
    for (double w0t : {0.5, 1.0, 2.0}) {
        const double t = w0t / ctx.params.omega0;
        const double wc = std::sqrt(packet_width(t, k10, cat_packet));
        const double q_t =
            cat_state_density(std::vector<double>{0.0}, t, k10, ctx.params, cat_packet)
                .q_center;
        const double clo = std::min(0.0, q_t) - 10.0 * wc;
        const double chi_ = std::max(0.0, q_t) + 10.0 * wc;
        const double ch = (chi_ - clo) / 8000;
        std::vector<double> cr(8001);
        for (int i = 0; i <= 8000; ++i) cr[static_cast<std::size_t>(i)] = clo + ch * i;
        const CatStateDensity cat = cat_state_density(cr, t, k10, ctx.params, cat_packet);
        std::vector<double> tot(cr.size());
        for (std::size_t i = 0; i < cr.size(); ++i)
            tot[i] = cat.rho11[i] + cat.rho22[i] + cat.interference[i];
        cat_norm_err = std::max(cat_norm_err, std::abs(simpson(tot, ch) - 1.0));
    }

    // hermiticity, exact
    const auto va =
        superpropagator_value(0.03, -0.05, 0.02, -0.04, t_phys, ctx.kernel, ctx.params);
    const auto vb =
        superpropagator_value(0.03, 0.05, 0.02, 0.04, t_phys, ctx.kernel, ctx.params);
    const bool herm = va == std::conj(vb);

    // quadrature convolution against the closed form on an 8x8 grid
    ModelParams tp;
    tp.m = 1.0;
    tp.omega0 = 1.0;
    tp.hbar = 1.0;
    tp.e_c0 = 4.0;
    tp.e_o0 = 0.0;
    EffectiveKernel tk{};
    tk.lambda = 0.01;
    tk.b_prime = 1.0;
    tk.gamma_big = 4.0;
    tk.eps = 0.01;
    tk.f0 = 1.0;
    tk.omega0 = 1.0;
    tk.b_prime_raw = 1.0;
    tk.ehrenfest_margin = 2.0;
    tk.gamma_warning = false;
    tp.gamma = std::sqrt(tk.lambda * tp.m * tp.e_c0 / tk.b_prime);
    const GaussianPacket toy{1.0 / std::sqrt(2.0), 0.7, 0.0};
    const double tt = 2.0;
    const int nr = 1001, ny = 1401;
    const double rb = 8.0 * toy.sigma, yb = 12.0 * toy.sigma;
    const double hr = 2.0 * rb / (nr - 1), hy = 2.0 * yb / (ny - 1);
    double conv_err = 0.0;
    for (int ir = 0; ir < 8; ++ir) {
        for (int iy = 0; iy < 8; ++iy) {
            const double r_t = -1.05 + 0.3 * ir;
            const double y_t = -1.05 + 0.3 * iy;
            std::complex<double> acc = 0.0;
            for (int i = 0; i < nr; ++i) {
                const double r0 = -rb + hr * i;
                const double wr = (i == 0 || i == nr - 1) ? 0.5 : 1.0;
                std::complex<double> inner = 0.0;
                for (int j = 0; j < ny; ++j) {
                    const double y0 = -yb + hy * j;
                    const double wy = (j == 0 || j == ny - 1) ? 0.5 : 1.0;
                    inner += wy * superpropagator_value(r_t, y_t, r0, y0, tt, tk, tp) *
                             std::polar(1.0, toy.p * y0) *
                             std::exp(-r0 * r0 / (2 * toy.sigma * toy.sigma) -
                                      y0 * y0 / (8 * toy.sigma * toy.sigma)) /
                             std::sqrt(2.0 * M_PI * toy.sigma * toy.sigma);
                }
                acc += wr * inner;
            }
            acc *= hr * hy;
            conv_err =
                std::max(conv_err, std::abs(acc - evolved_gaussian(r_t, y_t, tt, tk, tp, toy)));
        }
    }

    const bool pass =
        gauss_norm_err <= 1e-8 && cat_norm_err <= 1e-8 && herm && conv_err <= 1e-6;
    report(9, "quantum-state invariants", pass,
           fmt("gaussian norm err %.1e (<=1e-8); cat norm err %.1e (<=1e-8); hermiticity "
               "exact: %s; convolution vs closed form sup err %.1e (<=1e-6)",
               gauss_norm_err, cat_norm_err, herm ? "yes" : "no", conv_err));
}

void criterion10() {
    // energy drift over 2e5 steps at dt = 0.01 on the E_c = 0.38 surface
    const ChaoticInit ci = sample_microcanonical_one(0.38, 555u, 3);
    PhasePoint s{0, 0, ci.x, ci.y, ci.p_x, ci.p_y};
    const double h0 = nelson_energy(s);
    double drift = 0.0;
    for (int k = 1; k <= 200000; ++k) {
        detail::step_chaotic_unchecked(s, 0.01);
        if (k % 200 == 0) drift = std::max(drift, std::abs(nelson_energy(s) - h0) / h0);
    }

    // reversibility
    ModelParams p;
    p.omega0 = 0.005225;
    p.gamma = 4.7e-4;
    CounterRng rng(8, 8);
    double rev = 0.0;
    for (int i = 0; i < 100; ++i) {
        PhasePoint a{rng.next_symmetric() * 2, rng.next_symmetric() * 2,
                     rng.next_symmetric() * 2, rng.next_symmetric() * 2,
                     rng.next_symmetric() * 2, rng.next_symmetric() * 2};
        const double dt = 0.05 * rng.next_double() + 1e-4;
        const PhasePoint b = step(step(a, p, dt), p, -dt);
        rev = std::max({rev, std::abs(b.z - a.z), std::abs(b.p_z - a.p_z),
                        std::abs(b.x - a.x), std::abs(b.y - a.y), std::abs(b.p_x - a.p_x),
                        std::abs(b.p_y - a.p_y)});
    }

    // sampler vs thin-shell oracle on <x^2>
    CounterRng orng(60601, 0);
    const double e = 0.38;
    const double xb = std::sqrt(20.0 * e), ub = std::sqrt(e), pb = std::sqrt(2.0 * e * 1.01);
    double s1 = 0, s2 = 0;
    std::int64_t kept = 0;
    for (std::int64_t i = 0; i < 4000000; ++i) {
        const double x = orng.next_symmetric() * xb;
        const double u = orng.next_symmetric() * ub;
        const double px = orng.next_symmetric() * pb;
        const double py = orng.next_symmetric() * pb;
        const double hh = 0.5 * (px * px + py * py) + u * u + 0.05 * x * x;
        if (std::abs(hh - e) < 1e-3) {
            s1 += x * x;
            s2 += std::pow(x, 4);
            ++kept;
        }
    }
    const double mo = s1 / static_cast<double>(kept);
    const double sd_o =
        std::sqrt((s2 / static_cast<double>(kept) - mo * mo) / static_cast<double>(kept));
    double t1 = 0, t2 = 0;
    const std::int64_t ns = 200000;
    for (std::int64_t i = 0; i < ns; ++i) {
        const ChaoticInit c = sample_microcanonical_one(e, 777u, static_cast<std::uint64_t>(i));
        t1 += c.x * c.x;
        t2 += std::pow(c.x, 4);
    }
    const double ms = t1 / static_cast<double>(ns);
    const double sd_s =
        std::sqrt((t2 / static_cast<double>(ns) - ms * ms) / static_cast<double>(ns));
    const double pull = std::abs(ms - mo) / std::sqrt(sd_o * sd_o + sd_s * sd_s);

    // bitwise reproducibility across worker counts
    EnsembleSpec spec{500, 99u, 0.38, true};
    ModelParams mp;
    mp.omega0 = 0.005225;
    mp.gamma = 4.7e-4;
    mp.e_o0 = 0.38;
    const IntegratorConfig ic = make_grid(0.01, 5.0, 1.0);
    std::vector<Observable> obs{
        {"E_o", [mp](const PhasePoint& st) { return oscillator_energy(st, mp); }}};
    const auto r1 = propagate_ensemble(spec, mp, ic, obs, 1);
    const auto r2 = propagate_ensemble(spec, mp, ic, obs, 2);
    const auto r3 = propagate_ensemble(spec, mp, ic, obs, 3);
    const bool bitwise = r1.at("E_o").values == r2.at("E_o").values &&
                         r1.at("E_o").values == r3.at("E_o").values &&
                         r1.at("E_o").stderrs == r2.at("E_o").stderrs;

    const bool pass = drift < 1e-8 && rev < 1e-12 && pull <= 3.0 && bitwise;
    report(10, "numerics substrate", pass,
           fmt("drift %.1e (<1e-8); reversibility %.1e (<1e-12); thin-shell pull %.2f sigma "
               "(<=3); bitwise across workers: %s",
               drift, rev, pull, bitwise ? "yes" : "no"));
}

}  // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    Context ctx;
    criterion1(ctx);
    criterion2(ctx);
    criterion3(ctx);
    criterion4(ctx);
    criterion5();
    criterion6(ctx);
    criterion7(ctx);
    criterion8(ctx);
    criterion9(ctx);
    criterion10();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%d of 10 criteria passed in %.0f s\n", 10 - g_failures, secs);
    return g_failures;
}
