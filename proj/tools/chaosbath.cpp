// Command-line front end: runs the classical ensembles, the correlation
// fits, and the closed-form quantum results, and writes the figure
// artifacts (CSV/JSON/SVG). Outputs are byte-identical for a given config
// and seed at any worker count.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chaosbath/ensemble.hpp"
#include "chaosbath/io.hpp"
#include "chaosbath/laplace.hpp"
#include "chaosbath/model.hpp"
#include "chaosbath/response.hpp"
#include "chaosbath/superprop.hpp"
#include "chaosbath/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace chaosbath;

namespace {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    // model; negative omega0/gamma mean "derive from this run's fit"
    double m = 1.0;
    double omega0 = -1.0;
    double gamma = -1.0;
    double hbar = 1e-4;
    double e_c0 = 0.38;
    // ensemble
    std::int64_t n_traj = 4000;
    std::int64_t corr_n_traj = 35000;
    std::uint64_t seed = 20060401;
    // integrator / grids
    double dt = 0.01;
    double corr_t_max = 200.0;
    double corr_stride = 0.5;
    double energy_t_max = 0.0;  // 0: 6/omega0
    double energy_stride = 1.0;
    // energy-flow ratios E_o(0)/E_c(0)
    std::vector<double> ratios{1.0, 0.25, 0.1};
    // characteristic-problem reference inputs
    double roots_ratio_w0 = 0.016;
    double roots_ratio_w = 25.0;
    double roots_drive = 0.03;
    // output
    std::string out_dir = "out";
    bool svg = true;

    json to_json() const {
        json j;
        j["model"] = {{"m", m},       {"omega0", omega0}, {"gamma", gamma},
                      {"hbar", hbar}, {"e_c0", e_c0}};
        j["ensemble"] = {{"n_traj", n_traj}, {"corr_n_traj", corr_n_traj}, {"seed", seed}};
        j["integrator"] = {{"dt", dt},
                           {"corr_t_max", corr_t_max},
                           {"corr_stride", corr_stride},
                           {"energy_t_max", energy_t_max},
                           {"energy_stride", energy_stride}};
        j["ratios"] = ratios;
        j["roots"] = {{"ratio_w0", roots_ratio_w0}, {"ratio_w", roots_ratio_w}, {"drive", roots_drive}};
        j["output"] = {{"dir", out_dir}, {"svg", svg}};
        return j;
    }

    void from_json(const json& j) {
        auto get = [&](const char* sec, const char* key, auto& dst) {
            if (j.contains(sec) && j[sec].contains(key)) j[sec][key].get_to(dst);
        };
        get("model", "m", m);
        get("model", "omega0", omega0);
        get("model", "gamma", gamma);
        get("model", "hbar", hbar);
        get("model", "e_c0", e_c0);
        get("ensemble", "n_traj", n_traj);
        get("ensemble", "corr_n_traj", corr_n_traj);
        get("ensemble", "seed", seed);
        get("integrator", "dt", dt);
        get("integrator", "corr_t_max", corr_t_max);
        get("integrator", "corr_stride", corr_stride);
        get("integrator", "energy_t_max", energy_t_max);
        get("integrator", "energy_stride", energy_stride);
        if (j.contains("ratios")) j["ratios"].get_to(ratios);
        get("roots", "ratio_w0", roots_ratio_w0);
        get("roots", "ratio_w", roots_ratio_w);
        get("roots", "drive", roots_drive);
        get("output", "dir", out_dir);
        get("output", "svg", svg);
    }
};

struct Pipeline {
    RunConfig cfg;
    std::string hash;
    fs::path out;

    CorrelationFit fit{};
    ModelParams params{};  // resolved (omega0/gamma concrete)
    EffectiveKernel kernel{};
    std::string omega0_provenance, gamma_provenance;
    bool have_fit = false;
};

IntegratorConfig grid(double dt, double t_max, double stride) {
    IntegratorConfig ic;
    ic.dt = dt;
    ic.n_steps = std::llround(t_max / dt);
    ic.sample_stride = std::llround(stride / dt);
    ic.validate();
    return ic;
}

void resolve_params(Pipeline& p) {
    p.params.m = p.cfg.m;
    p.params.hbar = p.cfg.hbar;
    p.params.e_c0 = p.cfg.e_c0;
    p.params.e_o0 = p.cfg.e_c0;  // per-ratio commands override
    if (p.cfg.omega0 > 0.0) {
        p.params.omega0 = p.cfg.omega0;
        p.omega0_provenance = "explicit";
    } else {
        p.params.omega0 = p.fit.alpha / 8.0;
        p.omega0_provenance = "alpha/8 from this run's fit";
    }
    if (p.cfg.gamma >= 0.0) {
        p.params.gamma = p.cfg.gamma;
        p.gamma_provenance = "explicit";
    } else {
        // invert gamma^2 (2 mu/E_c) omega/(m alpha^4) = 0.03
        const double a4 = std::pow(p.fit.alpha, 4);
        p.params.gamma = std::sqrt(0.03 * p.params.m * a4 * p.params.e_c0 /
                                   (2.0 * p.fit.mu * p.fit.omega));
        p.gamma_provenance = "drive gamma^2 (2 mu/E_c) omega/(m alpha^4) = 0.03";
    }
    p.params.validate();
}

json kernel_json(const EffectiveKernel& k) {
    return json{{"lambda", k.lambda},
                {"b_prime", k.b_prime},
                {"b_prime_raw", k.b_prime_raw},
                {"gamma_big", k.gamma_big},
                {"eps", k.eps},
                {"f0", k.f0},
                {"omega0", k.omega0},
                {"ehrenfest_margin", k.ehrenfest_margin},
                {"gamma_warning", k.gamma_warning}};
}

json fit_json_body(const Pipeline& p) {
    json j;
    j["_meta"] = {{"tool", kToolName}, {"version", kVersion}, {"config_hash", p.hash}};
    j["fit"] = {{"sigma_c", p.fit.sigma_c}, {"alpha", p.fit.alpha},
                {"omega", p.fit.omega},     {"mu", p.fit.mu},
                {"beta", p.fit.beta},       {"omega_cap", p.fit.omega_cap},
                {"chi2_xx", p.fit.chi2_xx}, {"chi2_px", p.fit.chi2_px}};
    j["kernel"] = kernel_json(p.kernel);
    j["model"] = {{"m", p.params.m},         {"omega0", p.params.omega0},
                  {"gamma", p.params.gamma}, {"hbar", p.params.hbar},
                  {"e_c0", p.params.e_c0}};
    j["derived"] = {{"equilibrium_ratio", equilibrium_ratio(p.fit, p.params)}};
    j["provenance"] = {{"omega0", p.omega0_provenance}, {"gamma", p.gamma_provenance}};
    return j;
}

void write_json_file(const fs::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string());
    out << j.dump(2) << "\n";
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

void cmd_correlations(Pipeline& p) {
    EnsembleSpec spec{p.cfg.corr_n_traj, p.cfg.seed, p.cfg.e_c0, false};
    const IntegratorConfig ic = grid(p.cfg.dt, p.cfg.corr_t_max, p.cfg.corr_stride);
    auto [xx, px] = correlation_pair(spec, p.params, ic);
    write_timeseries_csv(p.out / "corr_xx.csv", p.hash, xx);
    write_timeseries_csv(p.out / "corr_px.csv", p.hash, px);

    try {
        p.fit = fit_correlations(xx, px);
    } catch (const FitError& e) {
        // degenerate but valid run (e.g. a single trajectory): keep the raw
        // correlation outputs and record why no kernel could be derived
        std::cerr << kToolName << ": warning: " << e.what() << "\n";
        json j;
        j["_meta"] = {{"tool", kToolName}, {"version", kVersion}, {"config_hash", p.hash}};
        j["error"] = e.what();
        write_json_file(p.out / "fit.json", j);
        return;
    }
    resolve_params(p);
    p.kernel = derive_kernel(p.fit, p.params);
    p.have_fit = true;
    write_json_file(p.out / "fit.json", fit_json_body(p));

    if (p.cfg.svg) {
        std::vector<double> fx(xx.size()), fp(px.size());
        for (std::size_t i = 0; i < xx.size(); ++i)
            fx[i] = p.fit.sigma_c * std::exp(-p.fit.alpha * xx.times[i]) *
                    std::cos(p.fit.omega * xx.times[i]);
        for (std::size_t i = 0; i < px.size(); ++i)
            fp[i] = p.fit.mu * std::exp(-p.fit.beta * px.times[i]) *
                    std::sin(p.fit.omega_cap * px.times[i]);
        SvgPlot plot("Chaotic-bath correlation functions, E_c(0)=" + format_g17(p.cfg.e_c0),
                     "t", "correlation");
        plot.add_series("<x(0)x(t)>", xx.times, xx.values);
        plot.add_series("fit (cos)", xx.times, fx);
        plot.add_series("<p_x(0)x(t)>", px.times, px.values);
        plot.add_series("fit (sin)", px.times, fp);
        plot.write(p.out / "fig1.svg", p.hash);
    }
}

void require_fit(Pipeline& p) {
    if (p.have_fit) return;
    const fs::path f = p.out / "fit.json";
    if (fs::exists(f)) {
        std::ifstream in(f);
        json j;
        in >> j;
        if (!j.contains("fit"))
            throw ConfigError("fit.json carries no usable fit (degenerate correlation run?)");
        p.fit = CorrelationFit{j["fit"]["sigma_c"], j["fit"]["alpha"],  j["fit"]["omega"],
                               j["fit"]["mu"],      j["fit"]["beta"],   j["fit"]["omega_cap"],
                               j["fit"]["chi2_xx"], j["fit"]["chi2_px"]};
        p.params.m = j["model"]["m"];
        p.params.omega0 = j["model"]["omega0"];
        p.params.gamma = j["model"]["gamma"];
        p.params.hbar = j["model"]["hbar"];
        p.params.e_c0 = j["model"]["e_c0"];
        p.params.e_o0 = p.params.e_c0;
        p.omega0_provenance = j["provenance"]["omega0"];
        p.gamma_provenance = j["provenance"]["gamma"];
        p.kernel = derive_kernel(p.fit, p.params);
        p.have_fit = true;
        return;
    }
    cmd_correlations(p);
}

std::string ratio_tag(double r) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", r);
    return buf;
}

void cmd_energy_flow(Pipeline& p) {
    require_fit(p);
    const double t_max = p.cfg.energy_t_max > 0.0 ? p.cfg.energy_t_max : 6.0 / p.params.omega0;
    const IntegratorConfig ic = grid(p.cfg.dt, t_max, p.cfg.energy_stride);
    const double f0 = p.kernel.f0;
    const double g2m = p.params.gamma * p.params.gamma / p.params.m;

    SvgPlot plot("Average oscillator energy (renormalized) and the linear law",
                 "t", "<E_or(t)>");
    for (double ratio : p.cfg.ratios) {
        ModelParams mp = p.params;
        mp.e_o0 = ratio * p.params.e_c0;
        const double a_coef = slope_coefficient(p.fit, mp);
        EnsembleSpec spec{p.cfg.n_traj, p.cfg.seed, p.cfg.e_c0, true};
        std::vector<Observable> obs{
            {"E_o", [mp](const PhasePoint& s) { return oscillator_energy(s, mp); }},
            {"E_or", [mp, f0](const PhasePoint& s) {
                 return renormalized_energy(s.z, s.p_z, mp, f0);
             }}};
        auto series = propagate_ensemble(spec, mp, ic, obs);
        const TimeSeries& eo = series.at("E_o");
        const TimeSeries& eor = series.at("E_or");
        std::vector<double> lin(eo.size());
        for (std::size_t i = 0; i < eo.size(); ++i)
            lin[i] = mp.e_o0 + g2m * a_coef * eo.times[i];
        write_csv(p.out / ("energy_" + ratio_tag(ratio) + ".csv"), p.hash,
                  {{"t", &eo.times},
                   {"e_o_mean", &eo.values},
                   {"e_o_stderr", &eo.stderrs},
                   {"e_or_mean", &eor.values},
                   {"e_or_stderr", &eor.stderrs},
                   {"linear_prediction", &lin}});
        if (p.cfg.svg) {
            plot.add_series("E_or, ratio " + ratio_tag(ratio), eor.times, eor.values);
            plot.add_series("linear, ratio " + ratio_tag(ratio), eo.times, lin);
        }
    }
    if (p.cfg.svg) plot.write(p.out / "fig2.svg", p.hash);
}

std::string validity_header(const Pipeline& p) {
    return "semiclassical validity: ehrenfest_margin=" + format_g17(p.kernel.ehrenfest_margin) +
           (p.kernel.ehrenfest_margin >= 1.0 ? " (ok)" : " (violated)") +
           (p.kernel.gamma_warning ? ", warning: Gamma <= 1" : "");
}

void cmd_gaussian(Pipeline& p) {
    require_fit(p);
    if (!(p.kernel.lambda > 0.0))
        throw std::runtime_error("gaussian: Lambda = 0 (gamma = 0), width curves undefined");
    const GaussianPacket packet = GaussianPacket::coherent(p.params);
    SvgPlot plot("Squared width of the evolved packet", "Lambda T", "sigma^2(T)/sigma^2");
    for (double gb : {0.5, 1.0, 2.0}) {
        EffectiveKernel k = p.kernel;
        k.gamma_big = gb;
        const int n = 301;
        std::vector<double> ts(n), lt(n), wr(n), wr37(n);
        for (int i = 0; i < n; ++i) {
            lt[i] = 1.5 * i / (n - 1.0);
            ts[i] = lt[i] / k.lambda;
            wr[i] = packet_width(ts[i], k, packet) / (packet.sigma * packet.sigma);
            const double em = std::exp(-2.0 * k.lambda * ts[i]);
            wr37[i] = em + gb * (1.0 - em);
        }
        write_csv(p.out / ("fig3_gamma" + ratio_tag(gb) + ".csv"), p.hash,
                  {{"t", &ts}, {"lambda_t", &lt}, {"width_ratio", &wr},
                   {"width_ratio_fit", &wr37}},
                  validity_header(p));
        if (p.cfg.svg) plot.add_series("Gamma=" + ratio_tag(gb), lt, wr);
    }
    if (p.cfg.svg) plot.write(p.out / "fig3.svg", p.hash);
}

void cmd_decoherence(Pipeline& p) {
    require_fit(p);
    if (!(p.kernel.lambda > 0.0))
        throw std::runtime_error("decoherence: Lambda = 0 (gamma = 0), g(T) curves undefined");
    EffectiveKernel k = p.kernel;
    k.gamma_big = 10.0;
    const int n = 601;
    std::vector<double> ts(n), lt(n), ge(n), ga(n);
    for (int i = 0; i < n; ++i) {
        lt[i] = 3.0 * i / (n - 1.0);
        ts[i] = lt[i] / k.lambda;
        ge[i] = decoherence_factor(ts[i], k);
        ga[i] = decoherence_factor_approx(ts[i], k);
    }
    write_csv(p.out / "fig4.csv", p.hash,
              {{"t", &ts}, {"lambda_t", &lt}, {"g_exact", &ge}, {"g_approx", &ga}},
              validity_header(p));
    if (p.cfg.svg) {
        SvgPlot plot("Decoherence factor g(T), Gamma=10", "Lambda T", "g");
        plot.add_series("exact", lt, ge);
        plot.add_series("approximate", lt, ga);
        plot.write(p.out / "fig4.svg", p.hash);
    }

    // density snapshot of a two-Gaussian state at omega0 T = 1
    GaussianPacket packet = GaussianPacket::coherent(p.params);
    packet.q0 = 14.0 * packet.sigma;
    const double t_snap = 1.0 / p.params.omega0;
    const double w = std::sqrt(packet_width(t_snap, k, packet));
    const double q_t =
        cat_state_density(std::vector<double>{0.0}, t_snap, k, p.params, packet).q_center;
    const double lo = std::min(0.0, q_t) - 8.0 * w;
    const double hi = std::max(0.0, q_t) + 8.0 * w;
    std::vector<double> rs(1001);
    for (std::size_t i = 0; i < rs.size(); ++i)
        rs[i] = lo + (hi - lo) * static_cast<double>(i) / (rs.size() - 1.0);
    const CatStateDensity cat = cat_state_density(rs, t_snap, k, p.params, packet);
    std::vector<double> total(rs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
        total[i] = cat.rho11[i] + cat.rho22[i] + cat.interference[i];
    write_csv(p.out / "cat_density.csv", p.hash,
              {{"r", &rs}, {"rho11", &cat.rho11}, {"rho22", &cat.rho22},
               {"interference", &cat.interference}, {"total", &total}},
              validity_header(p));
}

json rootset_json(const CharacteristicProblem& prob) {
    const RootSet rs = solve_characteristic(prob);
    json jr = json::array();
    json jres = json::array(), jcls = json::array();
    for (int i = 0; i < 4; ++i) {
        jr.push_back({rs.roots[i].real(), rs.roots[i].imag()});
        jres.push_back(rs.residual[i]);
        jcls.push_back(rs.kind[i] == RootClass::Transient ? "transient" : "secular");
    }
    const Classified cl = classify(rs, prob);
    const ReducedReport red = reduced_model_check(prob);
    return json{{"roots", jr},
                {"residuals", jres},
                {"classification", jcls},
                {"iterations", rs.iterations},
                {"estimates",
                 {{"lambda_est", cl.lambda_est},
                  {"omega0_est", cl.omega0_est},
                  {"alpha_est", cl.alpha_est},
                  {"omega_est", cl.omega_est}}},
                {"reduced_model",
                 {{"roots",
                   {{red.reduced[0].real(), red.reduced[0].imag()},
                    {red.reduced[1].real(), red.reduced[1].imag()}}},
                  {"max_rel_gap", red.max_rel_gap},
                  {"omega0_shift_rel", red.omega0_shift_rel},
                  {"frequency_ok", red.frequency_ok}}}};
}

void cmd_roots(Pipeline& p) {
    json j;
    j["_meta"] = {{"tool", kToolName}, {"version", kVersion}, {"config_hash", p.hash}};
    for (int sign : {-1, +1}) {
        CharacteristicProblem prob{p.cfg.roots_ratio_w0, p.cfg.roots_ratio_w, p.cfg.roots_drive,
                                   sign, 1.0};
        j["reference"][sign < 0 ? "r_e" : "y_e"] = rootset_json(prob);
    }
    j["reference"]["inputs"] = {{"ratio_w0", p.cfg.roots_ratio_w0},
                                      {"ratio_w", p.cfg.roots_ratio_w},
                                      {"drive", p.cfg.roots_drive}};
    if (fs::exists(p.out / "fit.json") || p.have_fit) {
        require_fit(p);
        for (int sign : {-1, +1}) {
            const auto prob = CharacteristicProblem::from_fit(p.fit, p.params, sign);
            j["from_fit"][sign < 0 ? "r_e" : "y_e"] = rootset_json(prob);
            if (sign < 0)
                j["from_fit"]["inputs"] = {{"ratio_w0", prob.ratio_w0},
                                           {"ratio_w", prob.ratio_w},
                                           {"drive", prob.drive},
                                           {"alpha", prob.alpha}};
        }
    }
    write_json_file(p.out / "roots.json", j);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(kToolName) +
                 " - chaotic-bath dissipation and decoherence pipeline"};
    app.set_version_flag("--version", std::string(kToolName) + " " + kVersion);

    RunConfig cfg;
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file (flags override its values)");
    app.add_option("--model.m", cfg.m, "oscillator mass");
    app.add_option("--model.omega0", cfg.omega0, "oscillator frequency (negative: alpha/8 from fit)");
    app.add_option("--model.gamma", cfg.gamma, "coupling constant (negative: derive from fit)");
    app.add_option("--model.hbar", cfg.hbar, "hbar");
    app.add_option("--model.e_c0", cfg.e_c0, "chaotic initial energy");
    app.add_option("--ensemble.n_traj", cfg.n_traj, "trajectories per energy-flow run");
    app.add_option("--ensemble.corr_n_traj", cfg.corr_n_traj, "trajectories for correlations");
    app.add_option("--ensemble.seed", cfg.seed, "master seed");
    app.add_option("--integrator.dt", cfg.dt, "time step");
    app.add_option("--integrator.corr_t_max", cfg.corr_t_max, "correlation window");
    app.add_option("--integrator.corr_stride", cfg.corr_stride, "correlation sample stride");
    app.add_option("--integrator.energy_t_max", cfg.energy_t_max,
                   "energy-flow window (0: 6/omega0)");
    app.add_option("--integrator.energy_stride", cfg.energy_stride, "energy sample stride");
    app.add_option("--ratios", cfg.ratios, "energy-flow ratios E_o(0)/E_c(0)");
    app.add_option("--roots.ratio_w0", cfg.roots_ratio_w0, "(omega0/alpha)^2");
    app.add_option("--roots.ratio_w", cfg.roots_ratio_w, "(omega/alpha)^2");
    app.add_option("--roots.drive", cfg.roots_drive, "gamma^2 A omega/(m alpha^4)");
    app.add_option("--output.dir", cfg.out_dir, "output directory (must exist)");
    app.add_flag("--output.svg,!--output.no-svg", cfg.svg, "emit SVG plots");

    app.require_subcommand(1);
    CLI::App* sub_corr = app.add_subcommand("correlations", "ensemble correlations and fits");
    CLI::App* sub_energy = app.add_subcommand("energy-flow", "coupled energy-flow ensembles");
    CLI::App* sub_gauss = app.add_subcommand("gaussian", "evolved packet width curves");
    CLI::App* sub_deco = app.add_subcommand("decoherence", "decoherence factor and cat state");
    CLI::App* sub_roots = app.add_subcommand("roots", "characteristic-polynomial roots");
    CLI::App* sub_all = app.add_subcommand("all", "full pipeline");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_path.empty()) {
            // flags were parsed into cfg; the file supplies values only for
            // options not given on the command line
            std::ifstream in(config_path);
            if (!in) throw ConfigError("config file not found: " + config_path);
            json j;
            try {
                in >> j;
            } catch (const json::exception& e) {
                throw ConfigError(std::string("config parse error: ") + e.what());
            }
            const RunConfig flags = cfg;
            cfg = RunConfig{};
            cfg.from_json(j);
            auto given = [&](const std::string& name) { return app.count(name) > 0; };
            if (given("--model.m")) cfg.m = flags.m;
            if (given("--model.omega0")) cfg.omega0 = flags.omega0;
            if (given("--model.gamma")) cfg.gamma = flags.gamma;
            if (given("--model.hbar")) cfg.hbar = flags.hbar;
            if (given("--model.e_c0")) cfg.e_c0 = flags.e_c0;
            if (given("--ensemble.n_traj")) cfg.n_traj = flags.n_traj;
            if (given("--ensemble.corr_n_traj")) cfg.corr_n_traj = flags.corr_n_traj;
            if (given("--ensemble.seed")) cfg.seed = flags.seed;
            if (given("--integrator.dt")) cfg.dt = flags.dt;
            if (given("--integrator.corr_t_max")) cfg.corr_t_max = flags.corr_t_max;
            if (given("--integrator.corr_stride")) cfg.corr_stride = flags.corr_stride;
            if (given("--integrator.energy_t_max")) cfg.energy_t_max = flags.energy_t_max;
            if (given("--integrator.energy_stride")) cfg.energy_stride = flags.energy_stride;
            if (given("--ratios")) cfg.ratios = flags.ratios;
            if (given("--roots.ratio_w0")) cfg.roots_ratio_w0 = flags.roots_ratio_w0;
            if (given("--roots.ratio_w")) cfg.roots_ratio_w = flags.roots_ratio_w;
            if (given("--roots.drive")) cfg.roots_drive = flags.roots_drive;
            if (given("--output.dir")) cfg.out_dir = flags.out_dir;
            if (given("--output.svg")) cfg.svg = flags.svg;
        }

        Pipeline p;
        p.cfg = cfg;
        // hash the physics config only, so identical runs written to
        // different locations still produce identical bytes
        json hashed = cfg.to_json();
        hashed.erase("output");
        p.hash = hash_hex(hashed.dump());
        p.out = cfg.out_dir;
        if (!fs::exists(p.out) || !fs::is_directory(p.out))
            throw ConfigError("output directory does not exist: " + cfg.out_dir);
        // resolve what we can before any fit exists
        p.fit = reference_fit();
        resolve_params(p);
        p.have_fit = false;

        if (sub_corr->parsed() || sub_all->parsed()) cmd_correlations(p);
        if (sub_energy->parsed() || sub_all->parsed()) cmd_energy_flow(p);
        if (sub_gauss->parsed() || sub_all->parsed()) cmd_gaussian(p);
        if (sub_deco->parsed() || sub_all->parsed()) cmd_decoherence(p);
        if (sub_roots->parsed() || sub_all->parsed()) cmd_roots(p);
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << kToolName << ": " << e.what() << "\n";
        return 2;
    } catch (const std::ios_base::failure& e) {
        std::cerr << kToolName << ": I/O error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << kToolName << ": " << e.what() << "\n";
        return 1;
    }
}
