#include "chaosbath/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "chaosbath/rng.hpp"

namespace chaosbath {

namespace {

constexpr std::int64_t kBlock = 128;  // fixed reduction block, independent of workers

struct Accumulator {
    std::vector<double> sum;
    std::vector<double> sumsq;
    explicit Accumulator(std::size_t n) : sum(n, 0.0), sumsq(n, 0.0) {}
    void add(const std::vector<double>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            sum[i] += row[i];
            sumsq[i] += row[i] * row[i];
        }
    }
    void merge(const Accumulator& o) {
        for (std::size_t i = 0; i < sum.size(); ++i) {
            sum[i] += o.sum[i];
            sumsq[i] += o.sumsq[i];
        }
    }
};

// Pairwise tree over block index; shape depends only on the block count.
Accumulator combine_blocks(std::vector<Accumulator>& blocks, std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) return std::move(blocks[lo]);
    const std::size_t mid = lo + (hi - lo) / 2;
    Accumulator left = combine_blocks(blocks, lo, mid);
    Accumulator right = combine_blocks(blocks, mid, hi);
    left.merge(right);
    return left;
}

TimeSeries finish(const std::vector<double>& times, const Accumulator& acc, std::size_t offset,
                  std::size_t n_points, std::int64_t n) {
    TimeSeries ts;
    ts.times = times;
    ts.values.resize(n_points);
    ts.stderrs.resize(n_points);
    const double dn = static_cast<double>(n);
    for (std::size_t i = 0; i < n_points; ++i) {
        const double s = acc.sum[offset + i];
        const double s2 = acc.sumsq[offset + i];
        const double mean = s / dn;
        if (n > 1) {
            double var = (s2 - s * s / dn) / (dn - 1.0);
            if (var < 0.0) var = 0.0;  // rounding
            ts.stderrs[i] = std::sqrt(var / dn);
        } else {
            ts.stderrs[i] = std::numeric_limits<double>::infinity();
        }
        ts.values[i] = mean;
    }
    return ts;
}

// Runs fn(block_index, traj_begin, traj_end) over all blocks on `workers`
// threads; blocks are claimed dynamically but own disjoint output slots.
template <typename Fn>
void parallel_blocks(std::int64_t n_traj, int workers, Fn&& fn) {
    const std::int64_t n_blocks = (n_traj + kBlock - 1) / kBlock;
    std::atomic<std::int64_t> next{0};
    std::atomic<bool> failed{false};
    auto body = [&] {
        for (;;) {
            const std::int64_t b = next.fetch_add(1);
            if (b >= n_blocks || failed.load()) return;
            try {
                fn(b, b * kBlock, std::min(n_traj, (b + 1) * kBlock));
            } catch (...) {
                failed.store(true);
                throw;
            }
        }
    };
    if (workers <= 1) {
        body();
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex err_mtx;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            try {
                body();
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mtx);
                if (!err) err = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace

ChaoticInit sample_microcanonical_one(double e_c0, std::uint64_t seed, std::uint64_t index) {
    if (!(e_c0 > 0.0)) throw std::invalid_argument("sample_microcanonical: e_c0 must be > 0");
    CounterRng rng(seed, index);
    const double x_max = std::sqrt(20.0 * e_c0);
    const double u_max = std::sqrt(e_c0);
    double x = 0.0, u = 0.0;
    bool accepted = false;
    // Uniform on the ellipse {u^2 + 0.05 x^2 <= E} in sheared coordinates
    // (x, u = y - x^2/2); acceptance probability is pi/4.
    for (int tries = 0; tries < 10000; ++tries) {
        x = rng.next_symmetric() * x_max;
        u = rng.next_symmetric() * u_max;
        if (u * u + 0.05 * x * x <= e_c0) {
            accepted = true;
            break;
        }
    }
    if (!accepted) throw std::runtime_error("sample_microcanonical: rejection failed");
    const double v = u * u + 0.05 * x * x;
    const double p_mag = std::sqrt(2.0 * (e_c0 - v));
    const double theta = 2.0 * M_PI * rng.next_double();
    return {x, u + 0.5 * x * x, p_mag * std::cos(theta), p_mag * std::sin(theta)};
}

std::vector<ChaoticInit> sample_microcanonical(double e_c0, std::int64_t n_traj,
                                               std::uint64_t seed) {
    if (n_traj < 1) throw std::invalid_argument("sample_microcanonical: n_traj must be >= 1");
    std::vector<ChaoticInit> out;
    out.reserve(static_cast<std::size_t>(n_traj));
    for (std::int64_t i = 0; i < n_traj; ++i)
        out.push_back(sample_microcanonical_one(e_c0, seed, static_cast<std::uint64_t>(i)));
    return out;
}

int resolve_workers(int n_workers) {
    if (n_workers > 0) return n_workers;
    if (const char* env = std::getenv("CHAOSBATH_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

std::map<std::string, TimeSeries> propagate_ensemble(const EnsembleSpec& spec,
                                                     const ModelParams& params,
                                                     const IntegratorConfig& cfg,
                                                     const std::vector<Observable>& observables,
                                                     int n_workers) {
    spec.validate();
    params.validate();
    cfg.validate();
    if (observables.empty())
        throw std::invalid_argument("propagate_ensemble: empty observable list");

    const std::size_t n_points = static_cast<std::size_t>(cfg.n_steps / cfg.sample_stride) + 1;
    const std::size_t n_obs = observables.size();
    std::vector<double> times(n_points);
    for (std::size_t i = 0; i < n_points; ++i)
        times[i] = static_cast<double>(i) * cfg.dt * static_cast<double>(cfg.sample_stride);

    const std::int64_t n_blocks = (spec.n_traj + kBlock - 1) / kBlock;
    std::vector<Accumulator> blocks(static_cast<std::size_t>(n_blocks),
                                    Accumulator(n_obs * n_points));
    const double pz0 = std::sqrt(2.0 * params.m * params.e_o0);

    parallel_blocks(spec.n_traj, resolve_workers(n_workers),
                    [&](std::int64_t b, std::int64_t lo, std::int64_t hi) {
        std::vector<double> row(n_obs * n_points);
        for (std::int64_t i = lo; i < hi; ++i) {
            const ChaoticInit ci =
                sample_microcanonical_one(spec.e_c0, spec.seed, static_cast<std::uint64_t>(i));
            PhasePoint s{0.0, pz0, ci.x, ci.y, ci.p_x, ci.p_y};
            std::size_t k = 0;
            auto record = [&](const PhasePoint& st) {
                for (std::size_t o = 0; o < n_obs; ++o)
                    row[o * n_points + k] = observables[o].fn(st);
                ++k;
            };
            record(s);
            for (std::int64_t step_i = 1; step_i <= cfg.n_steps; ++step_i) {
                if (spec.coupled)
                    detail::step_unchecked(s, params, cfg.dt);
                else
                    detail::step_chaotic_unchecked(s, cfg.dt);
                if (step_i % cfg.sample_stride == 0) {
                    if (!s.finite())
                        throw std::runtime_error("propagate_ensemble: non-finite state");
                    record(s);
                }
            }
            blocks[static_cast<std::size_t>(b)].add(row);
        }
    });

    Accumulator total = combine_blocks(blocks, 0, static_cast<std::size_t>(n_blocks));
    std::map<std::string, TimeSeries> out;
    for (std::size_t o = 0; o < n_obs; ++o)
        out[observables[o].name] = finish(times, total, o * n_points, n_points, spec.n_traj);
    return out;
}

std::pair<TimeSeries, TimeSeries> correlation_pair(const EnsembleSpec& spec,
                                                   const ModelParams& params,
                                                   const IntegratorConfig& cfg, int n_workers) {
    if (spec.coupled)
        throw std::invalid_argument("correlation_pair: requires spec.coupled == false");
    (void)params;  // the isolated chaotic dynamics carries no model parameters
    spec.validate();
    cfg.validate();

    const std::size_t n_points = static_cast<std::size_t>(cfg.n_steps / cfg.sample_stride) + 1;
    std::vector<double> times(n_points);
    for (std::size_t i = 0; i < n_points; ++i)
        times[i] = static_cast<double>(i) * cfg.dt * static_cast<double>(cfg.sample_stride);

    const std::int64_t n_blocks = (spec.n_traj + kBlock - 1) / kBlock;
    std::vector<Accumulator> blocks(static_cast<std::size_t>(n_blocks),
                                    Accumulator(2 * n_points));

    parallel_blocks(spec.n_traj, resolve_workers(n_workers),
                    [&](std::int64_t b, std::int64_t lo, std::int64_t hi) {
        std::vector<double> row(2 * n_points);
        for (std::int64_t i = lo; i < hi; ++i) {
            const ChaoticInit ci =
                sample_microcanonical_one(spec.e_c0, spec.seed, static_cast<std::uint64_t>(i));
            PhasePoint s{0.0, 0.0, ci.x, ci.y, ci.p_x, ci.p_y};
            const double x0 = ci.x, px0 = ci.p_x;
            std::size_t k = 0;
            row[0] = x0 * s.x;
            row[n_points] = px0 * s.x;
            ++k;
            for (std::int64_t step_i = 1; step_i <= cfg.n_steps; ++step_i) {
                detail::step_chaotic_unchecked(s, cfg.dt);
                if (step_i % cfg.sample_stride == 0) {
                    if (!s.finite())
                        throw std::runtime_error("correlation_pair: non-finite state");
                    row[k] = x0 * s.x;
                    row[n_points + k] = px0 * s.x;
                    ++k;
                }
            }
            blocks[static_cast<std::size_t>(b)].add(row);
        }
    });

    Accumulator total = combine_blocks(blocks, 0, static_cast<std::size_t>(n_blocks));
    return {finish(times, total, 0, n_points, spec.n_traj),
            finish(times, total, n_points, n_points, spec.n_traj)};
}

}  // namespace chaosbath
