#pragma once

// Microcanonical sampling on the chaotic energy surface and deterministic
// parallel ensemble propagation. Reduction order is fixed (per-trajectory
// accumulation in index order inside fixed-size blocks, pairwise tree over
// blocks), so results are bitwise identical for a given seed at any worker
// count.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chaosbath/model.hpp"
#include "chaosbath/symplectic.hpp"
#include "chaosbath/timeseries.hpp"

namespace chaosbath {

struct EnsembleSpec {
    std::int64_t n_traj = 1;
    std::uint64_t seed = 1;
    double e_c0 = 0.38;
    bool coupled = true;

    void validate() const {
        if (n_traj < 1) throw std::invalid_argument("EnsembleSpec: n_traj must be >= 1");
        if (!(e_c0 > 0.0)) throw std::invalid_argument("EnsembleSpec: e_c0 must be > 0");
    }
};

struct ChaoticInit {
    double x, y, p_x, p_y;
};

// Draws one microcanonical sample for stream `index` of `seed`.
ChaoticInit sample_microcanonical_one(double e_c0, std::uint64_t seed, std::uint64_t index);

std::vector<ChaoticInit> sample_microcanonical(double e_c0, std::int64_t n_traj,
                                               std::uint64_t seed);

struct Observable {
    std::string name;
    std::function<double(const PhasePoint&)> fn;
};

// Resolves the worker count: explicit argument, else CHAOSBATH_THREADS,
// else hardware concurrency.
int resolve_workers(int n_workers);

// Oscillator initial condition fixed to z=0, p_z=sqrt(2 m e_o0); chaotic
// initial conditions microcanonical at spec.e_c0. With spec.coupled=false
// only the Nelson subsystem is integrated (gamma plays no role).
std::map<std::string, TimeSeries> propagate_ensemble(const EnsembleSpec& spec,
                                                     const ModelParams& params,
                                                     const IntegratorConfig& cfg,
                                                     const std::vector<Observable>& observables,
                                                     int n_workers = 0);

// (<x(0)x(t)>_e, <p_x(0)x(t)>_e) for the isolated chaotic system.
std::pair<TimeSeries, TimeSeries> correlation_pair(const EnsembleSpec& spec,
                                                   const ModelParams& params,
                                                   const IntegratorConfig& cfg,
                                                   int n_workers = 0);

}  // namespace chaosbath
