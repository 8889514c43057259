#pragma once

// Roots of the quartic characteristic polynomial of the extremal-path
// equations, [x^2 + (w0/a)^2][(x+1)^2 + (w/a)^2] + sign*drive = 0 in the
// dimensionless variable x = s/alpha, plus the two-time-scale
// classification and the damped-oscillator reduction check.

#include <array>
#include <complex>

#include "chaosbath/model.hpp"
#include "chaosbath/response.hpp"

namespace chaosbath {

struct CharacteristicProblem {
    double ratio_w0;   // (omega0/alpha)^2
    double ratio_w;    // (omega/alpha)^2
    double drive;      // gamma^2 A omega/(m alpha^4), A = 2 mu/E_c(0)
    int sign;          // +1 for the y_e branch, -1 for the r_e branch
    double alpha = 1.0;  // time-scale factor for classify()

    void validate() const;
    static CharacteristicProblem from_fit(const CorrelationFit& fit, const ModelParams& params,
                                          int sign);
};

enum class RootClass { Transient, Secular };

struct RootSet {
    std::array<std::complex<double>, 4> roots;  // conjugate pairs, secular pair last
    std::array<RootClass, 4> kind;
    std::array<double, 4> residual;
    int iterations = 0;
};

// Durand-Kerner from the fixed starting points (0.4+0.9i)^k, residual
// target 1e-12, conjugate pairing enforced by symmetrization.
RootSet solve_characteristic(const CharacteristicProblem& problem);

struct Classified {
    double lambda_est;  // |Re| of the secular pair, times alpha
    double omega0_est;  // |Im| of the secular pair, times alpha
    double alpha_est;   // |Re| of the transient pair, times alpha
    double omega_est;   // |Im| of the transient pair, times alpha
};

// Requires the transient/secular |Re| separation to be at least 10x.
Classified classify(const RootSet& roots, const CharacteristicProblem& problem);

struct ReducedReport {
    std::array<std::complex<double>, 2> reduced;  // roots of r'' +- 2 Lambda r' + W^2 r = 0
    std::array<std::complex<double>, 2> secular;  // matching quartic pair
    double max_rel_gap;
    double omega0_shift_rel;  // gamma^2 F(0)/(m omega0^2) in problem units
    bool frequency_ok;        // shift below the documented 0.1 tolerance
};

ReducedReport reduced_model_check(const CharacteristicProblem& problem);

}  // namespace chaosbath
