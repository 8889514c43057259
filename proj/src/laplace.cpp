#include "chaosbath/laplace.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace chaosbath {

void CharacteristicProblem::validate() const {
    if (!(ratio_w0 > 0.0 && ratio_w > 0.0))
        throw std::invalid_argument("CharacteristicProblem: ratios must be > 0");
    if (!(drive >= 0.0))
        throw std::invalid_argument("CharacteristicProblem: drive must be >= 0");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("CharacteristicProblem: sign must be +1 or -1");
    if (!(alpha > 0.0)) throw std::invalid_argument("CharacteristicProblem: alpha must be > 0");
}

CharacteristicProblem CharacteristicProblem::from_fit(const CorrelationFit& fit,
                                                      const ModelParams& params, int sign) {
    fit.validate();
    params.validate();
    const double a = fit.alpha;
    const double a_resp = 2.0 * fit.mu / params.e_c0;
    CharacteristicProblem p;
    p.ratio_w0 = params.omega0 * params.omega0 / (a * a);
    p.ratio_w = fit.omega * fit.omega / (a * a);
    p.drive = params.gamma * params.gamma * a_resp * fit.omega / (params.m * a * a * a * a);
    p.sign = sign;
    p.alpha = a;
    p.validate();
    return p;
}

namespace {

using cplx = std::complex<double>;

// monic quartic coefficients, constant term first
std::array<double, 5> quartic_coeffs(const CharacteristicProblem& p) {
    const double c = p.ratio_w0, d = p.ratio_w;
    return {c * (1.0 + d) + p.sign * p.drive, 2.0 * c, 1.0 + c + d, 2.0, 1.0};
}

cplx eval_poly(const std::array<double, 5>& a, cplx x) {
    cplx v = a[4];
    for (int k = 3; k >= 0; --k) v = v * x + a[k];
    return v;
}

}  // namespace

RootSet solve_characteristic(const CharacteristicProblem& problem) {
    problem.validate();
    const auto a = quartic_coeffs(problem);

    if (problem.drive == 0.0) {
        // factored case: (x^2 + c)((x+1)^2 + d) = 0
        RootSet rs;
        const double wt = std::sqrt(problem.ratio_w), ws = std::sqrt(problem.ratio_w0);
        rs.roots = {cplx(-1.0, wt), cplx(-1.0, -wt), cplx(0.0, ws), cplx(0.0, -ws)};
        for (int i = 0; i < 4; ++i) {
            rs.kind[i] = i < 2 ? RootClass::Transient : RootClass::Secular;
            rs.residual[i] = std::abs(eval_poly(a, rs.roots[i]));
        }
        return rs;
    }

    std::array<cplx, 4> z;
    const cplx b(0.4, 0.9);
    cplx pw = b;
    for (int i = 0; i < 4; ++i) {
        z[i] = pw;
        pw *= b;
    }

    int it = 0;
    for (; it < 500; ++it) {
        double worst = 0.0;
        for (int i = 0; i < 4; ++i) {
            cplx den = 1.0;
            for (int j = 0; j < 4; ++j)
                if (j != i) den *= z[i] - z[j];
            const cplx dz = eval_poly(a, z[i]) / den;
            z[i] -= dz;
            worst = std::max(worst, std::abs(dz));
        }
        if (worst < 1e-15) break;
    }
    // Newton polish
    for (int i = 0; i < 4; ++i) {
        for (int k = 0; k < 3; ++k) {
            cplx d = 4.0 * a[4];
            for (int c = 3; c >= 1; --c) d = d * z[i] + static_cast<double>(c) * a[c];
            if (std::abs(d) < 1e-300) break;
            z[i] -= eval_poly(a, z[i]) / d;
        }
    }

    // conjugate symmetrization: pair each upper-half root with the nearest
    // lower-half one and average
    std::array<cplx, 4> paired;
    {
        std::vector<cplx> up, down;
        for (const cplx& r : z) (r.imag() >= 0.0 ? up : down).push_back(r);
        if (up.size() != 2 || down.size() != 2)
            throw std::runtime_error("solve_characteristic: roots did not form conjugate pairs");
        if (std::abs(up[0] - std::conj(down[0])) > std::abs(up[0] - std::conj(down[1])))
            std::swap(down[0], down[1]);
        for (int i = 0; i < 2; ++i) {
            const cplx avg = 0.5 * (up[i] + std::conj(down[i]));
            paired[2 * i] = avg;
            paired[2 * i + 1] = std::conj(avg);
        }
    }
    // order: transient pair (larger |Re|) first
    if (std::abs(paired[0].real()) < std::abs(paired[2].real())) {
        std::swap(paired[0], paired[2]);
        std::swap(paired[1], paired[3]);
    }

    RootSet rs;
    rs.iterations = it;
    for (int i = 0; i < 4; ++i) {
        rs.roots[i] = paired[i];
        rs.kind[i] = i < 2 ? RootClass::Transient : RootClass::Secular;
        rs.residual[i] = std::abs(eval_poly(a, paired[i]));
        if (!(rs.residual[i] < 1e-12))
            throw std::runtime_error("solve_characteristic: residual target 1e-12 not met");
    }
    return rs;
}

Classified classify(const RootSet& roots, const CharacteristicProblem& problem) {
    problem.validate();
    const double re_t = std::abs(roots.roots[0].real());
    const double re_s = std::abs(roots.roots[2].real());
    if (!(re_t >= 10.0 * re_s))
        throw std::runtime_error("classify: transient/secular real parts not separated by 10x");
    Classified c;
    c.alpha_est = re_t * problem.alpha;
    c.omega_est = std::abs(roots.roots[0].imag()) * problem.alpha;
    c.lambda_est = re_s * problem.alpha;
    c.omega0_est = std::abs(roots.roots[2].imag()) * problem.alpha;
    return c;
}

ReducedReport reduced_model_check(const CharacteristicProblem& problem) {
    problem.validate();
    const double shift = problem.drive / (1.0 + problem.ratio_w);  // gamma^2 F(0)/(m alpha^2)
    const double lam_x = problem.drive / ((1.0 + problem.ratio_w) * (1.0 + problem.ratio_w));
    // r_e branch (sign -1): W^2 = Omega0^2 = w0^2 - gamma^2 F(0)/m, roots -Lam +- iW;
    // y_e branch (sign +1): W^2 = chi0^2 = w0^2 + gamma^2 F(0)/m, roots +Lam +- iW.
    const double w_sq = problem.ratio_w0 + problem.sign * shift;
    if (!(w_sq > lam_x * lam_x))
        throw std::runtime_error("reduced_model_check: overdamped reduced equation");
    const double w_red = std::sqrt(w_sq - lam_x * lam_x);

    ReducedReport rep;
    rep.reduced[0] = {static_cast<double>(problem.sign) * lam_x, w_red};
    rep.reduced[1] = std::conj(rep.reduced[0]);
    const RootSet rs = solve_characteristic(problem);
    rep.secular[0] = rs.roots[2].imag() >= 0.0 ? rs.roots[2] : rs.roots[3];
    rep.secular[1] = std::conj(rep.secular[0]);
    rep.max_rel_gap = std::abs(rep.reduced[0] - rep.secular[0]) / std::abs(rep.secular[0]);
    rep.omega0_shift_rel = shift / problem.ratio_w0;
    rep.frequency_ok = rep.omega0_shift_rel < 0.1;
    return rep;
}

}  // namespace chaosbath
