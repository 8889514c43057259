#pragma once

// Coupled system: harmonic oscillator (z, p_z) + Nelson system (x, y, p_x, p_y)
// with bilinear interaction gamma*x*z. All quantities in the dimensionless
// units of the model; energies are additive, H = H_o + H_c + gamma*x*z.

#include <array>
#include <cmath>
#include <stdexcept>

namespace chaosbath {

struct PhasePoint {
    double z = 0.0;
    double p_z = 0.0;
    double x = 0.0;
    double y = 0.0;
    double p_x = 0.0;
    double p_y = 0.0;

    bool finite() const {
        return std::isfinite(z) && std::isfinite(p_z) && std::isfinite(x) &&
               std::isfinite(y) && std::isfinite(p_x) && std::isfinite(p_y);
    }
};

struct ModelParams {
    double m = 1.0;
    double omega0 = 0.005225;     // alpha/8 with the reference fit alpha
    double gamma = 4.6555199021914210e-4;
    double hbar = 1e-4;
    double e_c0 = 0.38;
    double e_o0 = 0.38;

    void validate() const {
        if (!(m > 0.0)) throw std::invalid_argument("ModelParams: m must be > 0");
        if (!(omega0 > 0.0)) throw std::invalid_argument("ModelParams: omega0 must be > 0");
        if (!(hbar > 0.0)) throw std::invalid_argument("ModelParams: hbar must be > 0");
        if (!(e_c0 > 0.0)) throw std::invalid_argument("ModelParams: e_c0 must be > 0");
        if (!(e_o0 >= 0.0)) throw std::invalid_argument("ModelParams: e_o0 must be >= 0");
    }
};

inline double nelson_energy(double x, double y, double p_x, double p_y) {
    const double u = y - 0.5 * x * x;
    return 0.5 * (p_x * p_x + p_y * p_y) + u * u + 0.05 * x * x;
}

inline double nelson_energy(const PhasePoint& s) {
    return nelson_energy(s.x, s.y, s.p_x, s.p_y);
}

inline double oscillator_energy(double z, double p_z, const ModelParams& p) {
    return 0.5 * p_z * p_z / p.m + 0.5 * p.m * p.omega0 * p.omega0 * z * z;
}

inline double oscillator_energy(const PhasePoint& s, const ModelParams& p) {
    return oscillator_energy(s.z, s.p_z, p);
}

// E_or = E_o - (gamma^2/2) F(0) z^2; f0 is the memory-kernel value F(0).
inline double renormalized_energy(double z, double p_z, const ModelParams& p, double f0) {
    return oscillator_energy(z, p_z, p) - 0.5 * p.gamma * p.gamma * f0 * z * z;
}

inline double total_energy(const PhasePoint& s, const ModelParams& p) {
    return oscillator_energy(s, p) + nelson_energy(s) + p.gamma * s.x * s.z;
}

// (dH/dz, dH/dp_z, dH/dx, dH/dy, dH/dp_x, dH/dp_y)
inline std::array<double, 6> gradient(const PhasePoint& s, const ModelParams& p) {
    const double u = s.y - 0.5 * s.x * s.x;
    return {p.m * p.omega0 * p.omega0 * s.z + p.gamma * s.x,
            s.p_z / p.m,
            -2.0 * u * s.x + 0.1 * s.x + p.gamma * s.z,
            2.0 * u,
            s.p_x,
            s.p_y};
}

}  // namespace chaosbath
