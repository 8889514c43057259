#include "chaosbath/fit.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

namespace chaosbath {

namespace {

double model_value(double t, double a, double l, double nu, SinusoidKind kind) {
    const double env = a * std::exp(-l * t);
    return kind == SinusoidKind::Cosine ? env * std::cos(nu * t) : env * std::sin(nu * t);
}

double chi_sq(const TimeSeries& s, double a, double l, double nu, SinusoidKind kind) {
    double ss = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double r = s.values[i] - model_value(s.times[i], a, l, nu, kind);
        ss += r * r;
    }
    return ss;
}

// Peak of |sum_j y_j e^{-i nu t_j}| on a frequency grid, refined by a
// parabolic step on the squared magnitude.
double spectrum_peak(const TimeSeries& s) {
    const double dt = s.times[1] - s.times[0];
    const double nu_max = 0.95 * M_PI / dt;
    const int n_scan = 2048;
    double best_nu = nu_max / 2, best_mag = -1.0;
    std::vector<double> mags(n_scan);
    for (int k = 1; k < n_scan; ++k) {
        const double nu = nu_max * k / n_scan;
        std::complex<double> acc = 0.0;
        for (std::size_t j = 0; j < s.size(); ++j)
            acc += s.values[j] * std::polar(1.0, -nu * s.times[j]);
        mags[k] = std::norm(acc);
        if (mags[k] > best_mag) {
            best_mag = mags[k];
            best_nu = nu;
        }
    }
    const int k0 = static_cast<int>(best_nu / nu_max * n_scan + 0.5);
    if (k0 >= 2 && k0 < n_scan - 1) {
        const double ym = mags[k0 - 1], y0 = mags[k0], yp = mags[k0 + 1];
        const double den = ym - 2 * y0 + yp;
        if (den < 0.0) best_nu += 0.5 * (ym - yp) / den * (nu_max / n_scan);
    }
    return best_nu;
}

// ln|peak| vs t regression over local maxima of |y| gives decay and amplitude.
void envelope_guess(const TimeSeries& s, double& a0, double& l0) {
    const double ymax = *std::max_element(s.values.begin(), s.values.end(),
                                          [](double u, double v) {
                                              return std::abs(u) < std::abs(v);
                                          });
    const double floor = 1e-3 * std::abs(ymax);
    double st = 0, sy = 0, stt = 0, sty = 0;
    int n = 0;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        const double y = std::abs(s.values[i]);
        if (y > std::abs(s.values[i - 1]) && y >= std::abs(s.values[i + 1]) && y > floor) {
            const double ly = std::log(y);
            st += s.times[i];
            sy += ly;
            stt += s.times[i] * s.times[i];
            sty += s.times[i] * ly;
            ++n;
        }
    }
    if (n >= 2 && stt * n - st * st > 0) {
        const double slope = (n * sty - st * sy) / (n * stt - st * st);
        l0 = std::max(1e-6, -slope);
        a0 = std::exp((sy - slope * st) / n);
    } else {
        l0 = 2.0 / s.times.back();
        a0 = std::abs(ymax);
    }
}

bool solve3(double m[3][3], double b[3], double out[3]) {
    int idx[3] = {0, 1, 2};
    for (int c = 0; c < 3; ++c) {
        int piv = c;
        for (int r = c + 1; r < 3; ++r)
            if (std::abs(m[idx[r]][c]) > std::abs(m[idx[piv]][c])) piv = r;
        std::swap(idx[c], idx[piv]);
        if (std::abs(m[idx[c]][c]) < 1e-300) return false;
        for (int r = c + 1; r < 3; ++r) {
            const double f = m[idx[r]][c] / m[idx[c]][c];
            for (int k = c; k < 3; ++k) m[idx[r]][k] -= f * m[idx[c]][k];
            b[idx[r]] -= f * b[idx[c]];
        }
    }
    for (int c = 2; c >= 0; --c) {
        double v = b[idx[c]];
        for (int k = c + 1; k < 3; ++k) v -= m[idx[c]][k] * out[k];
        out[c] = v / m[idx[c]][c];
    }
    return true;
}

}  // namespace

SinusoidFit fit_damped_sinusoid(const TimeSeries& series, SinusoidKind kind) {
    series.validate();
    if (series.size() < 50) throw FitError("fit_damped_sinusoid: need at least 50 points");
    double span = 0.0;
    for (double v : series.values) span = std::max(span, std::abs(v));
    if (!(span > 0.0)) throw FitError("fit_damped_sinusoid: degenerate flat series");

    double nu = spectrum_peak(series);
    double a, l;
    envelope_guess(series, a, l);
    if (kind == SinusoidKind::Sine && series.values.front() != 0.0 && a < 1e-12) a = span;

    const std::size_t n = series.size();
    double chi = chi_sq(series, a, l, nu, kind);
    double mu = 1e-3;
    int it = 0;
    int stalled = 0;
    for (; it < 200 && stalled < 3; ++it) {
        double jtj[3][3] = {{0}}, jtr[3] = {0, 0, 0};
        for (std::size_t i = 0; i < n; ++i) {
            const double t = series.times[i];
            const double env = std::exp(-l * t);
            const double c = std::cos(nu * t), s = std::sin(nu * t);
            const double trig = kind == SinusoidKind::Cosine ? c : s;
            const double dtrig = kind == SinusoidKind::Cosine ? -t * s : t * c;
            const double f = a * env * trig;
            const double j0 = env * trig;       // d/da
            const double j1 = -t * f;           // d/dl
            const double j2 = a * env * dtrig;  // d/dnu
            const double r = series.values[i] - f;
            const double jrow[3] = {j0, j1, j2};
            for (int p = 0; p < 3; ++p) {
                jtr[p] += jrow[p] * r;
                for (int q = p; q < 3; ++q) jtj[p][q] += jrow[p] * jrow[q];
            }
        }
        jtj[1][0] = jtj[0][1];
        jtj[2][0] = jtj[0][2];
        jtj[2][1] = jtj[1][2];

        bool improved = false;
        for (int attempt = 0; attempt < 25; ++attempt) {
            double m[3][3], b[3] = {jtr[0], jtr[1], jtr[2]}, delta[3];
            for (int p = 0; p < 3; ++p)
                for (int q = 0; q < 3; ++q)
                    m[p][q] = jtj[p][q] + (p == q ? mu * jtj[p][p] : 0.0);
            if (!solve3(m, b, delta)) {
                mu *= 4.0;
                continue;
            }
            const double a2 = a + delta[0], l2 = l + delta[1], nu2 = nu + delta[2];
            const double chi2 = chi_sq(series, a2, l2, nu2, kind);
            if (chi2 <= chi) {
                if (chi - chi2 <= 1e-14 * (chi + 1e-300)) ++stalled;
                else stalled = 0;
                a = a2;
                l = l2;
                nu = nu2;
                chi = chi2;
                mu = std::max(mu / 3.0, 1e-12);
                improved = true;
                break;
            }
            mu *= 4.0;
        }
        if (!improved) ++stalled;
    }
    if (it >= 200 && stalled < 3)
        throw FitError("fit_damped_sinusoid: no convergence after 200 iterations");

    // canonicalize: positive amplitude and frequency
    if (nu < 0.0) {
        nu = -nu;
        if (kind == SinusoidKind::Sine) a = -a;
    }
    if (!(l > 0.0)) throw FitError("fit_damped_sinusoid: nonpositive decay");
    if (series.times.back() * l < 2.0)
        throw FitError("fit_damped_sinusoid: series spans fewer than 2 decay times");

    SinusoidFit out;
    out.amplitude = a;
    out.decay = l;
    out.frequency = nu;
    out.chi2 = chi / static_cast<double>(n);
    out.iterations = it;
    return out;
}

}  // namespace chaosbath
