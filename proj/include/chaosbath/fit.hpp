#pragma once

// Damped-sinusoid least squares: a*exp(-decay*t)*cos(freq*t) or *sin(freq*t),
// Levenberg-Marquardt with analytic Jacobian. Initial guesses come from the
// discrete-spectrum peak (frequency) and log-envelope regression (amplitude,
// decay).

#include <stdexcept>
#include <string>

#include "chaosbath/timeseries.hpp"

namespace chaosbath {

enum class SinusoidKind { Cosine, Sine };

struct SinusoidFit {
    double amplitude = 0.0;
    double decay = 0.0;
    double frequency = 0.0;
    double chi2 = 0.0;  // sum of squared residuals per point
    int iterations = 0;
};

class FitError : public std::runtime_error {
  public:
    explicit FitError(const std::string& what) : std::runtime_error(what) {}
};

SinusoidFit fit_damped_sinusoid(const TimeSeries& series, SinusoidKind kind);

}  // namespace chaosbath
