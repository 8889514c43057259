#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace chaosbath {

// Ensemble-averaged observable on a time grid: mean and standard error
// per point. times strictly increasing, stderr >= 0.
struct TimeSeries {
    std::vector<double> times;
    std::vector<double> values;
    std::vector<double> stderrs;

    std::size_t size() const { return times.size(); }

    void validate() const {
        if (times.size() != values.size() || times.size() != stderrs.size())
            throw std::invalid_argument("TimeSeries: length mismatch");
        for (std::size_t i = 1; i < times.size(); ++i)
            if (!(times[i] > times[i - 1]))
                throw std::invalid_argument("TimeSeries: times must be strictly increasing");
        for (double e : stderrs)
            if (!(e >= 0.0)) throw std::invalid_argument("TimeSeries: stderr must be >= 0");
    }
};

}  // namespace chaosbath
