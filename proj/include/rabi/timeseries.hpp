// timeseries.hpp - Sampled observable records, the universal solver output.

#pragma once

#include <vector>

#include "rabi/ode.hpp"

namespace rabi {

template <class Record>
struct TimeSeries {
    std::vector<double> t;
    std::vector<Record> rec;
    ode::StepStats stats;

    size_t size() const { return t.size(); }
};

}  // namespace rabi
