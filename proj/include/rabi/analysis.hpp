// analysis.hpp - Post-processing of time series: envelope extraction,
// collapse-time estimation, and photon-distribution deltas.

#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace rabi::analysis {

struct AnalysisInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Successive local maxima of a scalar series.
struct Envelope {
    std::vector<double> times;
    std::vector<double> values;

    size_t size() const { return times.size(); }
};

/// Returns all interior local maxima whose prominence exceeds
/// `min_prominence`. Prominence is measured as the drop from the peak to
/// the higher of the two lowest valleys separating it from taller
/// neighbors (the usual topographic definition restricted to the series).
/// Endpoints are never reported. Prominence filtering (rather than strict
/// three-point maxima) suppresses the fast small-amplitude ripples that
/// the counter-rotating terms superimpose on the slow Rabi cycle.
inline Envelope extract_envelope(std::span<const double> t,
                                 std::span<const double> v,
                                 double min_prominence = 1e-3) {
    if (t.size() != v.size())
        throw AnalysisInputError("extract_envelope: size mismatch");
    const long n = static_cast<long>(v.size());
    if (n < 3)
        throw AnalysisInputError("extract_envelope: need at least 3 samples");

    Envelope env;
    for (long i = 1; i + 1 < n; ++i) {
        // candidate peak: strictly above the previous distinct value and
        // at least as high as the next (plateaus report their left edge)
        if (!(v[i] > v[i - 1] && v[i] >= v[i + 1])) continue;

        // walk left and right to the nearest strictly higher sample,
        // tracking the lowest valley on each side
        double left_min = v[i], right_min = v[i];
        bool higher_left = false, higher_right = false;
        for (long j = i - 1; j >= 0; --j) {
            if (v[j] > v[i]) {
                higher_left = true;
                break;
            }
            left_min = std::min(left_min, v[j]);
        }
        for (long j = i + 1; j < n; ++j) {
            if (v[j] > v[i]) {
                higher_right = true;
                break;
            }
            right_min = std::min(right_min, v[j]);
        }
        double base;
        if (higher_left && higher_right)
            base = std::max(left_min, right_min);
        else if (higher_left)
            base = right_min;
        else if (higher_right)
            base = left_min;
        else
            base = std::min(left_min, right_min);  // global maximum
        if (v[i] - base > min_prominence) {
            env.times.push_back(t[i]);
            env.values.push_back(v[i]);
        }
    }
    return env;
}

/// First time the envelope crosses below `threshold`, by linear
/// interpolation between the bracketing envelope points. Returns nullopt
/// when the envelope never drops below the threshold (not collapsed).
inline std::optional<double> collapse_time(const Envelope& env,
                                           double threshold) {
    if (env.size() == 0)
        throw AnalysisInputError("collapse_time: empty envelope");
    if (env.values.front() < threshold) return env.times.front();
    for (size_t i = 1; i < env.size(); ++i) {
        const double v0 = env.values[i - 1], v1 = env.values[i];
        if (v1 < threshold) {
            const double frac = (v0 - threshold) / (v0 - v1);
            return env.times[i - 1] + frac * (env.times[i] - env.times[i - 1]);
        }
    }
    return std::nullopt;
}

/// Elementwise difference of two photon distributions on a common window.
struct PhotonDelta {
    std::vector<double> reference_dist;
    std::vector<double> current_dist;
    std::vector<double> delta;
};

inline PhotonDelta photon_delta(std::span<const double> ref,
                                std::span<const double> cur) {
    if (ref.size() != cur.size())
        throw AnalysisInputError("photon_delta: window mismatch");
    PhotonDelta pd;
    pd.reference_dist.assign(ref.begin(), ref.end());
    pd.current_dist.assign(cur.begin(), cur.end());
    pd.delta.resize(ref.size());
    double sum = 0.0;
    for (size_t i = 0; i < ref.size(); ++i) {
        pd.delta[i] = cur[i] - ref[i];
        sum += pd.delta[i];
    }
    if (std::abs(sum) > 1e-9)
        throw AnalysisInputError(
            "photon_delta: distributions are not equally normalized (delta "
            "sum " +
            std::to_string(sum) + ")");
    return pd;
}

}  // namespace rabi::analysis
