#pragma once

#include <cmath>
#include <stdexcept>

namespace rfh {

// All internal computation is in SI units (watts, meters, hertz).
// dBm and kbps are accepted only at interface boundaries.

inline double dbm_to_watts(double dbm) {
    return std::pow(10.0, (dbm - 30.0) / 10.0);
}

inline double watts_to_dbm(double watts) {
    if (watts <= 0.0) throw std::invalid_argument("watts_to_dbm: power must be > 0");
    return 10.0 * std::log10(watts) + 30.0;
}

// Free-space sensor-to-sink channel gain, h0 = 62.5 d^-4.
inline double channel_gain(double sink_distance_m) {
    if (!(sink_distance_m > 0.0))
        throw std::invalid_argument("channel_gain: distance must be > 0");
    const double d2 = sink_distance_m * sink_distance_m;
    return 62.5 / (d2 * d2);
}

inline double kbps_to_bps(double kbps) { return kbps * 1000.0; }

}  // namespace rfh
