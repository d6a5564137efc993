#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

#include "rfh/units.hpp"

namespace rfh {

// Radio and circuit constants of one source/sensor link. Defaults are the
// canonical experiment profile (1800 MHz LTE band, 1 W sources, -18 dBm
// circuit draw, -90 dBm noise floor).
struct PhysicalParams {
    double tx_power_w = 1.0;                      // P_S, per-source transmit power
    double tx_gain = 1.5;                         // G_S
    double rx_gain = 1.5;                         // G_H
    double wavelength_m = 0.167;                  // lambda
    double rf_dc_eff = 0.3;                       // beta, RF-to-DC conversion in (0,1]
    double circuit_power_w = dbm_to_watts(-18.0); // P_C, ~15.8 uW
    double noise_w = dbm_to_watts(-90.0);         // sigma^2, AWGN power
    double bandwidth_hz = 1000.0;                 // W
    double min_dist_m = 0.01;                     // epsilon, closest source approach
    double sink_dist_m = 50.0;                    // d, sensor-to-sink distance
    std::optional<double> h0_direct;              // overrides 62.5 d^-4 when set

    double h0() const {
        return h0_direct ? *h0_direct : channel_gain(sink_dist_m);
    }

    void validate() const {
        auto pos = [](double v, const char* name) {
            if (!(v > 0.0) || !std::isfinite(v))
                throw std::invalid_argument(std::string(name) + " must be finite and > 0");
        };
        pos(tx_power_w, "P_S");
        pos(tx_gain, "G_S");
        pos(rx_gain, "G_H");
        pos(wavelength_m, "lambda");
        pos(circuit_power_w, "P_C");
        pos(noise_w, "sigma2");
        pos(bandwidth_hz, "W");
        pos(min_dist_m, "epsilon");
        pos(sink_dist_m, "d");
        if (!(rf_dc_eff > 0.0 && rf_dc_eff <= 1.0))
            throw std::invalid_argument("beta must lie in (0,1]");
        if (h0_direct) pos(*h0_direct, "h0");
    }
};

enum class ArchKind { separated, time_switching };

// Receiver architecture. Separated uses independent harvest/transmit
// antennas (rho=eta=1); time-switching harvests for a fraction tau of each
// slot and transmits for the remaining 1-tau.
struct Architecture {
    ArchKind kind = ArchKind::separated;
    double tau = 1.0;   // only meaningful for time_switching
    int xi = 0;         // 1 = in-band transmission (co-channel interference), 0 = out-of-band

    double harvest_coeff() const {  // rho
        return kind == ArchKind::separated ? 1.0 : tau;
    }
    double transmit_coeff() const {  // eta
        return kind == ArchKind::separated ? 1.0 : 1.0 - tau;
    }

    void validate() const {
        if (kind == ArchKind::time_switching && !(tau >= 0.0 && tau <= 1.0))
            throw std::invalid_argument("tau must lie in [0,1]");
        if (xi != 0 && xi != 1)
            throw std::invalid_argument("xi must be 0 or 1");
    }

    static Architecture separated(int xi = 0) { return {ArchKind::separated, 1.0, xi}; }
    static Architecture time_switching(double tau, int xi = 0) {
        return {ArchKind::time_switching, tau, xi};
    }
};

struct EffectiveCoefficients {
    double harvest;   // rho
    double transmit;  // eta
    int xi;
};

inline EffectiveCoefficients effective_coefficients(const Architecture& arch) {
    arch.validate();
    return {arch.harvest_coeff(), arch.transmit_coeff(), arch.xi};
}

// Spatial distribution of the ambient RF sources on the disc B(0,R):
// either the Ginibre alpha-DPP with alpha = -1/j, or the Poisson process
// (the alpha -> 0 limit).
struct SpatialModel {
    enum class Kind { ginibre, ppp };
    Kind kind = Kind::ginibre;
    int j = 1;          // alpha = -1/j, ginibre only
    double density;     // rho, points per m^2
    double radius;      // R, disc radius in m

    double alpha() const { return kind == Kind::ppp ? 0.0 : -1.0 / j; }
    bool is_ppp() const { return kind == Kind::ppp; }
    double mean_count() const { return density * std::numbers::pi * radius * radius; }

    void validate() const {
        if (!(density > 0.0) || !std::isfinite(density))
            throw std::invalid_argument("rho must be finite and > 0");
        if (!(radius > 0.0) || !std::isfinite(radius))
            throw std::invalid_argument("R must be finite and > 0");
        if (kind == Kind::ginibre && j < 1)
            throw std::invalid_argument("j must be >= 1");
    }

    static SpatialModel ginibre(int j, double rho, double R) {
        SpatialModel m{Kind::ginibre, j, rho, R};
        m.validate();
        return m;
    }
    static SpatialModel ppp(double rho, double R) {
        SpatialModel m{Kind::ppp, 1, rho, R};
        m.validate();
        return m;
    }

    std::string tag() const {
        return kind == Kind::ppp ? "ppp" : "ginibre(j=" + std::to_string(j) + ")";
    }
};

}  // namespace rfh
