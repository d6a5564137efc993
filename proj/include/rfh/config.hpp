#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rfh/model.hpp"
#include "rfh/pointprocess.hpp"

namespace rfh {

// Fully resolved run parameters. Keys mirror the documented config schema
// (units annotated in the key name where they matter, e.g. P_C_dBm, P_S_W).
struct RunConfig {
    PhysicalParams phys;
    Architecture arch = Architecture::separated(0);
    SpatialModel model = SpatialModel::ginibre(1, 0.05, 10.0);
    double m_bps = 2000.0;
    std::size_t n = 0;  // 0 = use the per-command default
    std::uint64_t seed = 1;
    int workers = 1;
    SamplerMethod method = SamplerMethod::gram_schmidt;
    std::string format = "csv";
    std::string out;
    bool mc = false;                // attach Monte Carlo columns to outputs
    std::string scenario = "worst"; // worst | general (outage estimators)

    // sweep description
    std::string target;
    std::string axis;
    std::vector<double> axis_values;
};

// Applies one key=value pair; throws std::invalid_argument with the list of
// valid keys on an unknown key, or on an unparsable value.
void apply_key(RunConfig& cfg, const std::string& key, const std::string& value);

const std::vector<std::string>& valid_config_keys();

// key=value file: one pair per line, '#' comments; lines starting with '#@'
// (the form embedded in emitted data files) are also read as pairs, so an
// emitted artifact can be replayed directly with --config.
std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path);

// Fully resolved snapshot of the configuration, suitable for embedding.
std::vector<std::pair<std::string, std::string>> emit_config(const RunConfig& cfg);

std::vector<double> parse_value_list(const std::string& csv);

}  // namespace rfh
