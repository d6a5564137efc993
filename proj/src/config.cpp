#include "rfh/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "rfh/units.hpp"

namespace rfh {

namespace {

const std::vector<std::string> kKeys = {
    "P_S_W", "G_S", "G_H", "lambda_m", "beta", "P_C_W", "P_C_dBm", "sigma2_W",
    "sigma2_dBm", "W_Hz", "epsilon_m", "d_m", "h0", "arch", "tau", "xi",
    "model", "j", "rho", "R_m", "m_bps", "m_kbps", "n", "seed", "workers",
    "sampler", "format", "out", "mc", "scenario", "target", "axis", "values",
    "command", "format_version",
};

double to_double(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("config: cannot parse value for '" + key + "': " + value);
    }
    if (pos != value.size())
        throw std::invalid_argument("config: trailing junk in value for '" + key + "': " + value);
    return v;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

const std::vector<std::string>& valid_config_keys() { return kKeys; }

void apply_key(RunConfig& cfg, const std::string& key, const std::string& value) {
    auto num = [&] { return to_double(key, value); };
    if (key == "P_S_W") cfg.phys.tx_power_w = num();
    else if (key == "G_S") cfg.phys.tx_gain = num();
    else if (key == "G_H") cfg.phys.rx_gain = num();
    else if (key == "lambda_m") cfg.phys.wavelength_m = num();
    else if (key == "beta") cfg.phys.rf_dc_eff = num();
    else if (key == "P_C_W") cfg.phys.circuit_power_w = num();
    else if (key == "P_C_dBm") cfg.phys.circuit_power_w = dbm_to_watts(num());
    else if (key == "sigma2_W") cfg.phys.noise_w = num();
    else if (key == "sigma2_dBm") cfg.phys.noise_w = dbm_to_watts(num());
    else if (key == "W_Hz") cfg.phys.bandwidth_hz = num();
    else if (key == "epsilon_m") cfg.phys.min_dist_m = num();
    else if (key == "d_m") cfg.phys.sink_dist_m = num();
    else if (key == "h0") cfg.phys.h0_direct = num();
    else if (key == "arch") {
        if (value == "separated") cfg.arch.kind = ArchKind::separated;
        else if (value == "time_switching") cfg.arch.kind = ArchKind::time_switching;
        else throw std::invalid_argument("config: arch must be separated|time_switching");
    } else if (key == "tau") {
        cfg.arch.tau = num();
        cfg.arch.kind = ArchKind::time_switching;
    } else if (key == "xi") cfg.arch.xi = static_cast<int>(num());
    else if (key == "model") {
        if (value == "ginibre") cfg.model.kind = SpatialModel::Kind::ginibre;
        else if (value == "ppp") cfg.model.kind = SpatialModel::Kind::ppp;
        else throw std::invalid_argument("config: model must be ginibre|ppp");
    } else if (key == "j") cfg.model.j = static_cast<int>(num());
    else if (key == "rho") cfg.model.density = num();
    else if (key == "R_m") cfg.model.radius = num();
    else if (key == "m_bps") cfg.m_bps = num();
    else if (key == "m_kbps") cfg.m_bps = kbps_to_bps(num());
    else if (key == "n") cfg.n = static_cast<std::size_t>(num());
    else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(num());
    else if (key == "workers") cfg.workers = static_cast<int>(num());
    else if (key == "sampler") {
        if (value == "gram_schmidt" || value == "gs") cfg.method = SamplerMethod::gram_schmidt;
        else if (value == "radial") cfg.method = SamplerMethod::radial;
        else throw std::invalid_argument("config: sampler must be gram_schmidt|radial");
    } else if (key == "format") {
        if (value != "csv" && value != "json")
            throw std::invalid_argument("config: format must be csv|json");
        cfg.format = value;
    } else if (key == "out") cfg.out = value;
    else if (key == "mc") cfg.mc = value == "1" || value == "true";
    else if (key == "scenario") {
        if (value != "worst" && value != "general")
            throw std::invalid_argument("config: scenario must be worst|general");
        cfg.scenario = value;
    } else if (key == "target") cfg.target = value;
    else if (key == "axis") cfg.axis = value;
    else if (key == "values") cfg.axis_values = parse_value_list(value);
    else if (key == "command" || key == "format_version") {
        // informational echo in emitted files
    }
    else {
        std::ostringstream os;
        os << "config: unknown key '" << key << "'; valid keys:";
        for (const auto& k : kKeys) os << ' ' << k;
        throw std::invalid_argument(os.str());
    }
}

std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open " + path);
    std::vector<std::pair<std::string, std::string>> pairs;
    std::string line;
    while (std::getline(in, line)) {
        std::string body = line;
        if (body.rfind("#@", 0) == 0) body = body.substr(2);
        else if (!body.empty() && body[0] == '#') continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(body.substr(0, eq));
        const std::string value = trim(body.substr(eq + 1));
        if (!key.empty()) pairs.emplace_back(key, value);
    }
    return pairs;
}

std::vector<std::pair<std::string, std::string>> emit_config(const RunConfig& cfg) {
    std::vector<std::pair<std::string, std::string>> kv;
    kv.emplace_back("format_version", "1");
    kv.emplace_back("P_S_W", fmt(cfg.phys.tx_power_w));
    kv.emplace_back("G_S", fmt(cfg.phys.tx_gain));
    kv.emplace_back("G_H", fmt(cfg.phys.rx_gain));
    kv.emplace_back("lambda_m", fmt(cfg.phys.wavelength_m));
    kv.emplace_back("beta", fmt(cfg.phys.rf_dc_eff));
    kv.emplace_back("P_C_W", fmt(cfg.phys.circuit_power_w));
    kv.emplace_back("sigma2_W", fmt(cfg.phys.noise_w));
    kv.emplace_back("W_Hz", fmt(cfg.phys.bandwidth_hz));
    kv.emplace_back("epsilon_m", fmt(cfg.phys.min_dist_m));
    kv.emplace_back("d_m", fmt(cfg.phys.sink_dist_m));
    if (cfg.phys.h0_direct) kv.emplace_back("h0", fmt(*cfg.phys.h0_direct));
    kv.emplace_back("arch", cfg.arch.kind == ArchKind::separated ? "separated" : "time_switching");
    if (cfg.arch.kind == ArchKind::time_switching) kv.emplace_back("tau", fmt(cfg.arch.tau));
    kv.emplace_back("xi", std::to_string(cfg.arch.xi));
    kv.emplace_back("model", cfg.model.is_ppp() ? "ppp" : "ginibre");
    if (!cfg.model.is_ppp()) kv.emplace_back("j", std::to_string(cfg.model.j));
    kv.emplace_back("rho", fmt(cfg.model.density));
    kv.emplace_back("R_m", fmt(cfg.model.radius));
    kv.emplace_back("m_bps", fmt(cfg.m_bps));
    kv.emplace_back("n", std::to_string(cfg.n));
    kv.emplace_back("seed", std::to_string(cfg.seed));
    // workers deliberately not echoed: it can never change the numbers
    kv.emplace_back("sampler",
                    cfg.method == SamplerMethod::gram_schmidt ? "gram_schmidt" : "radial");
    kv.emplace_back("mc", cfg.mc ? "1" : "0");
    kv.emplace_back("scenario", cfg.scenario);
    if (!cfg.target.empty()) kv.emplace_back("target", cfg.target);
    if (!cfg.axis.empty()) kv.emplace_back("axis", cfg.axis);
    if (!cfg.axis_values.empty()) {
        std::string vs;
        for (std::size_t i = 0; i < cfg.axis_values.size(); ++i) {
            if (i) vs += ',';
            vs += fmt(cfg.axis_values[i]);
        }
        kv.emplace_back("values", vs);
    }
    return kv;
}

std::vector<double> parse_value_list(const std::string& csvlist) {
    std::vector<double> out;
    std::stringstream ss(csvlist);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(to_double("values", item));
    }
    if (out.empty()) throw std::invalid_argument("config: empty value list");
    return out;
}

}  // namespace rfh
