#include "rfh/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace rfh {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {
std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    return out;
}
}  // namespace

void write_table_csv(const std::string& path, const ConfigPairs& config, const Table& table) {
    auto out = open_out(path);
    for (const auto& [k, v] : config) out << "#@ " << k << "=" << v << "\n";
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        out << (c ? "," : "") << table.columns[c];
    out << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            out << (c ? "," : "") << format_double(row[c]);
        out << "\n";
    }
}

void write_table_json(const std::string& path, const ConfigPairs& config, const Table& table) {
    nlohmann::json j;
    auto& cfg = j["config"];
    for (const auto& [k, v] : config) cfg[k] = v;
    j["columns"] = table.columns;
    auto& rows = j["rows"];
    rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        nlohmann::json rec;
        for (std::size_t c = 0; c < row.size() && c < table.columns.size(); ++c)
            rec[table.columns[c]] = row[c];
        rows.push_back(std::move(rec));
    }
    auto out = open_out(path);
    out << j.dump(2) << "\n";
}

void write_points_csv(const std::string& path, const ConfigPairs& config,
                      const PointConfiguration& cfg) {
    auto out = open_out(path);
    for (const auto& [k, v] : config) out << "#@ " << k << "=" << v << "\n";
    out << "#@ model_tag=" << cfg.model_tag << "\n";
    out << "#@ point_seed=" << cfg.seed << "\n";
    out << "x,y\n";
    for (const auto& p : cfg.points)
        out << format_double(p.x) << "," << format_double(p.y) << "\n";
}

}  // namespace rfh
