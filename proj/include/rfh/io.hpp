#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rfh/pointprocess.hpp"

namespace rfh {

using ConfigPairs = std::vector<std::pair<std::string, std::string>>;

// Tabular result with the resolved configuration embedded (as '#@ key=value'
// comment lines in CSV, or a "config" object in JSON). Numeric cells are
// written with 17 significant digits so re-running a sweep reproduces the
// file byte for byte.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

void write_table_csv(const std::string& path, const ConfigPairs& config, const Table& table);
void write_table_json(const std::string& path, const ConfigPairs& config, const Table& table);
void write_points_csv(const std::string& path, const ConfigPairs& config,
                      const PointConfiguration& cfg);

std::string format_double(double v);

}  // namespace rfh
