#pragma once

#include <string>
#include <vector>

#include "qtm/distance.hpp"

namespace qtm {

enum class OutputFormat { Text, Csv, Json };

OutputFormat parse_format(const std::string& name);

// Columns: Dist | Positions | Unique wrt M | Unique wrt M+inv. Distance
// labels carry a "q" suffix in quarter-turn table mode (distdist).
std::string format_rows(const std::vector<DistRow>& rows, OutputFormat fmt,
                        bool q_suffix);

}  // namespace qtm
