#pragma once

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace slocc {

// A reference sub-table of the 2x3x3 battery: a few columns on a few orbits.
struct SubTable {
    std::string name;
    std::vector<std::string> columns;
    // Rows as printed.
    std::vector<std::pair<std::string, std::string>> printed;
    // Rows the full w_A table implies; differs from printed only for a documented erratum.
    std::vector<std::pair<std::string, std::string>> expected;
    std::string note;
};

const std::vector<SubTable>& subtables233();

// For every candidate plan of every transvectant-built concomitant of 2x2x3
// and 2x3x3: the serialized plan, its nullity column over the registry
// representatives, and whether it reproduces the reference column. Also lists
// errata and any irreproducible cells. Deterministic.
nlohmann::json conformance_report();

}  // namespace slocc
