#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace memcarbon {

// Machine-readable analysis report. Every number carries a unit string; the
// inputs section echoes all resolved parameters with a provenance label
// (default | user | calibrated) so a run can be reproduced from its report.

enum class Provenance { defaults, user, calibrated };
const char* to_string(Provenance p);

nlohmann::json quantity(double value, const std::string& unit);

class CarbonReport {
public:
    explicit CarbonReport(std::string command);

    void set_seed(std::uint64_t seed);
    void add_input(const std::string& name, nlohmann::json value, Provenance provenance);
    void add_result(const std::string& name, nlohmann::json value);

    const nlohmann::json& json() const { return root_; }
    std::string dump() const;
    void write(const std::filesystem::path& path) const;

private:
    nlohmann::json root_;
};

// Column-oriented table for console and CSV output; one unit per column.
struct Table {
    struct Column {
        std::string name;
        std::string unit;  // empty for unitless/text columns
    };

    std::vector<Column> columns;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> cells);
    std::string to_csv() const;
    std::string to_console() const;
};

// Shortest-round-trip formatting used in CSV and JSON-adjacent output.
std::string format_number(double value);

}  // namespace memcarbon
