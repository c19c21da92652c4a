#include "memcarbon/report.hpp"

#include <algorithm>
#include <cstdio>

#include "memcarbon/errors.hpp"
#include "memcarbon/io.hpp"
#include "memcarbon/version.hpp"

namespace memcarbon {

const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::defaults: return "default";
        case Provenance::user: return "user";
        case Provenance::calibrated: return "calibrated";
    }
    return "default";
}

nlohmann::json quantity(double value, const std::string& unit) {
    return nlohmann::json{{"value", value}, {"unit", unit}};
}

CarbonReport::CarbonReport(std::string command) {
    root_["schema_version"] = schema_version;
    root_["tool"] = std::string(tool_name);
    root_["tool_version"] = std::string(tool_version);
    root_["command"] = std::move(command);
    root_["inputs"] = nlohmann::json::object();
    root_["results"] = nlohmann::json::object();
}

void CarbonReport::set_seed(std::uint64_t seed) { root_["seed"] = seed; }

void CarbonReport::add_input(const std::string& name, nlohmann::json value,
                             Provenance provenance) {
    root_["inputs"][name] = {{"value", std::move(value)}, {"provenance", to_string(provenance)}};
}

void CarbonReport::add_result(const std::string& name, nlohmann::json value) {
    root_["results"][name] = std::move(value);
}

std::string CarbonReport::dump() const { return root_.dump(2) + "\n"; }

void CarbonReport::write(const std::filesystem::path& path) const {
    io::write_text_file(path, dump());
}

std::string format_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    // Prefer the shortest representation that round-trips.
    for (int digits = 1; digits < 17; ++digits) {
        char probe[40];
        std::snprintf(probe, sizeof(probe), "%.*g", digits, value);
        double back = 0.0;
        std::sscanf(probe, "%lf", &back);
        if (back == value) return probe;
    }
    return buf;
}

void Table::add_row(std::vector<std::string> cells) {
    if (cells.size() != columns.size())
        throw InternalError("table row width does not match column count");
    rows.push_back(std::move(cells));
}

std::string Table::to_csv() const {
    std::string out;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        out += columns[i].name;
        if (!columns[i].unit.empty()) out += "_" + columns[i].unit;
        out += (i + 1 < columns.size()) ? "," : "\n";
    }
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out += row[i];
            out += (i + 1 < row.size()) ? "," : "\n";
        }
    }
    return out;
}

std::string Table::to_console() const {
    std::vector<std::string> headers;
    headers.reserve(columns.size());
    for (const auto& c : columns)
        headers.push_back(c.unit.empty() ? c.name : c.name + " [" + c.unit + "]");

    std::vector<std::size_t> widths(columns.size());
    for (std::size_t i = 0; i < columns.size(); ++i) widths[i] = headers[i].size();
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());

    auto emit_row = [&](const std::vector<std::string>& cells) {
        std::string line;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            line += cells[i];
            if (i + 1 < cells.size()) line += std::string(widths[i] - cells[i].size() + 2, ' ');
        }
        line += "\n";
        return line;
    };

    std::string out = emit_row(headers);
    std::size_t total = 0;
    for (std::size_t i = 0; i < widths.size(); ++i) total += widths[i] + (i + 1 < widths.size() ? 2 : 0);
    out += std::string(total, '-') + "\n";
    for (const auto& row : rows) out += emit_row(row);
    return out;
}

}  // namespace memcarbon
