#include "memcarbon/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "memcarbon/errors.hpp"
#include "memcarbon/version.hpp"

namespace memcarbon::io {

using nlohmann::json;

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MissingInputError("cannot open input file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot open output file for writing: " + path.string());
    out << content;
    if (!out) throw ValidationError("failed writing output file: " + path.string());
}

namespace {

json parse_json_file(const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(path.string() + ": not valid JSON: " + e.what());
    }
}

// Strict object view: every key must be consumed, unknown keys are errors.
class StrictObject {
public:
    StrictObject(const json& j, std::string context) : j_(j), context_(std::move(context)) {
        if (!j_.is_object()) throw SchemaError(context_ + ": expected a JSON object");
    }

    double number(const char* key) {
        const json& v = field(key);
        if (!v.is_number()) throw SchemaError(context_ + ": field '" + key + "' must be a number");
        return v.get<double>();
    }

    double number_or(const char* key, double fallback) {
        if (!j_.contains(key)) return fallback;
        return number(key);
    }

    // Number, or null/absent meaning "unbounded".
    double number_or_infinity(const char* key) {
        if (!j_.contains(key)) return std::numeric_limits<double>::infinity();
        mark(key);
        const json& v = j_.at(key);
        if (v.is_null()) return std::numeric_limits<double>::infinity();
        if (!v.is_number())
            throw SchemaError(context_ + ": field '" + key + "' must be a number or null");
        return v.get<double>();
    }

    std::string text(const char* key) {
        const json& v = field(key);
        if (!v.is_string()) throw SchemaError(context_ + ": field '" + key + "' must be a string");
        return v.get<std::string>();
    }

    std::string text_or(const char* key, const std::string& fallback) {
        if (!j_.contains(key)) return fallback;
        return text(key);
    }

    bool boolean(const char* key) {
        const json& v = field(key);
        if (!v.is_boolean())
            throw SchemaError(context_ + ": field '" + key + "' must be a boolean");
        return v.get<bool>();
    }

    bool boolean_or(const char* key, bool fallback) {
        if (!j_.contains(key)) return fallback;
        return boolean(key);
    }

    int integer(const char* key) {
        const json& v = field(key);
        if (!v.is_number_integer())
            throw SchemaError(context_ + ": field '" + key + "' must be an integer");
        return v.get<int>();
    }

    const json& array(const char* key) {
        const json& v = field(key);
        if (!v.is_array()) throw SchemaError(context_ + ": field '" + key + "' must be an array");
        return v;
    }

    const json& object(const char* key) {
        const json& v = field(key);
        if (!v.is_object()) throw SchemaError(context_ + ": field '" + key + "' must be an object");
        return v;
    }

    const std::string& context() const { return context_; }

    // Rejects any key never consumed by the schema.
    void finish() const {
        for (auto it = j_.begin(); it != j_.end(); ++it) {
            if (!consumed_.count(it.key()))
                throw SchemaError(context_ + ": unknown field '" + it.key() + "'");
        }
    }

private:
    const json& field(const char* key) {
        if (!j_.contains(key)) throw SchemaError(context_ + ": missing field '" + key + "'");
        mark(key);
        return j_.at(key);
    }
    void mark(const char* key) { consumed_.insert(key); }

    const json& j_;
    std::string context_;
    std::set<std::string> consumed_;
};

void check_schema_version(StrictObject& obj) {
    const int version = obj.integer("schema_version");
    if (version != schema_version) {
        throw SchemaError(obj.context() + ": unsupported schema_version " +
                          std::to_string(version) + " (tool supports " +
                          std::to_string(schema_version) + ")");
    }
}

}  // namespace

json recipe_to_json(const ProcessRecipe& recipe) {
    json stages = json::array();
    for (const auto& s : recipe.fixed_stages) {
        stages.push_back({{"name", s.name},
                          {"duration_s", s.duration_s},
                          {"power_class", to_string(s.power_class)}});
    }
    json layers = json::array();
    for (const auto& l : recipe.layers) {
        layers.push_back({{"name", l.name},
                          {"thickness_nm", l.thickness_nm},
                          {"rate_nm_per_cycle", l.rate_nm_per_cycle},
                          {"cycle_s", l.cycle_s}});
    }
    return json{
        {"schema_version", schema_version},
        {"fixed_stages", stages},
        {"layers", layers},
        {"wafer_area_cm2", recipe.wafer_area_cm2},
        {"facility_overhead", recipe.facility_overhead},
        {"power",
         {{"p_preheat_w", recipe.power.p_preheat_w},
          {"p_steady_w", recipe.power.p_steady_w},
          {"sigma_fraction", recipe.power.sigma_fraction},
          {"chamber_pump_fraction", recipe.power.chamber_pump_fraction}}},
    };
}

ProcessRecipe recipe_from_json(const json& j, const std::string& context) {
    StrictObject obj(j, context);
    check_schema_version(obj);

    ProcessRecipe recipe;
    int index = 0;
    for (const json& s : obj.array("fixed_stages")) {
        StrictObject stage(s, context + ": fixed_stages[" + std::to_string(index++) + "]");
        FixedStage fs;
        fs.name = stage.text("name");
        fs.duration_s = stage.number("duration_s");
        fs.power_class = power_class_from_string(stage.text("power_class"));
        stage.finish();
        recipe.fixed_stages.push_back(std::move(fs));
    }
    index = 0;
    for (const json& l : obj.array("layers")) {
        StrictObject layer(l, context + ": layers[" + std::to_string(index++) + "]");
        LayerProcess lp;
        lp.name = layer.text("name");
        lp.thickness_nm = layer.number("thickness_nm");
        lp.rate_nm_per_cycle = layer.number("rate_nm_per_cycle");
        lp.cycle_s = layer.number("cycle_s");
        layer.finish();
        recipe.layers.push_back(std::move(lp));
    }
    recipe.wafer_area_cm2 = obj.number("wafer_area_cm2");
    recipe.facility_overhead = obj.number("facility_overhead");

    StrictObject power(obj.object("power"), context + ": power");
    recipe.power.p_preheat_w = power.number("p_preheat_w");
    recipe.power.p_steady_w = power.number("p_steady_w");
    recipe.power.sigma_fraction = power.number_or("sigma_fraction", recipe.power.sigma_fraction);
    recipe.power.chamber_pump_fraction =
        power.number_or("chamber_pump_fraction", recipe.power.chamber_pump_fraction);
    power.finish();
    obj.finish();

    if (recipe.fixed_stages.empty() && recipe.layers.empty())
        throw SchemaError(context + ": recipe must declare at least one stage or layer");
    recipe.validate();
    return recipe;
}

ProcessRecipe load_recipe(const std::filesystem::path& path) {
    return recipe_from_json(parse_json_file(path), path.string());
}

void save_recipe(const ProcessRecipe& recipe, const std::filesystem::path& path) {
    write_text_file(path, recipe_to_json(recipe).dump(2) + "\n");
}

json ghg_to_json(const GhgModel& ghg) {
    return json{
        {"schema_version", schema_version},
        {"ghg_rate_ug_per_nm_cm2", ghg.ghg_rate_ug_per_nm_cm2},
        {"gwp", ghg.gwp},
        {"destruction_efficiency", ghg.destruction_efficiency},
    };
}

GhgModel ghg_from_json(const json& j, const std::string& context) {
    StrictObject obj(j, context);
    check_schema_version(obj);

    GhgModel ghg;
    ghg.ghg_rate_ug_per_nm_cm2 = obj.number("ghg_rate_ug_per_nm_cm2");
    ghg.gwp = obj.number("gwp");
    ghg.destruction_efficiency = obj.number("destruction_efficiency");
    obj.finish();
    ghg.validate();
    return ghg;
}

GhgModel load_ghg(const std::filesystem::path& path) {
    return ghg_from_json(parse_json_file(path), path.string());
}

json fab_to_json(const FabBaseline& fab) {
    return json{
        {"schema_version", schema_version},
        {"node_nm", fab.node_nm},
        {"epa_kwh_per_cm2", fab.epa_cmos_kwh_per_cm2},
        {"gpa_kg_per_cm2", fab.gpa_cmos_kg_per_cm2},
        {"mpa_kg_per_cm2", fab.mpa_cmos_kg_per_cm2},
        {"yield", fab.fab_yield},
        {"carbon_intensity_kg_per_kwh", fab.carbon_intensity_kg_per_kwh},
    };
}

FabBaseline fab_from_json(const json& j, const std::string& context) {
    StrictObject obj(j, context);
    check_schema_version(obj);

    FabBaseline fab;
    fab.node_nm = obj.number("node_nm");
    fab.epa_cmos_kwh_per_cm2 = obj.number("epa_kwh_per_cm2");
    fab.gpa_cmos_kg_per_cm2 = obj.number("gpa_kg_per_cm2");
    fab.mpa_cmos_kg_per_cm2 = obj.number("mpa_kg_per_cm2");
    fab.fab_yield = obj.number("yield");
    fab.carbon_intensity_kg_per_kwh = obj.number("carbon_intensity_kg_per_kwh");
    obj.finish();
    fab.validate();
    return fab;
}

FabBaseline load_fab(const std::filesystem::path& path) {
    return fab_from_json(parse_json_file(path), path.string());
}

json device_to_json(const DeviceSpec& device) {
    json j{
        {"name", device.name},
        {"cell_area_f2", device.cell_area_f2},
        {"is_fefet", device.is_fefet},
        {"hzo_thickness_nm", device.hzo_thickness_nm},
        {"al2o3_thickness_nm", device.al2o3_thickness_nm},
        {"read_voltage_v", device.read_voltage_v},
        {"set_voltage_v", device.set_voltage_v},
        {"reset_voltage_v", device.reset_voltage_v},
        {"program_pulse_ns", device.program_pulse_ns},
    };
    if (device.endurance_cycles == std::numeric_limits<double>::infinity())
        j["endurance_cycles"] = nullptr;
    else
        j["endurance_cycles"] = device.endurance_cycles;
    return j;
}

DeviceSpec device_from_json(const json& j, const std::string& context) {
    StrictObject dev(j, context);
    DeviceSpec spec;
    spec.name = dev.text("name");
    spec.cell_area_f2 = dev.number("cell_area_f2");
    spec.is_fefet = dev.boolean("is_fefet");
    spec.hzo_thickness_nm = dev.number_or("hzo_thickness_nm", 0.0);
    spec.al2o3_thickness_nm = dev.number_or("al2o3_thickness_nm", 0.0);
    spec.endurance_cycles = dev.number_or_infinity("endurance_cycles");
    spec.read_voltage_v = dev.number_or("read_voltage_v", 0.0);
    spec.set_voltage_v = dev.number_or("set_voltage_v", 0.0);
    spec.reset_voltage_v = dev.number_or("reset_voltage_v", 0.0);
    spec.program_pulse_ns = dev.number_or("program_pulse_ns", 0.0);
    dev.finish();
    try {
        spec.validate();
    } catch (const ValidationError& e) {
        throw SchemaError(context + ": " + e.what());
    }
    return spec;
}

DeviceTable load_devices(const std::filesystem::path& path) {
    const json j = parse_json_file(path);
    StrictObject obj(j, path.string());
    check_schema_version(obj);

    DeviceTable table;
    int index = 0;
    for (const json& d : obj.array("devices")) {
        DeviceSpec spec =
            device_from_json(d, path.string() + ": devices[" + std::to_string(index++) + "]");
        if (table.contains(spec.name))
            throw SchemaError(path.string() + ": duplicate device '" + spec.name + "'");
        table.devices.push_back(std::move(spec));
    }
    obj.finish();
    return table;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) {
        std::size_t a = 0, b = cell.size();
        while (a < b && std::isspace(static_cast<unsigned char>(cell[a]))) ++a;
        while (b > a && std::isspace(static_cast<unsigned char>(cell[b - 1]))) --b;
        cells.push_back(cell.substr(a, b - a));
    }
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

double parse_number(const std::string& cell, const std::string& context) {
    double value = 0.0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw SchemaError(context + ": '" + cell + "' is not a number");
    return value;
}

const std::vector<std::string> catalog_columns = {
    "device_name",     "capacity",     "opt_target",    "area",
    "area_efficiency", "read_latency", "write_latency", "read_energy",
    "write_energy",    "leakage_power", "data_width"};

DesignPointCatalog load_catalog_csv(const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    DesignPointCatalog catalog;

    std::istringstream in(text);
    std::string line;
    std::vector<std::string> header;
    bool unit_row_seen = false;
    int line_no = 0;
    int record_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            const std::string tag = "# provenance:";
            if (line.rfind(tag, 0) == 0) {
                catalog.provenance = line.substr(tag.size());
                if (!catalog.provenance.empty() && catalog.provenance.front() == ' ')
                    catalog.provenance.erase(0, 1);
            }
            if (line.find("non-authoritative") != std::string::npos)
                catalog.non_authoritative = true;
            continue;
        }
        const auto cells = split_csv_line(line);
        const std::string context = path.string() + ":" + std::to_string(line_no);

        if (header.empty()) {
            header = cells;
            if (header != catalog_columns) {
                std::string expected;
                for (const auto& c : catalog_columns) expected += c + ",";
                expected.pop_back();
                throw SchemaError(context + ": header must be exactly: " + expected);
            }
            continue;
        }
        if (!unit_row_seen) {
            // Second header row carries the units.
            unit_row_seen = true;
            continue;
        }
        if (cells.size() != header.size())
            throw SchemaError(context + ": expected " + std::to_string(header.size()) +
                              " cells, got " + std::to_string(cells.size()));

        ++record_no;
        const std::string rec = path.string() + ": record " + std::to_string(record_no);
        MemoryDesignPoint dp;
        dp.device_name = cells[0];
        dp.capacity_bits = parse_number(cells[1], rec + ", field 'capacity'");
        dp.opt_target = opt_target_from_string(cells[2]);
        dp.area_cm2 = parse_number(cells[3], rec + ", field 'area'");
        dp.area_efficiency = parse_number(cells[4], rec + ", field 'area_efficiency'");
        dp.read_latency_ns = parse_number(cells[5], rec + ", field 'read_latency'");
        dp.write_latency_ns = parse_number(cells[6], rec + ", field 'write_latency'");
        dp.read_energy_pj = parse_number(cells[7], rec + ", field 'read_energy'");
        dp.write_energy_pj = parse_number(cells[8], rec + ", field 'write_energy'");
        dp.leakage_power_mw = parse_number(cells[9], rec + ", field 'leakage_power'");
        dp.data_width_bits = parse_number(cells[10], rec + ", field 'data_width'");
        try {
            catalog.insert(std::move(dp));
        } catch (const ValidationError& e) {
            throw SchemaError(rec + ": " + e.what());
        }
    }
    return catalog;
}

DesignPointCatalog load_catalog_json(const std::filesystem::path& path) {
    const json j = parse_json_file(path);
    StrictObject obj(j, path.string());
    check_schema_version(obj);

    DesignPointCatalog catalog;
    catalog.provenance = obj.text_or("provenance", "");
    catalog.non_authoritative = obj.boolean_or("non_authoritative", false);

    int index = 0;
    for (const json& r : obj.array("design_points")) {
        const std::string rec =
            path.string() + ": design_points[" + std::to_string(index++) + "]";
        StrictObject row(r, rec);
        MemoryDesignPoint dp;
        dp.device_name = row.text("device_name");
        dp.capacity_bits = row.number("capacity");
        dp.opt_target = opt_target_from_string(row.text("opt_target"));
        dp.area_cm2 = row.number("area");
        dp.area_efficiency = row.number("area_efficiency");
        dp.read_latency_ns = row.number("read_latency");
        dp.write_latency_ns = row.number("write_latency");
        dp.read_energy_pj = row.number("read_energy");
        dp.write_energy_pj = row.number("write_energy");
        dp.leakage_power_mw = row.number("leakage_power");
        dp.data_width_bits = row.number("data_width");
        row.finish();
        try {
            catalog.insert(std::move(dp));
        } catch (const ValidationError& e) {
            throw SchemaError(rec + ": " + e.what());
        }
    }
    obj.finish();
    return catalog;
}

}  // namespace

DesignPointCatalog load_catalog(const std::filesystem::path& path) {
    if (path.extension() == ".json") return load_catalog_json(path);
    return load_catalog_csv(path);
}

AcceleratorConfig load_accelerator(const std::filesystem::path& path) {
    const json j = parse_json_file(path);
    StrictObject obj(j, path.string());
    check_schema_version(obj);

    AcceleratorConfig config;
    config.name = obj.text("name");
    config.pe_rows = obj.integer("pe_rows");
    config.pe_cols = obj.integer("pe_cols");
    config.compute_area_cm2 = obj.number("compute_area_cm2");
    config.compute_energy_per_mac_pj = obj.number("compute_energy_per_mac_pj");

    int index = 0;
    for (const json& b : obj.array("buffers")) {
        StrictObject buf(b, path.string() + ": buffers[" + std::to_string(index++) + "]");
        BufferSlot slot;
        slot.role = buf.text("role");
        slot.device = buf.text("device");
        slot.capacity_bits = buf.number("capacity_bits");
        slot.opt_target = opt_target_from_string(buf.text("opt_target"));
        buf.finish();
        config.buffers.push_back(std::move(slot));
    }
    obj.finish();
    config.validate();
    return config;
}

WorkloadProfile load_workload(const std::filesystem::path& path) {
    const json j = parse_json_file(path);
    StrictObject obj(j, path.string());
    check_schema_version(obj);

    WorkloadProfile wl;
    wl.name = obj.text("name");
    wl.mac_count = obj.number("mac_count");
    wl.execution_time_s = obj.number("execution_time_s");
    wl.inferences_per_day = obj.number("inferences_per_day");
    wl.note = obj.text_or("note", "");

    int index = 0;
    for (const json& t : obj.array("buffer_traffic")) {
        StrictObject row(t, path.string() + ": buffer_traffic[" + std::to_string(index++) + "]");
        BufferTraffic traffic;
        traffic.role = row.text("role");
        traffic.reads_per_inference = row.number("reads");
        traffic.writes_per_inference = row.number("writes");
        row.finish();
        wl.traffic.push_back(std::move(traffic));
    }
    obj.finish();
    wl.validate();
    return wl;
}

}  // namespace memcarbon::io
