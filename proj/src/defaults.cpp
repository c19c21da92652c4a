#include "memcarbon/defaults.hpp"

namespace memcarbon::defaults {

ProcessRecipe recipe() {
    ProcessRecipe r;
    r.fixed_stages = {
        {"preheat", 3600.0, PowerClass::preheat},
        {"stabilization", 3029.0, PowerClass::steady},
    };
    r.layers = {
        {"HZO", 20.0, 0.2, 100.0},
        {"Al2O3", 3.0, 0.1, 30.0},
    };
    r.wafer_area_cm2 = wafer_area_cm2;
    r.facility_overhead = 0.40;
    r.power.p_steady_w = 1000.0;
    r.power.p_preheat_w = preheat_power_ratio * 1000.0;
    return calibrate_power(std::move(r), fe_layer_epa_kwh_per_cm2).recipe;
}

GhgModel ghg() {
    return GhgModel{};
}

FabBaseline fab() {
    return FabBaseline{};
}

namespace {

DeviceSpec fefet(std::string name, double endurance, double hzo_nm, double al2o3_nm,
                 double read_v, double reset_v, double set_v, double pulse_ns) {
    DeviceSpec d;
    d.name = std::move(name);
    d.cell_area_f2 = 30.0;
    d.hzo_thickness_nm = hzo_nm;
    d.al2o3_thickness_nm = al2o3_nm;
    d.endurance_cycles = endurance;
    d.read_voltage_v = read_v;
    d.reset_voltage_v = reset_v;
    d.set_voltage_v = set_v;
    d.program_pulse_ns = pulse_ns;
    d.is_fefet = true;
    return d;
}

}  // namespace

DeviceTable devices() {
    DeviceTable table;
    table.devices = {
        fefet("HZO1", 1e5, 10.0, 3.0, 0.1, -3.0, 3.0, 10000.0),
        fefet("HZO2", 1e4, 10.0, 3.0, 0.9, -4.5, 7.5, 10000.0),
        fefet("HZO3", 1e5, 15.0, 0.0, 0.1, -5.0, 5.0, 100.0),
        fefet("HZO4", 1e9, 16.35, 2.64, 0.1, 8.0, -6.0, 100.0),
        fefet("HZO5", 1e9, 16.35, 2.68, 0.1, 8.0, -6.0, 50.0),
        fefet("HZO6", 1e6, 12.71, 0.0, 0.1, -4.0, 4.0, 2000.0),
        fefet("HZO7", 1e5, 10.0, 1.0, 0.1, -3.5, 4.5, 1000.0),
    };

    DeviceSpec sram;
    sram.name = "SRAM";
    sram.cell_area_f2 = 146.0;
    sram.is_fefet = false;
    table.devices.push_back(sram);
    return table;
}

}  // namespace memcarbon::defaults
