#pragma once

#include <limits>
#include <string>
#include <vector>

#include "memcarbon/recipe.hpp"

namespace memcarbon {

// Per-area embodied carbon: CMOS baseline constants composed with the
// area-weighted ferroelectric-layer contribution, yield-normalized.

struct FabBaseline {
    double epa_cmos_kwh_per_cm2 = 0.9;
    double gpa_cmos_kg_per_cm2 = 0.1375;
    double mpa_cmos_kg_per_cm2 = 0.5;
    double fab_yield = 0.875;                    // in (0, 1]
    double carbon_intensity_kg_per_kwh = 0.583;  // grid emission factor
    double node_nm = 28.0;                       // feature size F

    void validate() const;
};

// One memory technology. Non-FeFET devices carry zero layer thicknesses and
// (for SRAM) unlimited endurance, encoded as +infinity cycles.
struct DeviceSpec {
    std::string name;
    double cell_area_f2 = 0.0;  // cell footprint in F^2
    double hzo_thickness_nm = 0.0;
    double al2o3_thickness_nm = 0.0;
    double endurance_cycles = std::numeric_limits<double>::infinity();
    double read_voltage_v = 0.0;
    double set_voltage_v = 0.0;
    double reset_voltage_v = 0.0;
    double program_pulse_ns = 0.0;
    bool is_fefet = false;

    void validate() const;
    // {"HZO": ..., "Al2O3": ...} for feeding the process timeline.
    ThicknessMap thickness_overrides() const;
};

// Named device collection loaded from a device file.
struct DeviceTable {
    std::vector<DeviceSpec> devices;

    const DeviceSpec& find(const std::string& name) const;  // throws NotFoundError
    bool contains(const std::string& name) const;
};

struct CpaBreakdown {
    double energy_term_kg_per_cm2 = 0.0;  // CI * EPA, pre-yield
    double gas_term_kg_per_cm2 = 0.0;
    double material_term_kg_per_cm2 = 0.0;
    double total_cpa_kg_per_cm2 = 0.0;    // (energy + gas + material) / yield
    double epa_total_kwh_per_cm2 = 0.0;
    double fe_epa_share = 0.0;            // FE fraction of total EPA, in [0, 1]
};

// Area-weighted composition: baseline plus FE-layer term scaled by the cell
// array's share of total array area (area efficiency, AE).
double epa_fefet(double epa_cmos_kwh_per_cm2, double epa_fe_layer_kwh_per_cm2,
                 double area_efficiency);
double gpa_fefet(double gpa_cmos_kg_per_cm2, double gpa_fe_layer_kg_per_cm2,
                 double area_efficiency);

CpaBreakdown cpa(const FabBaseline& fab, double epa_total_kwh_per_cm2,
                 double gpa_total_kg_per_cm2, double mpa_total_kg_per_cm2);

// First-order array area: cell area over area efficiency. Used when no
// characterized design point supplies a measured area.
double array_area_cm2(double capacity_bits, const DeviceSpec& device, const FabBaseline& fab,
                      double area_efficiency);

double embodied_carbon_kg(double area_cm2, double cpa_kg_per_cm2);
double embodied_per_mb(double capacity_bits, double area_cm2, double cpa_kg_per_cm2);

// Full per-device CPA: FE-layer EPA thickness-scaled through the recipe
// timeline; FE-layer GPA from the gas model; MPA and yield as the baseline.
CpaBreakdown device_cpa(const DeviceSpec& device, const FabBaseline& fab,
                        const ProcessRecipe& recipe, const GhgModel& ghg,
                        double area_efficiency);

}  // namespace memcarbon
