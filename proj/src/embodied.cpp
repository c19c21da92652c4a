#include "memcarbon/embodied.hpp"

#include <algorithm>
#include <cmath>

#include "memcarbon/errors.hpp"
#include "memcarbon/units.hpp"

namespace memcarbon {

void FabBaseline::validate() const {
    if (!(epa_cmos_kwh_per_cm2 > 0.0)) throw ValidationError("EPA baseline must be > 0");
    if (!(gpa_cmos_kg_per_cm2 > 0.0)) throw ValidationError("GPA baseline must be > 0");
    if (!(mpa_cmos_kg_per_cm2 > 0.0)) throw ValidationError("MPA baseline must be > 0");
    if (!(fab_yield > 0.0) || fab_yield > 1.0)
        throw ValidationError("fab yield must be in (0, 1]");
    if (!(carbon_intensity_kg_per_kwh > 0.0))
        throw ValidationError("carbon intensity must be > 0");
    if (!(node_nm > 0.0)) throw ValidationError("process node must be > 0 nm");
}

void DeviceSpec::validate() const {
    if (!(cell_area_f2 > 0.0))
        throw ValidationError("device '" + name + "': cell area must be > 0 F^2");
    if (hzo_thickness_nm < 0.0 || al2o3_thickness_nm < 0.0)
        throw ValidationError("device '" + name + "': layer thicknesses must be >= 0 nm");
    if (!(endurance_cycles >= 1.0))
        throw ValidationError("device '" + name + "': endurance must be >= 1 cycle");
    if (!is_fefet && (hzo_thickness_nm != 0.0 || al2o3_thickness_nm != 0.0))
        throw ValidationError("device '" + name + "': non-FeFET devices carry no FE layers");
}

ThicknessMap DeviceSpec::thickness_overrides() const {
    return {{"HZO", hzo_thickness_nm}, {"Al2O3", al2o3_thickness_nm}};
}

const DeviceSpec& DeviceTable::find(const std::string& name) const {
    auto it = std::find_if(devices.begin(), devices.end(),
                           [&](const DeviceSpec& d) { return d.name == name; });
    if (it == devices.end()) throw NotFoundError("device '" + name + "' not in device table");
    return *it;
}

bool DeviceTable::contains(const std::string& name) const {
    return std::any_of(devices.begin(), devices.end(),
                       [&](const DeviceSpec& d) { return d.name == name; });
}

namespace {

void check_area_efficiency(double ae) {
    if (ae < 0.0 || ae > 1.0)
        throw ValidationError("area efficiency must be in [0, 1]");
}

}  // namespace

double epa_fefet(double epa_cmos_kwh_per_cm2, double epa_fe_layer_kwh_per_cm2,
                 double area_efficiency) {
    check_area_efficiency(area_efficiency);
    return epa_cmos_kwh_per_cm2 + epa_fe_layer_kwh_per_cm2 * area_efficiency;
}

double gpa_fefet(double gpa_cmos_kg_per_cm2, double gpa_fe_layer_kg_per_cm2,
                 double area_efficiency) {
    check_area_efficiency(area_efficiency);
    return gpa_cmos_kg_per_cm2 + gpa_fe_layer_kg_per_cm2 * area_efficiency;
}

CpaBreakdown cpa(const FabBaseline& fab, double epa_total_kwh_per_cm2,
                 double gpa_total_kg_per_cm2, double mpa_total_kg_per_cm2) {
    if (!(fab.fab_yield > 0.0) || fab.fab_yield > 1.0)
        throw ValidationError("fab yield must be in (0, 1]");
    if (epa_total_kwh_per_cm2 < 0.0 || gpa_total_kg_per_cm2 < 0.0 || mpa_total_kg_per_cm2 < 0.0)
        throw ValidationError("per-area terms must be >= 0");

    CpaBreakdown b;
    b.epa_total_kwh_per_cm2 = epa_total_kwh_per_cm2;
    b.energy_term_kg_per_cm2 = fab.carbon_intensity_kg_per_kwh * epa_total_kwh_per_cm2;
    b.gas_term_kg_per_cm2 = gpa_total_kg_per_cm2;
    b.material_term_kg_per_cm2 = mpa_total_kg_per_cm2;
    b.total_cpa_kg_per_cm2 =
        (b.energy_term_kg_per_cm2 + b.gas_term_kg_per_cm2 + b.material_term_kg_per_cm2) /
        fab.fab_yield;
    return b;
}

double array_area_cm2(double capacity_bits, const DeviceSpec& device, const FabBaseline& fab,
                      double area_efficiency) {
    if (capacity_bits < 0.0) throw ValidationError("capacity must be >= 0 bits");
    if (!(area_efficiency > 0.0) || area_efficiency > 1.0)
        throw ValidationError("area efficiency must be in (0, 1]");
    device.validate();
    const double f_cm2 = fab.node_nm * fab.node_nm * units::cm2_per_nm2;
    return capacity_bits * device.cell_area_f2 * f_cm2 / area_efficiency;
}

double embodied_carbon_kg(double area_cm2, double cpa_kg_per_cm2) {
    if (area_cm2 < 0.0) throw ValidationError("area must be >= 0 cm^2");
    return cpa_kg_per_cm2 * area_cm2;
}

double embodied_per_mb(double capacity_bits, double area_cm2, double cpa_kg_per_cm2) {
    if (!(capacity_bits > 0.0))
        throw ValidationError("per-MB embodied carbon requires capacity > 0");
    return embodied_carbon_kg(area_cm2, cpa_kg_per_cm2) / units::mb_from_bits(capacity_bits);
}

CpaBreakdown device_cpa(const DeviceSpec& device, const FabBaseline& fab,
                        const ProcessRecipe& recipe, const GhgModel& ghg,
                        double area_efficiency) {
    device.validate();
    fab.validate();

    if (!device.is_fefet) {
        return cpa(fab, fab.epa_cmos_kwh_per_cm2, fab.gpa_cmos_kg_per_cm2,
                   fab.mpa_cmos_kg_per_cm2);
    }

    const double fe_epa =
        epa_fe_layer(recipe, device.thickness_overrides()).nominal_kwh_per_cm2;
    const double fe_gpa_kg =
        gpa_fe_layer_ug_per_cm2(device.al2o3_thickness_nm, ghg) * units::kg_per_ug;

    const double epa_total = epa_fefet(fab.epa_cmos_kwh_per_cm2, fe_epa, area_efficiency);
    const double gpa_total = gpa_fefet(fab.gpa_cmos_kg_per_cm2, fe_gpa_kg, area_efficiency);

    CpaBreakdown b = cpa(fab, epa_total, gpa_total, fab.mpa_cmos_kg_per_cm2);
    b.fe_epa_share = epa_total > 0.0 ? fe_epa * area_efficiency / epa_total : 0.0;
    return b;
}

}  // namespace memcarbon
