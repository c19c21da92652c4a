#include "memcarbon/system.hpp"

#include <algorithm>

#include "memcarbon/errors.hpp"
#include "memcarbon/units.hpp"

namespace memcarbon {

void AcceleratorConfig::validate() const {
    if (pe_rows <= 0 || pe_cols <= 0)
        throw ValidationError("accelerator '" + name + "': PE array dimensions must be > 0");
    if (!(compute_area_cm2 > 0.0))
        throw ValidationError("accelerator '" + name + "': compute area must be > 0 cm^2");
    if (compute_energy_per_mac_pj < 0.0)
        throw ValidationError("accelerator '" + name + "': MAC energy must be >= 0 pJ");
    for (const auto& b : buffers) {
        if (b.role.empty())
            throw ValidationError("accelerator '" + name + "': buffer role must be named");
        if (!(b.capacity_bits > 0.0))
            throw ValidationError("buffer '" + b.role + "': capacity must be > 0 bits");
    }
}

void WorkloadProfile::validate() const {
    if (mac_count < 0.0) throw ValidationError("workload '" + name + "': MAC count must be >= 0");
    if (!(execution_time_s > 0.0))
        throw ValidationError("workload '" + name + "': execution time must be > 0 s");
    if (inferences_per_day < 0.0)
        throw ValidationError("workload '" + name + "': inference rate must be >= 0");
    for (const auto& t : traffic) {
        if (t.reads_per_inference < 0.0 || t.writes_per_inference < 0.0)
            throw ValidationError("workload '" + name + "': access counts must be >= 0");
    }
}

const BufferTraffic* WorkloadProfile::find(const std::string& role) const {
    auto it = std::find_if(traffic.begin(), traffic.end(),
                           [&](const BufferTraffic& t) { return t.role == role; });
    return it == traffic.end() ? nullptr : &*it;
}

namespace {

const MemoryDesignPoint& resolve_buffer(const BufferSlot& slot,
                                        const DesignPointCatalog& catalog) {
    try {
        return catalog.select(slot.device, slot.capacity_bits, slot.opt_target);
    } catch (const NotFoundError&) {
        throw NotFoundError("buffer '" + slot.role + "': no design point for device '" +
                            slot.device + "' at this capacity");
    }
}

}  // namespace

SystemCarbonReport system_embodied(const AcceleratorConfig& config, const FabBaseline& fab,
                                   const DeviceTable& devices, const DesignPointCatalog& catalog,
                                   const ProcessRecipe& recipe, const GhgModel& ghg) {
    config.validate();
    fab.validate();

    SystemCarbonReport report;
    const CpaBreakdown baseline =
        cpa(fab, fab.epa_cmos_kwh_per_cm2, fab.gpa_cmos_kg_per_cm2, fab.mpa_cmos_kg_per_cm2);

    ComponentEmbodied compute;
    compute.component = "compute";
    compute.device = "CMOS";
    compute.area_cm2 = config.compute_area_cm2;
    compute.cpa_kg_per_cm2 = baseline.total_cpa_kg_per_cm2;
    compute.embodied_kg = embodied_carbon_kg(compute.area_cm2, compute.cpa_kg_per_cm2);
    report.embodied_components.push_back(compute);

    for (const auto& slot : config.buffers) {
        const MemoryDesignPoint& dp = resolve_buffer(slot, catalog);
        const DeviceSpec& device = devices.find(slot.device);

        ComponentEmbodied c;
        c.component = slot.role;
        c.device = slot.device;
        c.area_cm2 = dp.area_cm2;
        // The design point supplies the measured area efficiency that weights
        // the FE-layer terms.
        c.cpa_kg_per_cm2 = device.is_fefet
                               ? device_cpa(device, fab, recipe, ghg, dp.area_efficiency)
                                     .total_cpa_kg_per_cm2
                               : baseline.total_cpa_kg_per_cm2;
        c.embodied_kg = embodied_carbon_kg(c.area_cm2, c.cpa_kg_per_cm2);
        report.embodied_components.push_back(c);
    }

    for (const auto& c : report.embodied_components) report.embodied_total_kg += c.embodied_kg;
    return report;
}

SystemCarbonReport per_inference_operational(const AcceleratorConfig& config,
                                             const WorkloadProfile& workload,
                                             double ci_kg_per_kwh,
                                             const DesignPointCatalog& catalog) {
    config.validate();
    workload.validate();
    if (!(ci_kg_per_kwh > 0.0)) throw ValidationError("carbon intensity must be > 0");

    SystemCarbonReport report;
    report.ci_used_kg_per_kwh = ci_kg_per_kwh;
    const auto to_kg = [&](double joules) {
        return units::kwh_from_joules(joules) * ci_kg_per_kwh;
    };

    for (const auto& slot : config.buffers) {
        const MemoryDesignPoint& dp = resolve_buffer(slot, catalog);
        const BufferTraffic* traffic = workload.find(slot.role);
        const double reads = traffic ? traffic->reads_per_inference : 0.0;
        const double writes = traffic ? traffic->writes_per_inference : 0.0;

        ComponentOperational c;
        c.component = slot.role;
        c.dynamic_kg = to_kg(reads * dp.read_energy_pj * units::joules_per_pj +
                             writes * dp.write_energy_pj * units::joules_per_pj);
        c.leakage_kg = to_kg(dp.leakage_power_mw * units::watts_per_mw *
                             workload.execution_time_s);
        report.operational_components.push_back(c);
        report.dynamic_kg += c.dynamic_kg;
        report.leakage_kg += c.leakage_kg;
    }

    report.compute_kg =
        to_kg(workload.mac_count * config.compute_energy_per_mac_pj * units::joules_per_pj);
    report.buffers_only_kg = report.dynamic_kg + report.leakage_kg;
    report.operational_total_kg = report.buffers_only_kg + report.compute_kg;
    return report;
}

std::vector<BufferLifetime> buffer_write_lifetimes(const AcceleratorConfig& config,
                                                   const WorkloadProfile& workload,
                                                   const DeviceTable& devices,
                                                   const DesignPointCatalog& catalog) {
    config.validate();
    workload.validate();

    std::vector<BufferLifetime> lifetimes;
    for (const auto& slot : config.buffers) {
        const MemoryDesignPoint& dp = resolve_buffer(slot, catalog);
        const DeviceSpec& device = devices.find(slot.device);
        const BufferTraffic* traffic = workload.find(slot.role);
        const double writes = traffic ? traffic->writes_per_inference : 0.0;

        WritePattern pattern;
        pattern.writes_per_day = writes * workload.inferences_per_day;
        pattern.access_width_bits = dp.data_width_bits;
        pattern.memory_capacity_bits = slot.capacity_bits;

        lifetimes.push_back({slot.role, slot.device,
                             lifetime_days(device.endurance_cycles, pattern)});
    }
    return lifetimes;
}

SystemCarbonReport evaluate_system(const AcceleratorConfig& config,
                                   const WorkloadProfile& workload, const FabBaseline& fab,
                                   const DeviceTable& devices, const DesignPointCatalog& catalog,
                                   const ProcessRecipe& recipe, const GhgModel& ghg) {
    SystemCarbonReport report = system_embodied(config, fab, devices, catalog, recipe, ghg);
    const SystemCarbonReport op = per_inference_operational(
        config, workload, fab.carbon_intensity_kg_per_kwh, catalog);

    report.operational_components = op.operational_components;
    report.dynamic_kg = op.dynamic_kg;
    report.leakage_kg = op.leakage_kg;
    report.compute_kg = op.compute_kg;
    report.buffers_only_kg = op.buffers_only_kg;
    report.operational_total_kg = op.operational_total_kg;
    report.ci_used_kg_per_kwh = op.ci_used_kg_per_kwh;

    report.buffer_lifetimes = buffer_write_lifetimes(config, workload, devices, catalog);
    for (const auto& bl : report.buffer_lifetimes) {
        if (bl.lifetime_days < report.limiting_lifetime_days) {
            report.limiting_lifetime_days = bl.lifetime_days;
            report.limiting_buffer_role = bl.role;
        }
    }
    return report;
}

}  // namespace memcarbon
