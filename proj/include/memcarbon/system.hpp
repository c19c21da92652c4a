#pragma once

#include <string>
#include <vector>

#include "memcarbon/catalog.hpp"
#include "memcarbon/embodied.hpp"
#include "memcarbon/lifecycle.hpp"

namespace memcarbon {

// Composes on-chip buffers and a compute array into system-level embodied
// carbon and per-inference operational carbon.

// A buffer slot resolved against the design-point catalog.
struct BufferSlot {
    std::string role;    // "weight" | "io"
    std::string device;  // device name, resolved in catalog and device table
    double capacity_bits = 0.0;
    OptTarget opt_target = OptTarget::Area;
};

struct AcceleratorConfig {
    std::string name;
    int pe_rows = 0;
    int pe_cols = 0;
    double compute_area_cm2 = 0.0;
    double compute_energy_per_mac_pj = 0.0;
    std::vector<BufferSlot> buffers;

    void validate() const;
};

struct BufferTraffic {
    std::string role;
    double reads_per_inference = 0.0;
    double writes_per_inference = 0.0;
};

// Workload summary (access counts and execution time), not a trace.
struct WorkloadProfile {
    std::string name;
    double mac_count = 0.0;  // per inference
    std::vector<BufferTraffic> traffic;
    double execution_time_s = 0.0;  // per inference
    double inferences_per_day = 0.0;
    std::string note;  // free-text origin of the summary

    void validate() const;
    const BufferTraffic* find(const std::string& role) const;
};

struct ComponentEmbodied {
    std::string component;  // "compute" or buffer role
    std::string device;
    double area_cm2 = 0.0;
    double cpa_kg_per_cm2 = 0.0;
    double embodied_kg = 0.0;
};

struct ComponentOperational {
    std::string component;
    double dynamic_kg = 0.0;  // per inference
    double leakage_kg = 0.0;  // per inference
};

struct BufferLifetime {
    std::string role;
    std::string device;
    double lifetime_days = unlimited_lifetime_days;
};

struct SystemCarbonReport {
    // Embodied section.
    std::vector<ComponentEmbodied> embodied_components;
    double embodied_total_kg = 0.0;

    // Operational section, all per inference.
    std::vector<ComponentOperational> operational_components;
    double dynamic_kg = 0.0;
    double leakage_kg = 0.0;
    double compute_kg = 0.0;
    double operational_total_kg = 0.0;
    double buffers_only_kg = 0.0;
    double ci_used_kg_per_kwh = 0.0;

    // Lifetime section.
    std::vector<BufferLifetime> buffer_lifetimes;
    std::string limiting_buffer_role;  // empty when nothing limits
    double limiting_lifetime_days = unlimited_lifetime_days;
};

// Embodied per component: area times the component's CPA (device CPA for
// FeFET buffers, baseline CPA for SRAM buffers and compute). Buffer areas
// come from the catalog design points.
SystemCarbonReport system_embodied(const AcceleratorConfig& config, const FabBaseline& fab,
                                   const DeviceTable& devices, const DesignPointCatalog& catalog,
                                   const ProcessRecipe& recipe, const GhgModel& ghg);

// Per-inference operational carbon: buffer dynamic accesses, buffer leakage
// over the execution interval, and compute-array MAC energy.
SystemCarbonReport per_inference_operational(const AcceleratorConfig& config,
                                             const WorkloadProfile& workload,
                                             double ci_kg_per_kwh,
                                             const DesignPointCatalog& catalog);

// Endurance-limited lifetime per buffer, with write rate derived from
// per-inference write counts and the inference rate.
std::vector<BufferLifetime> buffer_write_lifetimes(const AcceleratorConfig& config,
                                                   const WorkloadProfile& workload,
                                                   const DeviceTable& devices,
                                                   const DesignPointCatalog& catalog);

// All three sections composed into one report.
SystemCarbonReport evaluate_system(const AcceleratorConfig& config,
                                   const WorkloadProfile& workload, const FabBaseline& fab,
                                   const DeviceTable& devices, const DesignPointCatalog& catalog,
                                   const ProcessRecipe& recipe, const GhgModel& ghg);

}  // namespace memcarbon
