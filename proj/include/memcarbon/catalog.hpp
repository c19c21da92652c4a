#pragma once

#include <string>
#include <vector>

namespace memcarbon {

// Ingested memory-array characterizations: one record per array configuration
// under a named optimization target, plus per-access operational carbon.

enum class OptTarget {
    Area,
    ReadDynamicEnergy,
    ReadEDP,
    WriteEDP,
    ReadLatency,
    WriteLatency,
    LeakagePower,
};

const char* to_string(OptTarget t);
OptTarget opt_target_from_string(const std::string& s);

struct MemoryDesignPoint {
    std::string device_name;
    double capacity_bits = 0.0;
    OptTarget opt_target = OptTarget::Area;
    double area_cm2 = 0.0;
    double area_efficiency = 0.0;  // in (0, 1]
    double read_latency_ns = 0.0;
    double write_latency_ns = 0.0;
    double read_energy_pj = 0.0;
    double write_energy_pj = 0.0;
    double leakage_power_mw = 0.0;
    double data_width_bits = 0.0;  // must divide capacity

    void validate() const;
    // Value a given optimization target minimizes; EDP targets are
    // energy x latency products.
    double metric(OptTarget target) const;
};

struct AccessCarbon {
    double read_kg_per_access = 0.0;
    double write_kg_per_access = 0.0;
    double ci_used_kg_per_kwh = 0.0;
};

// Immutable after load; duplicate (device, capacity, target) keys rejected.
class DesignPointCatalog {
public:
    void insert(MemoryDesignPoint dp);

    // Record minimizing the target metric among matching (device, capacity).
    // Ties break to smallest area, then lexicographic device name.
    const MemoryDesignPoint& select(const std::string& device, double capacity_bits,
                                    OptTarget target) const;

    const std::vector<MemoryDesignPoint>& records() const { return records_; }
    std::size_t size() const { return records_.size(); }
    bool empty() const { return records_.empty(); }

    // Free-text dataset origin; illustrative datasets must say so.
    std::string provenance;
    bool non_authoritative = false;

private:
    std::vector<MemoryDesignPoint> records_;
};

// Dynamic access energy (optionally charging leakage over the access
// interval) converted through the grid carbon intensity.
AccessCarbon per_access_carbon(const MemoryDesignPoint& dp, double ci_kg_per_kwh,
                               bool include_leakage = true);

}  // namespace memcarbon
