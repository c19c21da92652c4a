#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace memcarbon {

// ALD process model for the ferroelectric gate stack: stage timeline, tool
// energy per wafer area (with seeded Monte Carlo uncertainty), and process-gas
// emission per unit area.

enum class PowerClass { preheat, steady };

const char* to_string(PowerClass pc);
PowerClass power_class_from_string(const std::string& s);

// One deposited film. Film grows rate_nm_per_cycle per ALD cycle of cycle_s.
struct LayerProcess {
    std::string name;
    double thickness_nm = 0.0;
    double rate_nm_per_cycle = 0.0;
    double cycle_s = 0.0;

    void validate() const;
};

// Non-deposition stage with a fixed duration (chamber preheat, stabilization).
struct FixedStage {
    std::string name;
    double duration_s = 0.0;
    PowerClass power_class = PowerClass::steady;

    void validate() const;
};

struct ToolPowerModel {
    double p_preheat_w = 0.0;
    double p_steady_w = 0.0;
    // Chamber + pump share of total tool power; reporting metadata only, the
    // energy model consumes the total.
    double chamber_pump_fraction = 0.70;
    // Per-stage Gaussian sigma as a fraction of nominal power (3σ = 10%).
    double sigma_fraction = 0.10 / 3.0;

    void validate() const;
};

struct ProcessRecipe {
    std::vector<FixedStage> fixed_stages;
    std::vector<LayerProcess> layers;
    double wafer_area_cm2 = 0.0;
    double facility_overhead = 0.40;  // in [0, 1)
    ToolPowerModel power;

    void validate() const;
    const LayerProcess* find_layer(const std::string& name) const;
};

// Process-gas accounting. Only CH4 from the Al2O3 deposition step is modeled;
// emitted mass scales with film thickness.
struct GhgModel {
    double ghg_rate_ug_per_nm_cm2 = 26.9;  // CH4 mass per nm of film per cm^2
    double gwp = 28.0;                     // CH4, 100-year horizon
    double destruction_efficiency = 0.9;   // abatement removal fraction

    void validate() const;
};

// One scheduled slot of the process timeline.
struct StageSlot {
    std::string name;
    double duration_s = 0.0;
    PowerClass power_class = PowerClass::steady;
};

struct MonteCarloSpec {
    int samples = 0;
    std::uint64_t seed = 0;
};

// Energy per area under tool-power uncertainty. samples is empty when no
// Monte Carlo was requested; then mean == nominal and stddev == 0.
struct EpaDistribution {
    double nominal_kwh_per_cm2 = 0.0;
    std::vector<double> samples;  // kWh/cm^2
    double mean = 0.0;
    double stddev = 0.0;          // sample stddev (N-1)
    std::uint64_t seed = 0;
};

// Layer-name -> thickness (nm) overrides applied on top of recipe layers.
using ThicknessMap = std::map<std::string, double>;

// (thickness / rate) * cycle time. Zero thickness deposits in zero time.
double deposition_time_s(const LayerProcess& layer);

// Fixed stages in recipe order, then one deposition slot per layer.
// Deposition runs at steady power. Unknown names in overrides are rejected.
std::vector<StageSlot> stage_timeline(const ProcessRecipe& recipe,
                                      const ThicknessMap& thickness_overrides = {});

double timeline_total_s(const std::vector<StageSlot>& timeline);

// Sum of stage tool energies divided by wafer area net of facility overhead.
// With mc set, every stage power is redrawn per sample from a Gaussian with
// sigma = sigma_fraction * nominal (independent per stage, negative draws
// clamped to zero); sampling is deterministic in (seed, sample index).
EpaDistribution epa_fe_layer(const ProcessRecipe& recipe,
                             const ThicknessMap& thickness_overrides = {},
                             const std::optional<MonteCarloSpec>& mc = std::nullopt);

// Root-sum-square propagation of the per-stage power sigmas, in kWh/cm^2.
double epa_fe_layer_sigma(const ProcessRecipe& recipe,
                          const ThicknessMap& thickness_overrides = {});

struct CalibrationResult {
    double factor = 1.0;    // applied to both nominal powers
    ProcessRecipe recipe;   // recipe with scaled powers
};

// Linear rescale of both tool powers so that epa_fe_layer reproduces
// target_epa on the given timeline. Fails when the timeline has no energy.
CalibrationResult calibrate_power(ProcessRecipe recipe, double target_epa_kwh_per_cm2,
                                  const ThicknessMap& thickness_overrides = {});

// CH4 mass per unit area emitted while depositing t nm of Al2O3.
double ch4_mass_ug_per_cm2(double al2o3_thickness_nm, const GhgModel& ghg);

// CO2-equivalent emission per unit area surviving abatement.
double gpa_fe_layer_ug_per_cm2(double al2o3_thickness_nm, const GhgModel& ghg);

}  // namespace memcarbon
