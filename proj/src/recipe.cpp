#include "memcarbon/recipe.hpp"

#include <algorithm>
#include <cmath>

#include "memcarbon/errors.hpp"
#include "memcarbon/rng.hpp"
#include "memcarbon/units.hpp"

namespace memcarbon {

const char* to_string(PowerClass pc) {
    return pc == PowerClass::preheat ? "preheat" : "steady";
}

PowerClass power_class_from_string(const std::string& s) {
    if (s == "preheat") return PowerClass::preheat;
    if (s == "steady") return PowerClass::steady;
    throw SchemaError("unknown power_class '" + s + "' (expected preheat|steady)");
}

void LayerProcess::validate() const {
    if (thickness_nm < 0.0)
        throw ValidationError("layer '" + name + "': thickness must be >= 0 nm");
    if (!(rate_nm_per_cycle > 0.0))
        throw ValidationError("layer '" + name + "': deposition rate must be > 0 nm/cycle");
    if (!(cycle_s > 0.0))
        throw ValidationError("layer '" + name + "': cycle time must be > 0 s");
}

void FixedStage::validate() const {
    if (duration_s < 0.0)
        throw ValidationError("stage '" + name + "': duration must be >= 0 s");
}

void ToolPowerModel::validate() const {
    if (!(p_preheat_w > 0.0) || !(p_steady_w > 0.0))
        throw ValidationError("tool powers must be > 0 W");
    if (chamber_pump_fraction < 0.0 || chamber_pump_fraction > 1.0)
        throw ValidationError("chamber_pump_fraction must be in [0, 1]");
    if (sigma_fraction < 0.0)
        throw ValidationError("sigma_fraction must be >= 0");
}

void ProcessRecipe::validate() const {
    for (const auto& s : fixed_stages) s.validate();
    for (const auto& l : layers) l.validate();
    if (!(wafer_area_cm2 > 0.0))
        throw ValidationError("wafer area must be > 0 cm^2");
    if (facility_overhead < 0.0 || facility_overhead >= 1.0)
        throw ValidationError("facility_overhead must be in [0, 1)");
    power.validate();
}

const LayerProcess* ProcessRecipe::find_layer(const std::string& name) const {
    auto it = std::find_if(layers.begin(), layers.end(),
                           [&](const LayerProcess& l) { return l.name == name; });
    return it == layers.end() ? nullptr : &*it;
}

void GhgModel::validate() const {
    if (ghg_rate_ug_per_nm_cm2 < 0.0) throw ValidationError("ghg_rate must be >= 0");
    if (gwp < 0.0) throw ValidationError("gwp must be >= 0");
    if (destruction_efficiency < 0.0 || destruction_efficiency > 1.0)
        throw ValidationError("destruction_efficiency must be in [0, 1]");
}

double deposition_time_s(const LayerProcess& layer) {
    layer.validate();
    return layer.thickness_nm / layer.rate_nm_per_cycle * layer.cycle_s;
}

std::vector<StageSlot> stage_timeline(const ProcessRecipe& recipe,
                                      const ThicknessMap& thickness_overrides) {
    for (const auto& [name, t] : thickness_overrides) {
        if (recipe.find_layer(name) == nullptr)
            throw SchemaError("thickness override references unknown layer '" + name + "'");
        if (t < 0.0)
            throw ValidationError("thickness override for '" + name + "' must be >= 0 nm");
    }

    std::vector<StageSlot> timeline;
    timeline.reserve(recipe.fixed_stages.size() + recipe.layers.size());
    for (const auto& s : recipe.fixed_stages) {
        s.validate();
        timeline.push_back({s.name, s.duration_s, s.power_class});
    }
    for (const auto& l : recipe.layers) {
        LayerProcess layer = l;
        if (auto it = thickness_overrides.find(l.name); it != thickness_overrides.end())
            layer.thickness_nm = it->second;
        timeline.push_back({l.name + " deposition", deposition_time_s(layer), PowerClass::steady});
    }
    return timeline;
}

double timeline_total_s(const std::vector<StageSlot>& timeline) {
    double total = 0.0;
    for (const auto& slot : timeline) total += slot.duration_s;
    return total;
}

namespace {

double stage_power_w(const ToolPowerModel& power, PowerClass pc) {
    return pc == PowerClass::preheat ? power.p_preheat_w : power.p_steady_w;
}

double epa_from_energy(double energy_j, const ProcessRecipe& recipe) {
    return units::kwh_from_joules(energy_j) /
           (recipe.wafer_area_cm2 * (1.0 - recipe.facility_overhead));
}

}  // namespace

EpaDistribution epa_fe_layer(const ProcessRecipe& recipe,
                             const ThicknessMap& thickness_overrides,
                             const std::optional<MonteCarloSpec>& mc) {
    if (recipe.facility_overhead >= 1.0)
        throw ValidationError("facility_overhead must be < 1");
    if (!(recipe.wafer_area_cm2 > 0.0))
        throw ValidationError("wafer area must be > 0 cm^2");
    recipe.power.validate();

    const auto timeline = stage_timeline(recipe, thickness_overrides);

    EpaDistribution dist;
    double nominal_energy_j = 0.0;
    for (const auto& slot : timeline)
        nominal_energy_j += slot.duration_s * stage_power_w(recipe.power, slot.power_class);
    dist.nominal_kwh_per_cm2 = epa_from_energy(nominal_energy_j, recipe);
    dist.mean = dist.nominal_kwh_per_cm2;

    if (!mc.has_value()) return dist;
    if (mc->samples < 0) throw ValidationError("Monte Carlo sample count must be >= 0");
    dist.seed = mc->seed;
    if (mc->samples == 0) return dist;

    dist.samples.resize(static_cast<std::size_t>(mc->samples));
    for (int i = 0; i < mc->samples; ++i) {
        GaussianStream stream(mc->seed, static_cast<std::uint64_t>(i));
        double energy_j = 0.0;
        for (const auto& slot : timeline) {
            const double nominal = stage_power_w(recipe.power, slot.power_class);
            const double drawn =
                std::max(0.0, stream.next(nominal, recipe.power.sigma_fraction * nominal));
            energy_j += slot.duration_s * drawn;
        }
        dist.samples[static_cast<std::size_t>(i)] = epa_from_energy(energy_j, recipe);
    }

    double sum = 0.0;
    for (double s : dist.samples) sum += s;
    dist.mean = sum / static_cast<double>(dist.samples.size());
    if (dist.samples.size() > 1) {
        double ss = 0.0;
        for (double s : dist.samples) ss += (s - dist.mean) * (s - dist.mean);
        dist.stddev = std::sqrt(ss / static_cast<double>(dist.samples.size() - 1));
    }
    return dist;
}

double epa_fe_layer_sigma(const ProcessRecipe& recipe, const ThicknessMap& thickness_overrides) {
    const auto timeline = stage_timeline(recipe, thickness_overrides);
    double sumsq = 0.0;
    for (const auto& slot : timeline) {
        const double stage_sigma_j = slot.duration_s * recipe.power.sigma_fraction *
                                     stage_power_w(recipe.power, slot.power_class);
        sumsq += stage_sigma_j * stage_sigma_j;
    }
    return epa_from_energy(std::sqrt(sumsq), recipe);
}

CalibrationResult calibrate_power(ProcessRecipe recipe, double target_epa_kwh_per_cm2,
                                  const ThicknessMap& thickness_overrides) {
    if (!(target_epa_kwh_per_cm2 > 0.0))
        throw ValidationError("calibration target EPA must be > 0 kWh/cm^2");
    const double current = epa_fe_layer(recipe, thickness_overrides).nominal_kwh_per_cm2;
    if (!(current > 0.0))
        throw ValidationError("calibration impossible: timeline has zero total energy");

    CalibrationResult result;
    result.factor = target_epa_kwh_per_cm2 / current;
    recipe.power.p_preheat_w *= result.factor;
    recipe.power.p_steady_w *= result.factor;
    result.recipe = std::move(recipe);
    return result;
}

double ch4_mass_ug_per_cm2(double al2o3_thickness_nm, const GhgModel& ghg) {
    ghg.validate();
    if (al2o3_thickness_nm < 0.0)
        throw ValidationError("film thickness must be >= 0 nm");
    return ghg.ghg_rate_ug_per_nm_cm2 * al2o3_thickness_nm;
}

double gpa_fe_layer_ug_per_cm2(double al2o3_thickness_nm, const GhgModel& ghg) {
    return ghg.gwp * ch4_mass_ug_per_cm2(al2o3_thickness_nm, ghg) *
           (1.0 - ghg.destruction_efficiency);
}

}  // namespace memcarbon
