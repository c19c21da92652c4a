#pragma once

#include "memcarbon/embodied.hpp"
#include "memcarbon/recipe.hpp"

namespace memcarbon::defaults {

// EPA anchor the default recipe's tool powers are calibrated against.
inline constexpr double fe_layer_epa_kwh_per_cm2 = 0.26;

// Default preheat-to-steady tool power ratio. The shipped recipe fixes the
// ratio and calibrates the absolute magnitudes to the EPA anchor.
inline constexpr double preheat_power_ratio = 1.5;

// Default area efficiency when no characterized design point supplies one.
inline constexpr double area_efficiency = 0.95;

// 100 mm research wafer.
inline constexpr double wafer_area_cm2 = 78.54;

// ALD recipe for a 20 nm HZO + 3 nm Al2O3 gate stack: preheat 3600 s,
// stabilization 3029 s, deposition per layer; powers pre-calibrated so the
// nominal EPA equals the anchor.
ProcessRecipe recipe();

GhgModel ghg();

// 28 nm CMOS per-area constants and grid carbon intensity.
FabBaseline fab();

// Published HZO FeFET device corpus (HZO1..HZO7, 30 F^2 cells) plus a
// 146 F^2 SRAM baseline with unlimited endurance.
DeviceTable devices();

}  // namespace memcarbon::defaults
