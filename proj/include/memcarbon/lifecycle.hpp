#pragma once

#include <limits>

namespace memcarbon {

// Endurance-limited lifetime and life-cycle footprint composition:
// total = operational + (runtime / lifetime) * embodied.

// Write traffic assumed spread uniformly across the array capacity.
struct WritePattern {
    double writes_per_day = 0.0;
    double access_width_bits = 0.0;
    double memory_capacity_bits = 0.0;

    // Width and capacity must be positive; a zero write rate is legal and
    // yields the unlimited-lifetime sentinel rather than an error.
    void validate() const;
};

inline constexpr double unlimited_lifetime_days = std::numeric_limits<double>::infinity();

inline bool is_unlimited(double lifetime_days) {
    return lifetime_days == unlimited_lifetime_days;
}

// endurance * capacity / (write rate * access width), in days. Unlimited
// endurance or zero write traffic maps to the sentinel.
double lifetime_days(double endurance_cycles, const WritePattern& pattern);

double operational_carbon_kg(double energy_kwh, double ci_kg_per_kwh);

struct LifecycleResult {
    double ocf_kg = 0.0;
    double ecf_kg = 0.0;
    double runtime_days = 0.0;
    double lifetime_days = unlimited_lifetime_days;
    double total_kg = 0.0;
    bool past_rated_lifetime = false;  // runtime exceeded the rated lifetime
};

// Embodied share prorated by runtime over lifetime; runtime past the rated
// lifetime is permitted and flagged, never clamped.
LifecycleResult total_cf(double ocf_kg, double ecf_kg, double runtime_days,
                         double lifetime_days);

}  // namespace memcarbon
