#include "memcarbon/lifecycle.hpp"

#include "memcarbon/errors.hpp"

namespace memcarbon {

void WritePattern::validate() const {
    if (writes_per_day < 0.0) throw ValidationError("write rate must be >= 0 per day");
    if (!(access_width_bits > 0.0)) throw ValidationError("access width must be > 0 bits");
    if (!(memory_capacity_bits > 0.0)) throw ValidationError("capacity must be > 0 bits");
}

double lifetime_days(double endurance_cycles, const WritePattern& pattern) {
    pattern.validate();
    if (!(endurance_cycles >= 1.0)) throw ValidationError("endurance must be >= 1 cycle");
    if (pattern.writes_per_day == 0.0 || is_unlimited(endurance_cycles))
        return unlimited_lifetime_days;
    return endurance_cycles * pattern.memory_capacity_bits /
           (pattern.writes_per_day * pattern.access_width_bits);
}

double operational_carbon_kg(double energy_kwh, double ci_kg_per_kwh) {
    if (energy_kwh < 0.0) throw ValidationError("energy must be >= 0 kWh");
    if (ci_kg_per_kwh < 0.0) throw ValidationError("carbon intensity must be >= 0");
    return energy_kwh * ci_kg_per_kwh;
}

LifecycleResult total_cf(double ocf_kg, double ecf_kg, double runtime_days,
                         double lifetime_days) {
    if (!(lifetime_days > 0.0)) throw ValidationError("lifetime must be > 0 days");
    if (runtime_days < 0.0) throw ValidationError("runtime must be >= 0 days");
    if (ocf_kg < 0.0 || ecf_kg < 0.0) throw ValidationError("carbon terms must be >= 0");

    LifecycleResult r;
    r.ocf_kg = ocf_kg;
    r.ecf_kg = ecf_kg;
    r.runtime_days = runtime_days;
    r.lifetime_days = lifetime_days;
    r.past_rated_lifetime = runtime_days > lifetime_days;
    const double amortization = is_unlimited(lifetime_days) ? 0.0 : runtime_days / lifetime_days;
    r.total_kg = ocf_kg + amortization * ecf_kg;
    return r;
}

}  // namespace memcarbon
