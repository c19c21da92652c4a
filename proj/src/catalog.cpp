#include "memcarbon/catalog.hpp"

#include <cmath>
#include <sstream>

#include "memcarbon/errors.hpp"
#include "memcarbon/units.hpp"

namespace memcarbon {

const char* to_string(OptTarget t) {
    switch (t) {
        case OptTarget::Area: return "Area";
        case OptTarget::ReadDynamicEnergy: return "ReadDynamicEnergy";
        case OptTarget::ReadEDP: return "ReadEDP";
        case OptTarget::WriteEDP: return "WriteEDP";
        case OptTarget::ReadLatency: return "ReadLatency";
        case OptTarget::WriteLatency: return "WriteLatency";
        case OptTarget::LeakagePower: return "LeakagePower";
    }
    return "Area";
}

OptTarget opt_target_from_string(const std::string& s) {
    if (s == "Area") return OptTarget::Area;
    if (s == "ReadDynamicEnergy" || s == "RDE") return OptTarget::ReadDynamicEnergy;
    if (s == "ReadEDP" || s == "REDP") return OptTarget::ReadEDP;
    if (s == "WriteEDP" || s == "WEDP") return OptTarget::WriteEDP;
    if (s == "ReadLatency") return OptTarget::ReadLatency;
    if (s == "WriteLatency") return OptTarget::WriteLatency;
    if (s == "LeakagePower") return OptTarget::LeakagePower;
    throw SchemaError("unknown opt_target '" + s + "'");
}

void MemoryDesignPoint::validate() const {
    const std::string id = device_name + "/" + to_string(opt_target);
    if (!(capacity_bits > 0.0))
        throw ValidationError("design point " + id + ": capacity must be > 0 bits");
    if (area_cm2 < 0.0 || read_latency_ns < 0.0 || write_latency_ns < 0.0 ||
        read_energy_pj < 0.0 || write_energy_pj < 0.0 || leakage_power_mw < 0.0)
        throw ValidationError("design point " + id + ": metrics must be >= 0");
    if (!(area_efficiency > 0.0) || area_efficiency > 1.0)
        throw ValidationError("design point " + id + ": area_efficiency must be in (0, 1]");
    if (!(data_width_bits > 0.0))
        throw ValidationError("design point " + id + ": data_width must be > 0 bits");
    if (std::fmod(capacity_bits, data_width_bits) != 0.0)
        throw ValidationError("design point " + id + ": data_width must divide capacity");
}

double MemoryDesignPoint::metric(OptTarget target) const {
    switch (target) {
        case OptTarget::Area: return area_cm2;
        case OptTarget::ReadDynamicEnergy: return read_energy_pj;
        case OptTarget::ReadEDP: return read_energy_pj * read_latency_ns;
        case OptTarget::WriteEDP: return write_energy_pj * write_latency_ns;
        case OptTarget::ReadLatency: return read_latency_ns;
        case OptTarget::WriteLatency: return write_latency_ns;
        case OptTarget::LeakagePower: return leakage_power_mw;
    }
    return area_cm2;
}

void DesignPointCatalog::insert(MemoryDesignPoint dp) {
    dp.validate();
    for (const auto& r : records_) {
        if (r.device_name == dp.device_name && r.capacity_bits == dp.capacity_bits &&
            r.opt_target == dp.opt_target) {
            std::ostringstream msg;
            msg << "duplicate design point (" << dp.device_name << ", " << dp.capacity_bits
                << " bits, " << to_string(dp.opt_target) << ")";
            throw ValidationError(msg.str());
        }
    }
    records_.push_back(std::move(dp));
}

const MemoryDesignPoint& DesignPointCatalog::select(const std::string& device,
                                                    double capacity_bits,
                                                    OptTarget target) const {
    const MemoryDesignPoint* best = nullptr;
    for (const auto& r : records_) {
        if (r.device_name != device || r.capacity_bits != capacity_bits) continue;
        if (best == nullptr) {
            best = &r;
            continue;
        }
        const double m = r.metric(target);
        const double bm = best->metric(target);
        if (m < bm) {
            best = &r;
        } else if (m == bm) {
            if (r.area_cm2 < best->area_cm2 ||
                (r.area_cm2 == best->area_cm2 && r.device_name < best->device_name)) {
                best = &r;
            }
        }
    }
    if (best == nullptr) {
        std::ostringstream msg;
        msg << "no design point for (" << device << ", " << capacity_bits << " bits)";
        throw NotFoundError(msg.str());
    }
    return *best;
}

AccessCarbon per_access_carbon(const MemoryDesignPoint& dp, double ci_kg_per_kwh,
                               bool include_leakage) {
    if (!(ci_kg_per_kwh > 0.0)) throw ValidationError("carbon intensity must be > 0");

    const double leak_w = dp.leakage_power_mw * units::watts_per_mw;
    double read_j = dp.read_energy_pj * units::joules_per_pj;
    double write_j = dp.write_energy_pj * units::joules_per_pj;
    if (include_leakage) {
        read_j += leak_w * dp.read_latency_ns * units::seconds_per_ns;
        write_j += leak_w * dp.write_latency_ns * units::seconds_per_ns;
    }

    AccessCarbon ac;
    ac.read_kg_per_access = units::kwh_from_joules(read_j) * ci_kg_per_kwh;
    ac.write_kg_per_access = units::kwh_from_joules(write_j) * ci_kg_per_kwh;
    ac.ci_used_kg_per_kwh = ci_kg_per_kwh;
    return ac;
}

}  // namespace memcarbon
