#pragma once

namespace memcarbon::units {

// Internal computations run in seconds, watts, joules, and cm^2.
// kWh, pJ, mW, ns, and µg appear only at I/O boundaries.

inline constexpr double joules_per_kwh = 3.6e6;
inline constexpr double kg_per_ug = 1e-9;
inline constexpr double cm_per_nm = 1e-7;
inline constexpr double cm2_per_nm2 = 1e-14;
inline constexpr double joules_per_pj = 1e-12;
inline constexpr double watts_per_mw = 1e-3;
inline constexpr double seconds_per_ns = 1e-9;

// Memory-array convention: 1 MB = 2^20 bytes.
inline constexpr double bits_per_mb = 8.0 * 1024.0 * 1024.0;

inline constexpr double kwh_from_joules(double j) { return j / joules_per_kwh; }
inline constexpr double joules_from_kwh(double kwh) { return kwh * joules_per_kwh; }
inline constexpr double mb_from_bits(double bits) { return bits / bits_per_mb; }

}  // namespace memcarbon::units
