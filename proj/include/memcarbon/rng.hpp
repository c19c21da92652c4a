#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace memcarbon {

// splitmix64 mixing step; full avalanche, used to derive substream seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Per-sample Gaussian stream. Each stream is seeded from (seed, index) only,
// so results do not depend on how samples are scheduled across threads.
// mt19937_64 and the Box-Muller transform below are fully specified, giving
// identical sequences for identical seeds.
class GaussianStream {
public:
    GaussianStream(std::uint64_t seed, std::uint64_t sample_index)
        : engine_(splitmix64(splitmix64(seed) ^ (sample_index + 0x51ed2701a3c5e8f7ULL))) {}

    double next(double mean, double sigma) {
        const double u1 = uniform01_open();
        const double u2 = uniform01_open();
        const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * pi_ * u2);
        return mean + sigma * z;
    }

private:
    // (0, 1]; keeps log() finite.
    double uniform01_open() {
        return 1.0 - static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    static constexpr double pi_ = 3.14159265358979323846;
    std::mt19937_64 engine_;
};

}  // namespace memcarbon
