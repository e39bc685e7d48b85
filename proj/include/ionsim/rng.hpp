#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "core.hpp"

namespace ionsim {

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Deterministic pseudo-random stream. Substreams are derived from
// (master seed, stream index) so that particle i always sees the same draws
// no matter how work is scheduled across threads.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(splitmix64(seed) ^ 0x5851f42d4c957f2dull)) {}

    static Rng substream(std::uint64_t master_seed, std::uint64_t stream_index) {
        return Rng(splitmix64(master_seed ^ splitmix64(stream_index + 0x9e3779b97f4a7c15ull)));
    }

    // Uniform in [0, 1).
    double uniform() {
        return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
    }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    // Exactly one draw per call, so optional branches keep streams aligned.
    bool bernoulli(double p) { return uniform() < p; }

    double normal(double mean = 0.0, double sigma = 1.0) {
        return std::normal_distribution<double>(mean, sigma)(engine_);
    }

    // Exponential inter-arrival time for a homogeneous Poisson process.
    double exponential(double rate) {
        return -std::log1p(-uniform()) / rate;
    }

    std::uint64_t poisson(double mean) {
        return std::poisson_distribution<std::uint64_t>(mean)(engine_);
    }

    std::uint64_t integer() { return engine_(); }

    std::mt19937_64& engine() { return engine_; }

  private:
    std::mt19937_64 engine_;
};

// Isotropic Maxwell-Boltzmann velocity at temperature T for mass m.
inline Vec3 maxwell_boltzmann_velocity(Rng& rng, double mass_kg, double temperature_K) {
    if (temperature_K <= 0.0) {
        rng.normal(); rng.normal(); rng.normal(); // keep draw count fixed
        return {};
    }
    const double sigma = std::sqrt(constants::boltzmann * temperature_K / mass_kg);
    return {rng.normal(0.0, sigma), rng.normal(0.0, sigma), rng.normal(0.0, sigma)};
}

// Event times of a homogeneous Poisson process on [0, duration), sorted.
inline std::vector<double> poisson_arrivals(Rng& rng, double rate, double duration) {
    std::vector<double> times;
    if (rate <= 0.0 || duration <= 0.0) return times;
    times.reserve(static_cast<std::size_t>(rate * duration * 1.2 + 16));
    double t = rng.exponential(rate);
    while (t < duration) {
        times.push_back(t);
        t += rng.exponential(rate);
    }
    return times;
}

} // namespace ionsim
