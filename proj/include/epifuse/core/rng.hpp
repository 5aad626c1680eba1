#pragma once

#include <cstdint>
#include <random>

namespace epifuse {

/// splitmix64 finalizer; derives well-separated stream seeds from
/// (root seed, domain tag, stream index).
std::uint64_t mix_seed(std::uint64_t root, std::uint64_t domain, std::uint64_t index);

/// Domain tags keep derived streams from colliding across subsystems.
namespace rng_domain {
constexpr std::uint64_t kChain = 1;
constexpr std::uint64_t kChainInit = 2;
constexpr std::uint64_t kPredictive = 3;
constexpr std::uint64_t kSimulate = 4;
constexpr std::uint64_t kSymptoms = 5;
constexpr std::uint64_t kTest = 99;
} // namespace rng_domain

/// Seeded random stream. Distribution objects are created per call, so output
/// depends only on the seed and the call sequence, never on cached state.
class RngStream {
public:
    explicit RngStream(std::uint64_t raw_seed) : engine_(raw_seed) {}

    RngStream(std::uint64_t root, std::uint64_t domain, std::uint64_t index)
        : engine_(mix_seed(root, domain, index))
    {
    }

    /// Uniform on [0, 1).
    double uniform()
    {
        return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
    }

    double normal(double mean, double sd)
    {
        return std::normal_distribution<double>(mean, sd)(engine_);
    }

    double gamma(double shape, double scale)
    {
        return std::gamma_distribution<double>(shape, scale)(engine_);
    }

    long poisson(double mean)
    {
        return std::poisson_distribution<long>(mean)(engine_);
    }

    /// Uniform integer in [0, bound).
    std::uint64_t uniform_int(std::uint64_t bound)
    {
        return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_);
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

} // namespace epifuse
