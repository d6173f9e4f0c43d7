#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace piqae {

/// splitmix64 finalizer; the basis of all stream derivation here.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Counter-based stream: output n is a pure function of (key, n), so streams
/// derived from distinct keys are independent and reproducible regardless of
/// scheduling. Keys are derived by hashing the (master_seed, a, b) tuple.
class StreamRng {
  public:
    explicit StreamRng(std::uint64_t key) : key_(key) {}

    static StreamRng derive(std::uint64_t master, std::uint64_t a = 0, std::uint64_t b = 0) {
        return StreamRng(mix64(master ^ mix64(a ^ mix64(b ^ 0x5bf03635f0935ad1ull))));
    }

    std::uint64_t next_u64() { return mix64(key_ + 0x9e3779b97f4a7c15ull * (++counter_)); }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller (one value per call; deterministic).
    double normal() {
        double u1 = 1.0 - uniform();  // (0, 1]
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

  private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace piqae
