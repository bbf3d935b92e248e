#pragma once

#include <cstdint>
#include <random>

namespace qdel {

// Deterministic splittable RNG. A stream is identified by the seed it was
// constructed from; `split(salt)` derives an independent child stream from
// the parent's base seed and the salt, regardless of how many values the
// parent has already drawn. This is what makes shot-level and trial-level
// parallelism reproducible: worker i always gets root.split(i).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : base_(seed), engine_(mix(seed)) {}

    Rng split(std::uint64_t salt) const { return Rng(mix(base_ ^ (0x9e3779b97f4a7c15ull + salt))); }

    std::uint64_t bits() { return engine_(); }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n). n must be nonzero.
    std::uint64_t below(std::uint64_t n) {
        // Rejection sampling to avoid modulo bias.
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = engine_();
        while (v >= limit) v = engine_();
        return v % n;
    }

    bool coin() { return (engine_() >> 63) != 0; }

    std::uint64_t base_seed() const { return base_; }

  private:
    static std::uint64_t mix(std::uint64_t x) {
        // splitmix64 finalizer; decorrelates adjacent seeds.
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

    std::uint64_t base_;
    std::mt19937_64 engine_;
};

}  // namespace qdel
