#pragma once

#include <cstdint>
#include <string>

namespace sparsecuts {

// Deterministic 64-bit generator used everywhere randomness is needed.
// The core is SplitMix64 (Steele/Lea/Flood mixing constants), which is fully
// specified by the code below, so the same seed reproduces the same stream on
// every platform. Streams for sub-components are derived by hashing a label
// into the seed (see derive), never by sharing one stream across components.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Unbiased uniform draw from {0, ..., bound-1} by rejection.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) return 0;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % bound;
    }

    /// Uniform in {lo, ..., hi}, inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool bit() { return (next_u64() >> 63) != 0; }

    /// Child generator for the given label; independent of draws made here.
    Rng derive(const std::string& label) const {
        std::uint64_t h = 0xCBF29CE484222325ULL;  // FNV-1a
        for (unsigned char c : label) {
            h ^= c;
            h *= 0x100000001B3ULL;
        }
        return Rng(state_ ^ h);
    }

  private:
    std::uint64_t state_;
};

}  // namespace sparsecuts
