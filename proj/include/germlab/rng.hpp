#pragma once

#include <cstdint>
#include <random>

namespace germlab {

// Deterministic RNG wrapper.  Doubles are built from the top 53 bits of the
// raw draw so the stream is identical across standard libraries (the
// distribution templates are not portable).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    double uniform01() { return double(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Uniform in {0, ..., n-1} by rejection; n must be positive.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return v % n;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace germlab
