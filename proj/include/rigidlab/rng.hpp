#pragma once

#include <cstdint>

namespace rigidlab {

// SplitMix64 generator. Used instead of <random> engines so that seeded
// runs produce identical streams on every platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Unbiased integer in [0, bound) via rejection.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

    // Inclusive range.
    long long int_in(long long lo, long long hi) {
        return lo + static_cast<long long>(
                        below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool coin() { return (next() & 1) != 0; }

    // Derived stream for check #k: all per-check randomness flows from one
    // root seed expanded by a counter.
    Rng fork(std::uint64_t counter) const {
        Rng mixer(state_ ^ (0xA0761D6478BD642FULL * (counter + 1)));
        return Rng(mixer.next());
    }

private:
    std::uint64_t state_;
};

} // namespace rigidlab
