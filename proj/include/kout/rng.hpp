#pragma once

#include <cstdint>

namespace kout {

// Identifies one reproducible random stream: a master seed plus the ordinal
// of the stream within a run (e.g. the trial index). Equal pairs produce
// byte-identical draws on every platform.
struct Seed {
    std::uint64_t master = 0;
    std::uint64_t stream_index = 0;
};

// PCG32 (Melissa O'Neill's pcg32_random_t, Apache-2.0 reference constants).
// The sequence selector makes (master, stream_index) pairs independent
// streams without jump-ahead bookkeeping.
class Pcg32 {
public:
    Pcg32(std::uint64_t initstate, std::uint64_t initseq) {
        state_ = 0u;
        inc_ = (initseq << 1u) | 1u;
        next();
        state_ += initstate;
        next();
    }

    explicit Pcg32(Seed seed) : Pcg32(seed.master, seed.stream_index) {}

    std::uint32_t next() {
        const std::uint64_t old = state_;
        state_ = old * 6364136223846793005ull + inc_;
        const auto xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
        const auto rot = static_cast<std::uint32_t>(old >> 59u);
        return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
    }

    // Unbiased integer in [0, range); range >= 1. Lemire's multiply-shift
    // with rejection, so uniformity is exact and platform-independent
    // (std::uniform_int_distribution is not portable across libraries).
    std::uint32_t bounded(std::uint32_t range) {
        std::uint64_t m = static_cast<std::uint64_t>(next()) * range;
        auto low = static_cast<std::uint32_t>(m);
        if (low < range) {
            const std::uint32_t threshold = (0u - range) % range;
            while (low < threshold) {
                m = static_cast<std::uint64_t>(next()) * range;
                low = static_cast<std::uint32_t>(m);
            }
        }
        return static_cast<std::uint32_t>(m >> 32u);
    }

private:
    std::uint64_t state_;
    std::uint64_t inc_;
};

}  // namespace kout
