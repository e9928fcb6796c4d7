#pragma once

#include <cstdint>

namespace bentfn {

// SplitMix64 (Steele, Lea, Flood 2014): a counter-based generator with a
// 64-bit state advanced by the golden-ratio constant. Chosen so that every
// experiment replays bit-exactly from its seed across platforms; split()
// derives an independent stream for a labelled sub-experiment. Test vectors
// for seed 0 are frozen in the test suite.
struct SplitMix64 {
    uint64_t state = 0;

    explicit SplitMix64(uint64_t seed = 0) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Independent stream keyed by (current state, label).
    SplitMix64 split(uint64_t label) {
        SplitMix64 child(next() ^ (label * 0xff51afd7ed558ccdull));
        return child;
    }

    // Uniform in [0, bound) by rejection; bound > 0.
    uint64_t below(uint64_t bound) {
        const uint64_t limit = bound * (~uint64_t(0) / bound);
        uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }
};

} // namespace bentfn
