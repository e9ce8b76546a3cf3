#pragma once

#include "paracon/rational.hpp"

#include <cstdint>

namespace paracon {

// splitmix64: the whole toolkit's randomness flows through this one generator
// so every run is reproducible from a single seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [lo, hi], inclusive
    long int_in(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v;
        do { v = next(); } while (v >= limit);
        return lo + static_cast<long>(v % span);
    }

private:
    std::uint64_t state_;
};

// Counter scheme for per-check streams: check #k of a run seeded with s draws
// from SplitMix64(derive_seed(s, k)), so any single check can be replayed in
// isolation.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t counter) {
    SplitMix64 g(master ^ (0x9e3779b97f4a7c15ULL * (counter + 1)));
    return g.next();
}

// Integer-coordinate random vector, coordinates uniform in [-bound, bound].
// Schwartz-Zippel: a nonzero polynomial of degree d vanishes at such a point
// with probability at most d / (2*bound + 1).
inline QVector random_point(int dim, SplitMix64& gen, long bound = 10000) {
    QVector v(dim);
    for (int i = 0; i < dim; ++i) v(i) = Rat(gen.int_in(-bound, bound));
    return v;
}

} // namespace paracon
