#pragma once

#include <cstdint>
#include <random>

namespace fano {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Deterministic stream of draws for a (seed, stream) pair.  mt19937_64 output is
// fully pinned by the standard, and the bounded draw below avoids
// std::uniform_int_distribution, whose mapping is implementation-defined.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed, std::uint64_t stream = 0)
        : gen_(splitmix64(seed ^ splitmix64(stream + 0x51ed2701a9e5f34bull))) {}

    std::uint64_t next() { return gen_(); }

    // Uniform in [0, k), k >= 1; rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t k) {
        const std::uint64_t threshold = (0 - k) % k;  // 2^64 mod k
        std::uint64_t x;
        do {
            x = gen_();
        } while (x < threshold);
        return (x - threshold) % k;
    }

    // Uniform integer in [lo, hi] inclusive.
    long long in_box(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace fano
