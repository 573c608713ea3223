#pragma once

#include <cstdint>
#include <vector>

namespace rumor {

// splitmix64 (Vigna 2015): one word of state, passes BigCrush, cheap enough
// to instantiate a fresh stream per vertex.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound). Lemire multiply-shift with rejection, so the
    // result is exactly uniform and identical on every platform.
    std::uint64_t below(std::uint64_t bound) {
        if (bound < 2) return 0;
        unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            const std::uint64_t cutoff = (0 - bound) % bound;
            while (lo < cutoff) {
                m = static_cast<unsigned __int128>(next()) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    int below_int(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

    // Uniform double in [0, 1) with 53 random bits.
    double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Counter-based stream derivation: mixing a key tuple into the root seed
// gives an independent, order-free substream per (seed, key...) so that
// per-vertex and per-trial draws are reproducible regardless of execution
// order.
inline std::uint64_t derive(std::uint64_t seed, std::uint64_t key) {
    return mix64(seed ^ (0x9e3779b97f4a7c15ULL * (key + 0x632be59bd9b4e019ULL)));
}

template <class... Rest>
std::uint64_t derive(std::uint64_t seed, std::uint64_t key, Rest... rest) {
    return derive(derive(seed, key), static_cast<std::uint64_t>(rest)...);
}

// Stream tags keep the derived substreams of different subsystems disjoint.
namespace streams {
inline constexpr std::uint64_t graph_gen = 1;
inline constexpr std::uint64_t list_shuffle = 2;
inline constexpr std::uint64_t offsets = 3;
inline constexpr std::uint64_t calls = 4;
inline constexpr std::uint64_t literal_first = 5;
inline constexpr std::uint64_t loss = 6;
inline constexpr std::uint64_t start_pick = 7;
inline constexpr std::uint64_t trial_graph = 8;
inline constexpr std::uint64_t trial_run = 9;
inline constexpr std::uint64_t trial_lists = 10;
inline constexpr std::uint64_t subset_sampler = 11;
inline constexpr std::uint64_t pair_sampler = 12;
inline constexpr std::uint64_t first_call = 13;
}  // namespace streams

template <class T>
void shuffle(std::vector<T>& v, SplitMix64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng.below(i));
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace rumor
