#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace subsel {

/// Seeded random source with portable draw rules.
///
/// std::uniform_*_distribution output differs between standard libraries, so
/// bounded integers and unit reals are derived here directly from the raw
/// mt19937_64 stream. Same seed, same draws, on every platform.
class Rng {
public:
    static constexpr std::string_view algorithm = "mt19937_64";

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform on [0, bound). bound must be > 0.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform on [lo, hi] inclusive.
    std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }

    /// Uniform on [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    bool bernoulli(double p) { return unit() < p; }

    /// `count` distinct elements of `pool`, drawn uniformly without replacement
    /// (partial Fisher-Yates; `pool` is reordered).
    std::vector<std::size_t> sample(std::vector<std::size_t>& pool, std::size_t count);

private:
    std::mt19937_64 engine_;
};

/// Decorrelated child seed for stream `stream` of a root seed (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream);

}  // namespace subsel
