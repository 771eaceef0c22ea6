#pragma once

#include <cstdint>
#include <random>

namespace sr {

/// SplitMix64 finaliser; used to derive independent stream seeds.
constexpr auto splitmix64(std::uint64_t x) noexcept -> std::uint64_t
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seed for stream `index` under `base`.
constexpr auto derive_seed(std::uint64_t base, std::uint64_t index) noexcept -> std::uint64_t
{
    return splitmix64(splitmix64(base) ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
}

/// mt19937_64 engine plus a portable bounded draw (std distributions are not
/// bitwise reproducible across standard libraries).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [0, bound), bound > 0. Rejection sampling.
    auto below(std::uint64_t bound) -> std::uint64_t
    {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace sr
