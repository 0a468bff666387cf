#ifndef SYZYGY_RNG_HPP
#define SYZYGY_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace syz {

// Deterministic RNG used everywhere randomness is needed.  All draws go
// through the rejection sampler below; the standard distributions are
// implementation-defined and would break cross-platform reproducibility.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform value in [0, n).
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) return 0;
        std::uint64_t rem = (std::numeric_limits<std::uint64_t>::max() % n + 1) % n;
        std::uint64_t bound = std::numeric_limits<std::uint64_t>::max() - rem;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x > bound);
        return x % n;
    }

private:
    std::mt19937_64 gen_;
};

inline std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// Derives an independent stream for a named sub-task from a base seed, so
// that adding or reordering tasks does not disturb the draws of others.
inline std::uint64_t mix_seed(std::uint64_t seed, std::string_view tag) {
    std::uint64_t h = fnv1a(tag);
    // splitmix64 finalizer over the combination.
    std::uint64_t z = seed ^ (h + 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace syz

#endif
