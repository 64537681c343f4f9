#ifndef ACYCLIC_RNG_HPP
#define ACYCLIC_RNG_HPP

#include <cstdint>

// Self-contained seeded RNG so that a 64-bit seed reproduces the same
// stream on every platform (the standard library engines are portable,
// but its distributions are not).

namespace acyclic {

// splitmix64 finalizer; also used to derive stream seeds.
inline std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return x;
}

// Independent seed for (stream, index) under a master seed. Fixed
// arithmetic: results do not depend on thread scheduling.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                                 std::uint64_t index) {
    std::uint64_t s = mix64(master + 0x9E3779B97F4A7C15ull * (stream + 1));
    return mix64(s + 0x9E3779B97F4A7C15ull * (index + 1));
}

// xoshiro256++
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : s_) {
            sm += 0x9E3779B97F4A7C15ull;
            w = mix64(sm);
        }
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // uniform in [0,1)
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform in [0,bound), unbiased (rejection sampling)
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t s_[4];
};

}  // namespace acyclic

#endif
