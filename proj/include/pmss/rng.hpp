#ifndef PMSS_RNG_HPP
#define PMSS_RNG_HPP

#include <cstdint>
#include <cstddef>

namespace pmss {

// splitmix64: tiny, fast, and identical output on every platform.  The
// standard <random> distributions are implementation-defined, which would
// break byte-stable outputs across compilers, so all draws go through this.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n) without modulo bias.
    std::uint64_t bounded(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % n;
    }

    // Uniform in [0, 1) with 53 bits of precision.
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

// Named sub-streams derived from one root seed, so that independent modules
// draw from independent generators while everything remains reproducible
// from a single --seed.
enum class RngStream : std::uint64_t {
    generate = 1,
    em_init = 2,
    instance = 3,
};

inline std::uint64_t derive_seed(std::uint64_t root, RngStream stream,
                                 std::uint64_t index = 0) {
    SplitMix64 mix(root ^ (0xd1b54a32d192ed03ULL * static_cast<std::uint64_t>(stream)));
    std::uint64_t s = mix.next();
    SplitMix64 mix2(s + 0x8cb92ba72f3d8dd7ULL * index);
    return mix2.next();
}

} // namespace pmss

#endif
