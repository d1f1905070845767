#ifndef STANLEY_RNG_HPP
#define STANLEY_RNG_HPP

#include <cstdint>

namespace stanley {

/// SplitMix64. Used instead of <random> distributions so that identical
/// seeds give byte-identical streams on every platform and standard
/// library.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform-ish value in [0, bound). Modulo bias is irrelevant at the
    /// bounds used here and keeps the stream reproducible.
    std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

private:
    std::uint64_t state_;
};

} // namespace stanley

#endif
