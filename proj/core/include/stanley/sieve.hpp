#ifndef STANLEY_SIEVE_HPP
#define STANLEY_SIEVE_HPP

#include <cstdint>
#include <vector>

namespace stanley {

/// Growable bit array over the nonnegative integers marking covered values.
/// Marks are only stored for indices below size(); the owner re-derives
/// missing marks when the tracked range grows (see GeneratedSequence).
class CoverageSieve {
public:
    CoverageSieve() = default;

    std::uint64_t size() const { return bits_; }
    std::uint64_t bytes() const { return words_.size() * sizeof(std::uint64_t); }

    bool covered(std::uint64_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void mark(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

    /// Doubling growth so `need` becomes a tracked index.
    /// Returns the previous tracked size.
    std::uint64_t grow_to(std::uint64_t need) {
        std::uint64_t old = bits_;
        std::uint64_t target = bits_ ? bits_ : 64;
        while (target <= need) target *= 2;
        words_.resize((target + 63) / 64, 0);
        bits_ = target;
        return old;
    }

    /// Bytes the backing store would need to cover index `need`.
    static std::uint64_t bytes_needed(std::uint64_t current_bits, std::uint64_t need) {
        std::uint64_t target = current_bits ? current_bits : 64;
        while (target <= need) target *= 2;
        return (target + 63) / 64 * sizeof(std::uint64_t);
    }

private:
    std::vector<std::uint64_t> words_;
    std::uint64_t bits_ = 0;
};

} // namespace stanley

#endif
