#ifndef STANLEY_SEQUENCE_HPP
#define STANLEY_SEQUENCE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "stanley/seed_set.hpp"
#include "stanley/sieve.hpp"

namespace stanley {

struct SequenceOptions {
    /// Hard cap on sieve memory. Exceeding it raises generation_cap_error
    /// reporting how many terms were completed.
    std::uint64_t sieve_mem_cap_bytes = std::uint64_t{2048} << 20;
};

/// Largest admissible term value: keeps 2*a - a_i inside int64 so overflow
/// is detected at the append site instead of wrapping.
inline constexpr std::int64_t kMaxTermValue = (INT64_MAX - 1) / 2;

/// A Stanley sequence prefix produced by the greedy rule, together with its
/// incremental coverage sieve. Single writer: generation and extension
/// mutate the sieve and must not run concurrently on one instance. All
/// accessors are const and freely shareable between threads once built.
class GeneratedSequence {
public:
    const SeedSet& seed() const { return seed_; }
    std::span<const std::int64_t> terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    std::size_t seed_len() const { return seed_.size(); }
    std::int64_t term(std::size_t n) const;

    /// Continues the greedy rule for `additional` more terms.
    /// extend(generate(A, n), m) produces exactly generate(A, n + m).
    void extend(std::size_t additional);

    const SequenceOptions& options() const { return options_; }

private:
    friend GeneratedSequence generate(const SeedSet&, std::size_t, const SequenceOptions&);
    GeneratedSequence(SeedSet seed, SequenceOptions options);

    void ensure_tracked(std::int64_t value);
    void append(std::int64_t value);

    SeedSet seed_;
    SequenceOptions options_;
    std::vector<std::int64_t> terms_;
    CoverageSieve sieve_;
};

/// First `count` terms of S(seed). `count` must be at least the seed size.
GeneratedSequence generate(const SeedSet& seed, std::size_t count,
                           const SequenceOptions& options = {});

/// n-th term of S(0): write n in binary, read the digits in ternary.
std::int64_t s0_term(std::int64_t n);

/// O(A) and its maximum. omega is -1 when the set is empty: this makes the
/// strict inequality d > omega(A) admit d = 0 for seeds with no
/// obstructions.
struct ObstructionReport {
    std::vector<std::int64_t> members;
    std::int64_t omega = -1;
};

/// Exact O(A). Integers skipped once generation starts are covered by
/// construction, so the scan range [0, max(seed)) is exhaustive.
ObstructionReport obstruction_set(const SeedSet& seed);

} // namespace stanley

#endif
