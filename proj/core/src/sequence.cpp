#include "stanley/sequence.hpp"

#include <algorithm>

#include "stanley/errors.hpp"

namespace stanley {

GeneratedSequence::GeneratedSequence(SeedSet seed, SequenceOptions options)
    : seed_(std::move(seed)), options_(options) {}

std::int64_t GeneratedSequence::term(std::size_t n) const {
    if (n >= terms_.size())
        throw needs_more_terms_error("term index " + std::to_string(n) + " beyond horizon", n + 1);
    return terms_[n];
}

void GeneratedSequence::ensure_tracked(std::int64_t value) {
    const auto need = static_cast<std::uint64_t>(value);
    if (need < sieve_.size()) return;
    if (CoverageSieve::bytes_needed(sieve_.size(), need) > options_.sieve_mem_cap_bytes)
        throw generation_cap_error("sieve memory cap exceeded", terms_.size());
    const std::uint64_t old_size = sieve_.grow_to(need);
    const std::uint64_t new_size = sieve_.size();
    // Re-derive marks that fall in [old_size, new_size): for each later
    // element z the pair (y, z) marks 2z - y, so y ranges over
    // (2z - new_size, 2z - old_size].
    const auto old_s = static_cast<std::int64_t>(old_size);
    const auto new_s = static_cast<std::int64_t>(new_size);
    // First index whose doubled value can reach old_size.
    auto first = std::lower_bound(terms_.begin(), terms_.end(), (old_s + 1) / 2);
    for (auto jt = first; jt != terms_.end(); ++jt) {
        const std::int64_t z = *jt;
        const std::int64_t y_lo = 2 * z - new_s + 1;
        const std::int64_t y_hi = 2 * z - old_s;
        auto y_begin = std::lower_bound(terms_.begin(), jt, y_lo);
        auto y_end = std::upper_bound(terms_.begin(), jt, y_hi);
        for (auto it = y_begin; it != y_end; ++it) sieve_.mark(static_cast<std::uint64_t>(2 * z - *it));
    }
}

void GeneratedSequence::append(std::int64_t value) {
    if (value > kMaxTermValue)
        throw resource_error("term value " + std::to_string(value) +
                             " exceeds the supported integer range");
    terms_.push_back(value);
    // Mark 2*value - y for every earlier y, descending in y so the marks
    // ascend and the loop can stop at the tracked boundary.
    const auto limit = static_cast<std::int64_t>(sieve_.size());
    for (std::size_t i = terms_.size() - 1; i-- > 0;) {
        const std::int64_t m = 2 * value - terms_[i];
        if (m >= limit) break;
        sieve_.mark(static_cast<std::uint64_t>(m));
    }
}

void GeneratedSequence::extend(std::size_t additional) {
    const std::size_t target = terms_.size() + additional;
    while (terms_.size() < target) {
        std::int64_t x = terms_.back() + 1;
        for (;; ++x) {
            if (x > kMaxTermValue)
                throw resource_error("candidate exceeds the supported integer range");
            ensure_tracked(x);
            if (!sieve_.covered(static_cast<std::uint64_t>(x))) break;
        }
        append(x);
    }
}

GeneratedSequence generate(const SeedSet& seed, std::size_t count,
                           const SequenceOptions& options) {
    if (count < seed.size())
        throw precondition_error("count " + std::to_string(count) +
                                 " is smaller than the seed length " +
                                 std::to_string(seed.size()));
    GeneratedSequence seq(seed, options);
    for (std::int64_t v : seed.elements()) {
        seq.ensure_tracked(v);
        seq.append(v);
    }
    seq.extend(count - seed.size());
    return seq;
}

std::int64_t s0_term(std::int64_t n) {
    if (n < 0) throw input_error("s0_term requires n >= 0");
    if (n >= (std::int64_t{1} << 39))
        throw resource_error("s0_term overflows 64-bit range for n >= 2^39");
    std::int64_t result = 0;
    std::int64_t pow = 1;
    for (std::int64_t bits = n; bits; bits >>= 1) {
        if (bits & 1) result += pow;
        pow *= 3;
    }
    return result;
}

ObstructionReport obstruction_set(const SeedSet& seed) {
    ObstructionReport report;
    const std::int64_t bound = seed.max(); // O(A) is confined to [0, max(seed))
    if (bound <= 0) return report;
    std::vector<std::uint8_t> covered(static_cast<std::size_t>(bound), 0);
    const auto elems = seed.elements();
    for (std::size_t j = 1; j < elems.size(); ++j) {
        const std::int64_t z = elems[j];
        for (std::size_t i = j; i-- > 0;) {
            const std::int64_t m = 2 * z - elems[i];
            if (m >= bound) break;
            covered[static_cast<std::size_t>(m)] = 1;
        }
    }
    for (std::int64_t x = 0; x < bound; ++x) {
        if (covered[static_cast<std::size_t>(x)]) continue;
        if (std::binary_search(elems.begin(), elems.end(), x)) continue;
        report.members.push_back(x);
    }
    report.omega = report.members.empty() ? -1 : report.members.back();
    return report;
}

} // namespace stanley
