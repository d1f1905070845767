#ifndef STANLEY_SEED_SET_HPP
#define STANLEY_SEED_SET_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stanley {

/// True iff no three elements form an arithmetic progression. Oracle-grade
/// O(n^2) middle-element scan; also used by seed validation.
/// Throws input_error if the input is not strictly increasing and nonnegative.
bool is_three_free(std::span<const std::int64_t> sorted_set);

/// True iff some y < z < x with y, z in `set` satisfies 2z - y = x.
/// `set` must be strictly increasing (values may be negative: callers pass
/// translated copies). Throws input_error on unsorted input.
bool covered_by(std::int64_t x, std::span<const std::int64_t> set);

/// True iff some y in `s`, z in `t` with y < z < x satisfies 2z - y = x.
/// Note the order: y is drawn from `s`, z from `t`.
bool jointly_covered(std::int64_t x, std::span<const std::int64_t> s,
                     std::span<const std::int64_t> t);

namespace detail {
// Unvalidated variants for inner loops. Preconditions as above.
bool covered_by_unchecked(std::int64_t x, std::span<const std::int64_t> set);
bool jointly_covered_unchecked(std::int64_t x, std::span<const std::int64_t> s,
                               std::span<const std::int64_t> t);
} // namespace detail

/// A validated generator seed: a finite 3-free set 0 = a_0 < a_1 < ... < a_t.
class SeedSet {
public:
    /// The trivial seed {0}.
    SeedSet() : elements_{0} {}

    /// Throws input_error unless `elements` is nonempty, starts at 0,
    /// strictly increasing, nonnegative, and 3-free.
    explicit SeedSet(std::vector<std::int64_t> elements);

    /// Parses a comma-separated list, e.g. "0,1,7".
    static SeedSet parse(std::string_view csv);

    std::span<const std::int64_t> elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    std::int64_t max() const { return elements_.back(); }
    std::string str() const;

    bool operator==(const SeedSet& other) const = default;

private:
    std::vector<std::int64_t> elements_;
};

} // namespace stanley

#endif
