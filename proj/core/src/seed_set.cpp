#include "stanley/seed_set.hpp"

#include <algorithm>
#include <charconv>

#include "stanley/errors.hpp"

namespace stanley {

namespace {

void require_strictly_increasing(std::span<const std::int64_t> set) {
    for (std::size_t i = 1; i < set.size(); ++i) {
        if (set[i] <= set[i - 1])
            throw input_error("set must be strictly increasing without duplicates");
    }
}

void require_nonnegative(std::span<const std::int64_t> set) {
    if (!set.empty() && set.front() < 0)
        throw input_error("set elements must be nonnegative");
}

} // namespace

bool is_three_free(std::span<const std::int64_t> set) {
    require_strictly_increasing(set);
    require_nonnegative(set);
    // Middle-element scan: for each j, look for i < j < l with
    // set[i] + set[l] == 2*set[j] using two pointers.
    const std::size_t n = set.size();
    for (std::size_t j = 1; j + 1 < n; ++j) {
        const std::int64_t target = 2 * set[j];
        std::size_t i = j;
        std::size_t l = j + 1;
        while (i > 0 && l < n) {
            const std::int64_t sum = set[i - 1] + set[l];
            if (sum == target) return false;
            if (sum < target)
                ++l;
            else
                --i;
        }
    }
    return true;
}

namespace detail {

bool covered_by_unchecked(std::int64_t x, std::span<const std::int64_t> set) {
    return jointly_covered_unchecked(x, set, set);
}

bool jointly_covered_unchecked(std::int64_t x, std::span<const std::int64_t> s,
                               std::span<const std::int64_t> t) {
    if (s.empty() || t.empty()) return false;
    // y = 2z - x with y in s, y < z < x. z < x gives y < z for free;
    // y >= s.front() bounds z from below. Sign-correct ceil of (x+s_min)/2.
    const std::int64_t s_min = s.front();
    const std::int64_t lo = x + s_min;
    const std::int64_t z_lo = lo / 2 + (lo % 2 != 0 && lo > 0 ? 1 : 0);
    auto z_begin = std::lower_bound(t.begin(), t.end(), z_lo);
    auto z_end = std::lower_bound(t.begin(), t.end(), x);
    for (auto it = z_begin; it != z_end; ++it) {
        const std::int64_t y = 2 * *it - x;
        if (std::binary_search(s.begin(), s.end(), y)) return true;
    }
    return false;
}

} // namespace detail

bool covered_by(std::int64_t x, std::span<const std::int64_t> set) {
    require_strictly_increasing(set);
    return detail::covered_by_unchecked(x, set);
}

bool jointly_covered(std::int64_t x, std::span<const std::int64_t> s,
                     std::span<const std::int64_t> t) {
    require_strictly_increasing(s);
    require_strictly_increasing(t);
    return detail::jointly_covered_unchecked(x, s, t);
}

SeedSet::SeedSet(std::vector<std::int64_t> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) throw input_error("seed must be nonempty");
    if (elements_.front() != 0) throw input_error("seed must start at 0");
    if (!is_three_free(elements_)) throw input_error("seed is not 3-free");
}

SeedSet SeedSet::parse(std::string_view csv) {
    std::vector<std::int64_t> vals;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        std::size_t comma = csv.find(',', pos);
        if (comma == std::string_view::npos) comma = csv.size();
        std::string_view tok = csv.substr(pos, comma - pos);
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw input_error("cannot parse seed element '" + std::string(tok) + "'");
        vals.push_back(v);
        pos = comma + 1;
        if (comma == csv.size()) break;
    }
    return SeedSet(std::move(vals));
}

std::string SeedSet::str() const {
    std::string out;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(elements_[i]);
    }
    return out;
}

} // namespace stanley
