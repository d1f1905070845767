#ifndef STANLEY_TRIADIC_HPP
#define STANLEY_TRIADIC_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace stanley {

/// Exact rational p / 3^e in lowest terms (e == 0 or 3 does not divide p).
/// The scaling factors of independent sequences live in this domain, so all
/// certificate arithmetic is exact; no floating point is involved.
class Triadic {
public:
    constexpr Triadic() = default;
    constexpr Triadic(std::int64_t integer) : num_(integer) {}

    /// p / 3^e, normalized.
    static Triadic make(std::int64_t num, std::int32_t den_pow3);

    /// Accepts "p", "p/3^e", or "p/q" with q a literal power of 3.
    static std::optional<Triadic> parse(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int32_t den_pow3() const { return e_; }

    bool is_integer() const { return e_ == 0; }
    /// Value as integer; throws precondition_error unless is_integer().
    std::int64_t to_integer() const;

    /// Multiplies by 3^j (j may be negative).
    Triadic times_pow3(std::int32_t j) const;

    double to_double() const;
    std::string str() const;

    friend Triadic operator+(const Triadic& a, const Triadic& b);
    friend Triadic operator-(const Triadic& a, const Triadic& b);
    friend Triadic operator*(const Triadic& a, const Triadic& b);
    Triadic operator-() const { return Triadic(-num_, e_, nullptr); }

    friend bool operator==(const Triadic& a, const Triadic& b) = default;
    friend std::strong_ordering operator<=>(const Triadic& a, const Triadic& b);

    /// a / b when the quotient is triadic, otherwise nullopt.
    static std::optional<Triadic> divide_exact(const Triadic& a, const Triadic& b);

private:
    constexpr Triadic(std::int64_t num, std::int32_t e, std::nullptr_t) : num_(num), e_(e) {}
    static Triadic normalized(__int128 num, std::int32_t e);

    std::int64_t num_ = 0;
    std::int32_t e_ = 0;
};

} // namespace stanley

#endif
