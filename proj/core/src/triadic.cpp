#include "stanley/triadic.hpp"

#include <charconv>
#include <cmath>
#include <numeric>

#include "stanley/errors.hpp"

namespace stanley {

namespace {

__int128 pow3_128(std::int32_t e) {
    __int128 p = 1;
    for (std::int32_t i = 0; i < e; ++i) p *= 3;
    return p;
}

std::int64_t narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw resource_error("triadic arithmetic overflow");
    return static_cast<std::int64_t>(v);
}

std::optional<std::int64_t> parse_int(std::string_view tok) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
    return v;
}

} // namespace

Triadic Triadic::normalized(__int128 num, std::int32_t e) {
    if (e < 0) {
        num *= pow3_128(-e);
        e = 0;
    }
    if (num == 0) return Triadic(0, 0, nullptr);
    while (e > 0 && num % 3 == 0) {
        num /= 3;
        --e;
    }
    return Triadic(narrow(num), e, nullptr);
}

Triadic Triadic::make(std::int64_t num, std::int32_t den_pow3) {
    if (den_pow3 < 0) throw input_error("denominator exponent must be nonnegative");
    if (den_pow3 > 80) throw resource_error("triadic exponent too large");
    return normalized(num, den_pow3);
}

std::optional<Triadic> Triadic::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        auto p = parse_int(text);
        if (!p) return std::nullopt;
        return Triadic(*p);
    }
    auto p = parse_int(text.substr(0, slash));
    if (!p) return std::nullopt;
    std::string_view den = text.substr(slash + 1);
    if (den.starts_with("3^")) {
        auto e = parse_int(den.substr(2));
        if (!e || *e < 0 || *e > 40) return std::nullopt;
        return make(*p, static_cast<std::int32_t>(*e));
    }
    auto q = parse_int(den);
    if (!q || *q <= 0) return std::nullopt;
    std::int32_t e = 0;
    std::int64_t rest = *q;
    while (rest % 3 == 0) {
        rest /= 3;
        ++e;
    }
    if (rest != 1) return std::nullopt; // denominator must be a power of 3
    return make(*p, e);
}

std::int64_t Triadic::to_integer() const {
    if (e_ != 0) throw precondition_error("triadic " + str() + " is not an integer");
    return num_;
}

Triadic Triadic::times_pow3(std::int32_t j) const {
    if (j >= 0) {
        __int128 n = static_cast<__int128>(num_) * pow3_128(j);
        return normalized(n, e_);
    }
    return normalized(num_, e_ - j);
}

double Triadic::to_double() const { return static_cast<double>(num_) / std::pow(3.0, e_); }

std::string Triadic::str() const {
    if (e_ == 0) return std::to_string(num_);
    std::int64_t den = 1;
    for (std::int32_t i = 0; i < e_; ++i) den *= 3;
    return std::to_string(num_) + "/" + std::to_string(den);
}

Triadic operator+(const Triadic& a, const Triadic& b) {
    const std::int32_t e = std::max(a.e_, b.e_);
    __int128 n = static_cast<__int128>(a.num_) * pow3_128(e - a.e_) +
                 static_cast<__int128>(b.num_) * pow3_128(e - b.e_);
    return Triadic::normalized(n, e);
}

Triadic operator-(const Triadic& a, const Triadic& b) { return a + (-b); }

Triadic operator*(const Triadic& a, const Triadic& b) {
    __int128 n = static_cast<__int128>(a.num_) * b.num_;
    return Triadic::normalized(n, a.e_ + b.e_);
}

std::strong_ordering operator<=>(const Triadic& a, const Triadic& b) {
    const std::int32_t e = std::max(a.e_, b.e_);
    __int128 lhs = static_cast<__int128>(a.num_) * pow3_128(e - a.e_);
    __int128 rhs = static_cast<__int128>(b.num_) * pow3_128(e - b.e_);
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

namespace {
__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}
} // namespace

std::optional<Triadic> Triadic::divide_exact(const Triadic& a, const Triadic& b) {
    if (b.num_ == 0) return std::nullopt;
    // a/b = (a.num * 3^b.e) / (b.num * 3^a.e); reduce and require the
    // remaining denominator to be a power of 3.
    __int128 n = static_cast<__int128>(a.num_) * pow3_128(b.e_);
    __int128 m = static_cast<__int128>(b.num_) * pow3_128(a.e_);
    if (m < 0) {
        n = -n;
        m = -m;
    }
    __int128 g = gcd128(n, m);
    if (g == 0) return Triadic(0);
    n /= g;
    m /= g;
    std::int32_t e = 0;
    while (m % 3 == 0) {
        m /= 3;
        ++e;
    }
    if (m != 1) return std::nullopt;
    return normalized(n, e);
}

} // namespace stanley
