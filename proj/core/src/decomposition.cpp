#include "stanley/decomposition.hpp"

#include <algorithm>

#include "stanley/errors.hpp"

namespace stanley {

ScalingDecomposition scaling_decomposition(const GeneratedSequence& seq,
                                           const IndependenceCertificate& cert) {
    const std::size_t period = std::size_t{1} << cert.kappa;
    if (seq.size() < period)
        throw needs_more_terms_error("horizon below the decomposition period", period);

    ScalingDecomposition result;
    result.alpha = cert.alpha;
    result.b.reserve(period);
    for (std::size_t i = 0; i < period; ++i)
        result.b.push_back(Triadic(seq.term(i)) - cert.alpha * Triadic(s0_term(i)));

    const auto terms = seq.terms();
    for (std::size_t n = 0; n < terms.size(); ++n) {
        const Triadic expect = cert.alpha * Triadic(s0_term(n)) + result.b[n % period];
        if (expect != Triadic(terms[n]))
            throw inconsistency_error("scaling decomposition fails at n=" + std::to_string(n) +
                                      ": expected " + expect.str() + ", term is " +
                                      std::to_string(terms[n]));
    }

    // The period must be exactly 2^kappa. Any proper divisor of a power of
    // two divides its half, so one comparison at half period suffices.
    if (period > 1) {
        const std::size_t half = period / 2;
        bool proper = true;
        for (std::size_t i = 0; i < half; ++i) {
            if (result.b[i] != result.b[i + half]) {
                proper = false;
                break;
            }
        }
        if (proper)
            throw inconsistency_error(
                "residue period divides " + std::to_string(half) +
                "; certificate kappa is not minimal");
    }
    return result;
}

bool repeat_structure_check(const GeneratedSequence& seq,
                            const IndependenceCertificate& cert) {
    const std::size_t period = std::size_t{1} << cert.kappa;
    if (seq.size() < period || cert.rho <= 0) return false;
    const auto terms = seq.terms();
    const std::int64_t max_term = terms.back();

    std::vector<std::int64_t> expected;
    for (std::int64_t i = 0;; ++i) {
        const std::int64_t x = s0_term(i);
        if (x > max_term / cert.rho) break;
        const std::int64_t base = cert.rho * x;
        for (std::size_t j = 0; j < period; ++j) {
            const std::int64_t v = base + terms[j];
            if (v <= max_term) expected.push_back(v);
        }
    }
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    return std::equal(terms.begin(), terms.end(), expected.begin(), expected.end());
}

bool triple_growth_check(const GeneratedSequence& seq,
                         const IndependenceCertificate& cert) {
    const std::size_t need = std::size_t{1} << (cert.kappa + 2);
    if (seq.size() < need)
        throw needs_more_terms_error("triple growth check needs 2^{kappa+2} terms", need);
    for (int k = cert.kappa;; ++k) {
        const std::size_t hi = std::size_t{1} << (k + 1);
        if (hi >= seq.size()) break;
        if (seq.term(hi) != 3 * seq.term(std::size_t{1} << k)) return false;
    }
    return true;
}

} // namespace stanley
