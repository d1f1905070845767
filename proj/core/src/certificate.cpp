#include "stanley/certificate.hpp"

#include <bit>
#include <vector>

#include "stanley/errors.hpp"

namespace stanley {

std::optional<IndependenceCheck> check_independence_at(const GeneratedSequence& seq, int k,
                                                       std::int64_t omega) {
    if (k < 0) throw precondition_error("independence index k must be nonnegative");
    const std::size_t need = std::size_t{1} << (k + 1);
    if (seq.size() < need)
        throw needs_more_terms_error("horizon too small for independence check at k=" +
                                         std::to_string(k),
                                     need);
    const std::size_t half = std::size_t{1} << k;
    const auto terms = seq.terms();
    const std::int64_t base = terms[half];
    for (std::size_t i = 0; i < half; ++i) {
        if (terms[half + i] != base + terms[i]) return std::nullopt;
    }
    IndependenceCheck result;
    result.lambda = 2 * terms[half - 1] + 1 - base;
    result.proven = terms[half - 1] >= result.lambda + omega;
    return result;
}

std::optional<IndependenceCertificate> certify(const GeneratedSequence& seq,
                                               const CertifyOptions& options) {
    if (seq.size() < 2)
        throw needs_more_terms_error("certification needs at least two terms", 2);
    const int horizon_k = std::bit_width(seq.size()) - 2; // largest k with 2^{k+1} <= horizon
    const int k_hi = std::min({options.k_max, horizon_k, 40});
    if (k_hi < 0) return std::nullopt;

    const std::int64_t omega = obstruction_set(seq.seed()).omega;

    std::vector<std::optional<IndependenceCheck>> checks(k_hi + 1);
    for (int k = 0; k <= k_hi; ++k) checks[k] = check_independence_at(seq, k, omega);

    // Minimal kappa whose tail [kappa, k_hi] holds with one shared lambda.
    if (!checks[k_hi]) return std::nullopt;
    int kappa = k_hi;
    const std::int64_t lambda = checks[k_hi]->lambda;
    while (kappa > 0 && checks[kappa - 1] && checks[kappa - 1]->lambda == lambda) --kappa;

    IndependenceCertificate cert;
    cert.kappa = kappa;
    cert.lambda = lambda;
    cert.rho = seq.term(std::size_t{1} << kappa);
    cert.alpha = Triadic::make(cert.rho, kappa);
    cert.horizon = seq.size();
    for (int k = kappa; k <= k_hi; ++k) {
        if (checks[k]->proven) {
            cert.proven = true;
            cert.proven_at_k = k;
            break;
        }
    }
    return cert;
}

} // namespace stanley
