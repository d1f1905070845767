#ifndef STANLEY_CERTIFICATE_HPP
#define STANLEY_CERTIFICATE_HPP

#include <cstdint>
#include <optional>

#include "stanley/sequence.hpp"
#include "stanley/triadic.hpp"

namespace stanley {

/// Result of testing the independence conditions at a single index k:
///   a_{2^k + i} = a_{2^k} + a_i   for all 0 <= i < 2^k, and
///   a_{2^k}     = 2 a_{2^k - 1} + 1 - lambda.
/// `proven` records whether a_{2^k - 1} >= lambda + omega held, the finite
/// sufficient condition that pins independence for every larger k.
struct IndependenceCheck {
    std::int64_t lambda = 0;
    bool proven = false;
};

/// Tests both conditions at one k. Returns nullopt when the shift condition
/// fails. Throws needs_more_terms_error when the horizon is below 2^{k+1}.
std::optional<IndependenceCheck> check_independence_at(const GeneratedSequence& seq, int k,
                                                       std::int64_t omega);

/// Full Type-1 fingerprint of a sequence.
struct IndependenceCertificate {
    int kappa = 0;            // least index from which the conditions hold
    std::int64_t lambda = 0;  // shared constant across all tested k
    std::int64_t rho = 0;     // a_{2^kappa}
    Triadic alpha;            // rho / 3^kappa in lowest terms
    bool proven = false;      // sufficient condition witnessed at some k
    int proven_at_k = -1;     // smallest witnessing k, -1 when empirical
    std::size_t horizon = 0;  // terms inspected
};

struct CertifyOptions {
    /// Upper bound on the scanned k. The effective bound is also limited by
    /// the horizon (k is testable only when 2^{k+1} <= horizon).
    int k_max = 12;
};

/// Finds the minimal kappa such that the independence conditions hold with
/// one shared lambda at every testable k >= kappa. Returns nullopt if no
/// kappa <= k_max works.
std::optional<IndependenceCertificate> certify(const GeneratedSequence& seq,
                                               const CertifyOptions& options = {});

} // namespace stanley

#endif
