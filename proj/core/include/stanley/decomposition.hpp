#ifndef STANLEY_DECOMPOSITION_HPP
#define STANLEY_DECOMPOSITION_HPP

#include <vector>

#include "stanley/certificate.hpp"

namespace stanley {

/// The decomposition a_n = alpha * s_n + b_n with {s_n} = S(0) and {b_n}
/// periodic of period exactly 2^kappa. The residues b_n need not be
/// integers; they are exact triadic rationals.
struct ScalingDecomposition {
    Triadic alpha;
    std::vector<Triadic> b; // b_0 .. b_{2^kappa - 1}
    std::size_t period() const { return b.size(); }
};

/// Computes b_i = a_i - alpha * s_i for i < 2^kappa and verifies the
/// reconstruction for every generated term, plus that the period is not a
/// proper divisor of 2^kappa. A failure means the certificate is false or
/// the library has a bug, so it throws inconsistency_error.
ScalingDecomposition scaling_decomposition(const GeneratedSequence& seq,
                                           const IndependenceCertificate& cert);

/// Window check of the repeat structure: the term set equals
/// { rho*x + y : x in S(0), y in first 2^kappa terms } on [0, max term].
/// Returns false on mismatch.
bool repeat_structure_check(const GeneratedSequence& seq,
                            const IndependenceCertificate& cert);

/// a_{2^{k+1}} = 3 a_{2^k} for every testable k >= kappa.
/// Requires a horizon of at least 2^{kappa+2}.
bool triple_growth_check(const GeneratedSequence& seq,
                         const IndependenceCertificate& cert);

} // namespace stanley

#endif
