#ifndef STANLEY_ORACLE_HPP
#define STANLEY_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "stanley/certificate.hpp"
#include "stanley/construct.hpp"
#include "stanley/sequence.hpp"

namespace stanley {
namespace oracle {

/// Greedy generation without the sieve: every candidate is tested with
/// covered_by against the current prefix. The reference implementation the
/// fast path is checked against. Desk-scale only.
std::vector<std::int64_t> naive_generate(const SeedSet& seed, std::size_t count);

/// One instance of the cover lemma. Parts:
///   a: A_k+x covers [x, c+x) \ ((A_k u O)+x)  u  (O+c+x)
///   b: A_k+x, A_k+y jointly cover [2y-x, c+2y-x) \ (O+2y-x)  u  (O+c+2y-x)
///   c: part a with k+1 (blocks A_k+x, A_k+c+x; reach 3c)
///   d: part b with k+1
///   e: part a with k+2 (blocks at 0, c, 3c, 4c; reach 9c)
/// where c = a_{2^k}, A_k = first 2^k terms, O = O(A).
struct CoverClaim {
    char part = 'a';
    std::int64_t x = 0;
    std::int64_t y = 0; // parts b and d only, must exceed x
};

/// Enumerates every integer the lemma claims covered and confirms it via
/// covered_by / jointly_covered on the translated term blocks.
/// Requires the standing hypothesis a_{2^k-1} >= lambda + omega and a
/// horizon of at least 2^{k+2}.
bool check_cover_claim(const GeneratedSequence& seq, const IndependenceCertificate& cert, int k,
                       const CoverClaim& claim);

/// Rebuilds the sixteen translated blocks whose union J the interpolation
/// proof pins down, then checks that J is 3-free and equals the first
/// 2^{k+4} terms of the naive generator on the interpolated seed.
bool check_main_prefix(const GeneratedSequence& seqA, const IndependenceCertificate& certA,
                       int k, std::int64_t d);

/// End-to-end check that a constructed seed certifies with the predicted
/// repeat and scaling factors. Mismatches are reported, not thrown.
struct ValidationReport {
    bool pass = false;
    bool certified = false;
    std::int64_t predicted_rho = 0;
    Triadic predicted_alpha;
    std::int64_t measured_rho = 0;
    Triadic measured_alpha;
    std::string detail;
};

ValidationReport validate_construction(const SeedSet& seed, std::int64_t predicted_rho,
                                       const Triadic& predicted_alpha, std::size_t horizon);

} // namespace oracle
} // namespace stanley

#endif
