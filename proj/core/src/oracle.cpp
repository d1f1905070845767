#include "stanley/oracle.hpp"

#include <algorithm>

#include "stanley/errors.hpp"

namespace stanley {
namespace oracle {

std::vector<std::int64_t> naive_generate(const SeedSet& seed, std::size_t count) {
    if (count < seed.size())
        throw precondition_error("count is smaller than the seed length");
    std::vector<std::int64_t> terms(seed.elements().begin(), seed.elements().end());
    terms.reserve(count);
    while (terms.size() < count) {
        std::int64_t x = terms.back() + 1;
        while (detail::covered_by_unchecked(x, terms)) ++x;
        terms.push_back(x);
    }
    return terms;
}

namespace {

std::vector<std::int64_t> translate(std::span<const std::int64_t> base, std::int64_t off) {
    std::vector<std::int64_t> out(base.begin(), base.end());
    for (auto& v : out) v += off;
    return out;
}

std::vector<std::int64_t> merge_blocks(std::span<const std::int64_t> base,
                                       std::initializer_list<std::int64_t> offsets) {
    std::vector<std::int64_t> out;
    out.reserve(base.size() * offsets.size());
    for (std::int64_t off : offsets)
        for (std::int64_t v : base) out.push_back(v + off);
    std::sort(out.begin(), out.end());
    return out;
}

/// The claimed set: (interval \ union of excluded translates) u included
/// translates.
std::vector<std::int64_t> claimed_set(std::int64_t lo, std::int64_t hi,
                                      const std::vector<std::vector<std::int64_t>>& excluded,
                                      const std::vector<std::int64_t>& included) {
    std::vector<std::int64_t> out;
    for (std::int64_t v = lo; v < hi; ++v) {
        bool skip = false;
        for (const auto& ex : excluded) {
            if (std::binary_search(ex.begin(), ex.end(), v)) {
                skip = true;
                break;
            }
        }
        if (!skip) out.push_back(v);
    }
    for (std::int64_t v : included) out.push_back(v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

bool check_cover_claim(const GeneratedSequence& seq, const IndependenceCertificate& cert, int k,
                       const CoverClaim& claim) {
    if (k < cert.kappa)
        throw precondition_error("cover claims need k >= kappa");
    const std::size_t need = std::size_t{1} << (k + 2);
    if (seq.size() < need)
        throw needs_more_terms_error("cover claim needs a 2^{k+2} horizon", need);

    const std::size_t block = std::size_t{1} << k;
    const std::int64_t c = seq.term(block);
    const std::int64_t b = seq.term(block - 1);
    const std::int64_t omega = obstruction_set(seq.seed()).omega;
    if (b < cert.lambda + omega)
        throw precondition_error("standing hypothesis a_{2^k-1} >= lambda + omega fails");

    const auto a_k = seq.terms().subspan(0, block);
    const auto obs = obstruction_set(seq.seed()).members;
    const std::int64_t x = claim.x;
    const std::int64_t y = claim.y;
    if ((claim.part == 'b' || claim.part == 'd') && !(x < y))
        throw precondition_error("cover parts b and d require x < y");

    std::vector<std::int64_t> cover_a, cover_b, target;
    switch (claim.part) {
        case 'a':
            cover_a = translate(a_k, x);
            target = claimed_set(x, c + x, {merge_blocks(a_k, {x}), translate(obs, x)},
                                 translate(obs, c + x));
            break;
        case 'b':
            cover_a = translate(a_k, x);
            cover_b = translate(a_k, y);
            target = claimed_set(2 * y - x, c + 2 * y - x, {translate(obs, 2 * y - x)},
                                 translate(obs, c + 2 * y - x));
            break;
        case 'c':
            cover_a = merge_blocks(a_k, {x, c + x});
            target = claimed_set(x, 3 * c + x,
                                 {merge_blocks(a_k, {x, c + x}), translate(obs, x)},
                                 translate(obs, 3 * c + x));
            break;
        case 'd':
            cover_a = merge_blocks(a_k, {x, c + x});
            cover_b = merge_blocks(a_k, {y, c + y});
            target = claimed_set(2 * y - x, 3 * c + 2 * y - x, {translate(obs, 2 * y - x)},
                                 translate(obs, 3 * c + 2 * y - x));
            break;
        case 'e':
            cover_a = merge_blocks(a_k, {x, c + x, 3 * c + x, 4 * c + x});
            target = claimed_set(x, 9 * c + x,
                                 {merge_blocks(a_k, {x, c + x, 3 * c + x, 4 * c + x}),
                                  translate(obs, x)},
                                 translate(obs, 9 * c + x));
            break;
        default:
            throw input_error("cover claim part must be one of a..e");
    }

    for (std::int64_t v : target) {
        const bool ok = cover_b.empty()
                            ? detail::covered_by_unchecked(v, cover_a)
                            : detail::jointly_covered_unchecked(v, cover_a, cover_b);
        if (!ok) return false;
    }
    return true;
}

bool check_main_prefix(const GeneratedSequence& seqA, const IndependenceCertificate& certA,
                       int k, std::int64_t d) {
    AdkResult built = adk(seqA, certA, k, d);
    const std::size_t block = std::size_t{1} << k;
    const std::int64_t c = seqA.term(block);
    const auto a_star = seqA.terms().subspan(0, block);

    // The sixteen block offsets of the proof prefix J.
    const std::vector<std::int64_t> j_blocks = merge_blocks(
        a_star, {0, c, 7 * c - d, 8 * c - d, 10 * c - d, 11 * c - d, 17 * c - 2 * d,
                 18 * c - 2 * d, 30 * c - 3 * d, 31 * c - 3 * d, 37 * c - 4 * d,
                 38 * c - 4 * d, 40 * c - 4 * d, 41 * c - 4 * d, 47 * c - 5 * d,
                 48 * c - 5 * d});
    if (j_blocks.size() != block * 16) return false;
    if (!is_three_free(j_blocks)) return false;

    const std::vector<std::int64_t> prefix = naive_generate(built.seed, block * 16);
    return std::equal(j_blocks.begin(), j_blocks.end(), prefix.begin(), prefix.end());
}

ValidationReport validate_construction(const SeedSet& seed, std::int64_t predicted_rho,
                                       const Triadic& predicted_alpha, std::size_t horizon) {
    ValidationReport report;
    report.predicted_rho = predicted_rho;
    report.predicted_alpha = predicted_alpha;
    try {
        GeneratedSequence seq = generate(seed, horizon);
        CertifyOptions opts;
        opts.k_max = 16;
        auto cert = certify(seq, opts);
        if (!cert) {
            report.detail = "no independence certificate at this horizon";
            return report;
        }
        report.certified = true;
        report.measured_rho = cert->rho;
        report.measured_alpha = cert->alpha;
        report.pass = cert->rho == predicted_rho && cert->alpha == predicted_alpha;
        if (!report.pass)
            report.detail = "measured (rho=" + std::to_string(cert->rho) + ", alpha=" +
                            cert->alpha.str() + ") differs from prediction";
    } catch (const error& e) {
        report.detail = e.what();
    }
    return report;
}

} // namespace oracle
} // namespace stanley
