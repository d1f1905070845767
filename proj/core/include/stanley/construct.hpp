#ifndef STANLEY_CONSTRUCT_HPP
#define STANLEY_CONSTRUCT_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "stanley/certificate.hpp"
#include "stanley/sequence.hpp"

namespace stanley {

/// One construction move applied to the current seed.
///  - adk: interpolated seed A_k u (c+A_k) u (7c-d+A_k) u (8c-d+A_k) with
///    c = a_{2^k}; new repeat factor 10c - d, new scaling factor
///    10*alpha/9 - d/3^{k+2}.
///  - product: {a_{2^k} b + a | a in first 2^k terms, b in operand};
///    scaling factors multiply.
struct ConstructionStep {
    enum class Kind { product, adk };

    Kind kind = Kind::adk;
    int k = 0;
    std::int64_t d = 0;                 // adk only
    std::optional<SeedSet> operand;     // product only
    std::int64_t predicted_rho = 0;
    Triadic predicted_alpha;
};

/// An ordered recipe from a start seed to a final seed. Replaying the steps
/// (re-certifying each intermediate) reproduces final_seed exactly.
struct ConstructionChain {
    SeedSet start;
    std::vector<ConstructionStep> steps;
    SeedSet final_seed;

    std::size_t depth() const { return steps.size(); }
};

/// A x_k B. Requires k >= certA.kappa and a horizon of at least 2^k + 1
/// terms. The operand must itself be a valid seed.
SeedSet product(const GeneratedSequence& seqA, const IndependenceCertificate& certA, int k,
                const SeedSet& seedB);

/// Admissible d values for adk at level k: omega(A) < d <= a_{2^k} - lambda.
struct DRange {
    std::int64_t low = 0;  // omega + 1
    std::int64_t high = -1; // a_{2^k} - lambda
    bool empty() const { return low > high; }
};
DRange admissible_d_range(const GeneratedSequence& seqA, const IndependenceCertificate& certA,
                          int k);

struct AdkResult {
    SeedSet seed;
    std::int64_t predicted_rho = 0;
    Triadic predicted_alpha;
};

/// The interpolated seed construction. Requires k > certA.kappa, d in the
/// admissible range, and the standing hypothesis a_{2^k-1} >= lambda+omega.
AdkResult adk(const GeneratedSequence& seqA, const IndependenceCertificate& certA, int k,
              std::int64_t d);

/// Every repeat factor reachable by one adk step at level k: the integer
/// interval [9 a_{2^k} + lambda, 10 a_{2^k} - omega - 1].
std::vector<std::int64_t> repeat_interval(const GeneratedSequence& seqA,
                                          const IndependenceCertificate& certA, int k);

/// Desk-scale resource caps for the chain searches. Exhaustion raises
/// resource_error; it is never a claim that the target is unreachable in
/// principle.
struct SearchLimits {
    int max_depth = 8;
    int max_k = 12;
    std::size_t max_seed_size = std::size_t{1} << 16;
    /// Cap on executed construction steps per search call.
    std::size_t max_step_executions = 600;
};

/// A seed realized during a search, together with the evidence the next
/// step needs.
struct RealizedSeed {
    SeedSet seed;
    std::shared_ptr<GeneratedSequence> seq;
    IndependenceCertificate cert;
    std::int64_t omega = -1;
    std::vector<ConstructionStep> steps; // how it was built from {0}
};

/// Shared memo of realized intermediate seeds, keyed by construction
/// recipe. Reusing one across calls makes batch searches cheap.
class ConstructionCache {
public:
    RealizedSeed* find(const std::string& recipe);
    void store(const std::string& recipe, RealizedSeed state);
    std::size_t size() const { return by_recipe_.size(); }

private:
    std::map<std::string, RealizedSeed> by_recipe_;
};

/// Builds a chain from {0} whose final seed certifies with scaling factor
/// exactly alpha_target. Throws precondition_error when alpha_target < 1
/// and resource_error when the target is out of reach under the caps.
ConstructionChain target_scaling(const Triadic& alpha_target, const SearchLimits& limits = {},
                                 ConstructionCache* cache = nullptr);

/// Breadth-first search over adk chains from {0} for a seed whose repeat
/// factor is exactly rho_target.
ConstructionChain target_repeat(std::int64_t rho_target, const SearchLimits& limits = {},
                                ConstructionCache* cache = nullptr);

/// Re-executes a chain from its start seed, certifying each intermediate,
/// and verifies the final seed matches. Returns the replayed final seed.
SeedSet replay_chain(const ConstructionChain& chain, const SearchLimits& limits = {});

} // namespace stanley

#endif
