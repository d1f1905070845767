#include "stanley/construct.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <string>

#include "stanley/errors.hpp"

namespace stanley {

namespace {

std::int64_t checked_term(std::int64_t c, std::int64_t b, std::int64_t a) {
    const __int128 v = static_cast<__int128>(c) * b + a;
    if (v > kMaxTermValue) throw resource_error("construction value exceeds integer range");
    return static_cast<std::int64_t>(v);
}

void require_power_term(const GeneratedSequence& seq, int k) {
    const std::size_t need = (std::size_t{1} << k) + 1;
    if (seq.size() < need)
        throw needs_more_terms_error("construction at level k=" + std::to_string(k) +
                                         " needs the 2^k-th term",
                                     need);
}

} // namespace

SeedSet product(const GeneratedSequence& seqA, const IndependenceCertificate& certA, int k,
                const SeedSet& seedB) {
    if (k < certA.kappa)
        throw precondition_error("product level k=" + std::to_string(k) +
                                 " is below kappa=" + std::to_string(certA.kappa));
    require_power_term(seqA, k);
    const std::size_t block = std::size_t{1} << k;
    const std::int64_t c = seqA.term(block);
    std::vector<std::int64_t> out;
    out.reserve(block * seedB.size());
    for (std::int64_t b : seedB.elements())
        for (std::size_t i = 0; i < block; ++i) out.push_back(checked_term(c, b, seqA.term(i)));
    std::sort(out.begin(), out.end());
    try {
        return SeedSet(std::move(out));
    } catch (const input_error& e) {
        throw inconsistency_error(std::string("product seed failed validation: ") + e.what());
    }
}

DRange admissible_d_range(const GeneratedSequence& seqA, const IndependenceCertificate& certA,
                          int k) {
    if (k <= certA.kappa)
        throw precondition_error("adk level k=" + std::to_string(k) +
                                 " must exceed kappa=" + std::to_string(certA.kappa));
    require_power_term(seqA, k);
    const std::int64_t omega = obstruction_set(seqA.seed()).omega;
    const std::int64_t c = seqA.term(std::size_t{1} << k);
    return DRange{omega + 1, c - certA.lambda};
}

AdkResult adk(const GeneratedSequence& seqA, const IndependenceCertificate& certA, int k,
              std::int64_t d) {
    const DRange range = admissible_d_range(seqA, certA, k);
    if (d < range.low || d > range.high)
        throw precondition_error("d=" + std::to_string(d) + " outside the admissible range [" +
                                 std::to_string(range.low) + ", " + std::to_string(range.high) +
                                 "]");
    const std::size_t block = std::size_t{1} << k;
    const std::int64_t c = seqA.term(block);
    const std::int64_t omega = range.low - 1;
    const std::int64_t b = seqA.term(block - 1);
    if (b < certA.lambda + omega)
        throw precondition_error("standing hypothesis a_{2^k-1} >= lambda + omega fails at k=" +
                                 std::to_string(k));

    std::vector<std::int64_t> out;
    out.reserve(4 * block);
    const std::int64_t offsets[4] = {0, c, 7 * c - d, 8 * c - d};
    for (std::int64_t off : offsets)
        for (std::size_t i = 0; i < block; ++i) out.push_back(checked_term(1, off, seqA.term(i)));
    std::sort(out.begin(), out.end());

    AdkResult result;
    try {
        result.seed = SeedSet(std::move(out));
    } catch (const input_error& e) {
        throw inconsistency_error(std::string("adk seed failed validation: ") + e.what());
    }
    result.predicted_rho = 10 * c - d;
    result.predicted_alpha =
        certA.alpha * Triadic::make(10, 2) - Triadic(d).times_pow3(-(k + 2));
    return result;
}

std::vector<std::int64_t> repeat_interval(const GeneratedSequence& seqA,
                                          const IndependenceCertificate& certA, int k) {
    const DRange range = admissible_d_range(seqA, certA, k);
    const std::int64_t c = seqA.term(std::size_t{1} << k);
    std::vector<std::int64_t> out;
    if (range.empty()) return out;
    // rho' = 10c - d over admissible d, i.e. [9c + lambda, 10c - omega - 1].
    const std::int64_t lo = 10 * c - range.high;
    const std::int64_t hi = 10 * c - range.low;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t r = lo; r <= hi; ++r) out.push_back(r);
    return out;
}

RealizedSeed* ConstructionCache::find(const std::string& recipe) {
    auto it = by_recipe_.find(recipe);
    return it == by_recipe_.end() ? nullptr : &it->second;
}

void ConstructionCache::store(const std::string& recipe, RealizedSeed state) {
    by_recipe_.emplace(std::move(recipe), std::move(state));
}

namespace {

/// Executes construction steps with caching and a per-call step budget.
class Executor {
public:
    Executor(const SearchLimits& limits, ConstructionCache* shared)
        : limits_(limits), cache_(shared ? shared : &local_) {}

    bool budget_left() const { return executions_ < limits_.max_step_executions; }

    const RealizedSeed& base_zero() { return realize_root("0", SeedSet({0}), 0, Triadic(1)); }

    const RealizedSeed& base_017() {
        return realize_root("op:017", SeedSet({0, 1, 7}), 2, Triadic::make(10, 2));
    }

    /// One adk move from `from` landing exactly on alpha_target, using the
    /// smallest feasible k. Null when no k within the caps works.
    const RealizedSeed* adk_to(const RealizedSeed& from, const Triadic& alpha_target) {
        const std::string recipe = recipe_of(from) + "|a:" + alpha_target.str();
        if (RealizedSeed* hit = cache_->find(recipe)) return hit;
        if (failed_.count(recipe)) return nullptr;

        const Triadic delta = Triadic(10) * from.cert.alpha - Triadic(9) * alpha_target;
        if (delta < Triadic(0) || (delta == Triadic(0) && from.omega >= 0)) {
            failed_.insert(recipe);
            return nullptr;
        }
        for (int k = from.cert.kappa + 1; k <= limits_.max_k; ++k) {
            if ((std::size_t{4} << k) > limits_.max_seed_size) break;
            const Triadic d_exact = delta.times_pow3(k);
            if (!d_exact.is_integer()) continue;
            const std::int64_t d = d_exact.to_integer();
            if (!extend_to(from, (std::size_t{1} << k) + 1)) break;
            const std::int64_t c = from.seq->term(std::size_t{1} << k);
            const std::int64_t b = from.seq->term((std::size_t{1} << k) - 1);
            if (d <= from.omega || d > c - from.cert.lambda) continue;
            if (b < from.cert.lambda + from.omega) continue;
            if (!budget_left()) return nullptr;
            const RealizedSeed* made = build_adk(from, k, d, recipe);
            if (made) return made;
        }
        failed_.insert(recipe);
        return nullptr;
    }

    /// Explicit (k, d) adk move; used by the repeat-factor search.
    const RealizedSeed* adk_at(const RealizedSeed& from, int k, std::int64_t d) {
        const std::string recipe =
            recipe_of(from) + "|k" + std::to_string(k) + "d" + std::to_string(d);
        if (RealizedSeed* hit = cache_->find(recipe)) return hit;
        if (failed_.count(recipe) || !budget_left()) return nullptr;
        if ((std::size_t{4} << k) > limits_.max_seed_size) return nullptr;
        if (!extend_to(from, (std::size_t{1} << k) + 1)) return nullptr;
        const RealizedSeed* made = build_adk(from, k, d, recipe);
        if (!made) failed_.insert(recipe);
        return made;
    }

    /// Product step at the minimal legal level k = kappa(A).
    const RealizedSeed* product_with(const RealizedSeed& from, const RealizedSeed& operand) {
        const std::string recipe = recipe_of(from) + "|p:" + operand.cert.alpha.str() + "#" +
                                   std::to_string(operand.seed.size());
        if (RealizedSeed* hit = cache_->find(recipe)) return hit;
        if (failed_.count(recipe) || !budget_left()) return nullptr;

        const int k = from.cert.kappa;
        const std::size_t size = (std::size_t{1} << k) * operand.seed.size();
        if (k > limits_.max_k || size > limits_.max_seed_size) {
            failed_.insert(recipe);
            return nullptr;
        }
        if (!extend_to(from, (std::size_t{1} << k) + 1)) return nullptr;
        try {
            SeedSet seed = product(*from.seq, from.cert, k, operand.seed);
            const Triadic alpha = from.cert.alpha * operand.cert.alpha;
            const std::int64_t rho = from.seq->term(std::size_t{1} << k) * operand.cert.rho;
            std::vector<ConstructionStep> steps = from.steps;
            steps.push_back(ConstructionStep{ConstructionStep::Kind::product, k, 0,
                                             operand.seed, rho, alpha});
            auto state =
                realize(std::move(seed), std::move(steps), k + operand.cert.kappa, alpha);
            if (state) {
                cache_->store(recipe, std::move(*state));
                return cache_->find(recipe);
            }
        } catch (const error&) {
        }
        failed_.insert(recipe);
        return nullptr;
    }

private:
    const RealizedSeed* build_adk(const RealizedSeed& from, int k, std::int64_t d,
                                  const std::string& recipe) {
        try {
            AdkResult built = adk(*from.seq, from.cert, k, d);
            std::vector<ConstructionStep> steps = from.steps;
            steps.push_back(ConstructionStep{ConstructionStep::Kind::adk, k, d, std::nullopt,
                                             built.predicted_rho, built.predicted_alpha});
            auto state = realize(std::move(built.seed), std::move(steps), k + 2,
                                 built.predicted_alpha);
            if (state) {
                cache_->store(recipe, std::move(*state));
                return cache_->find(recipe);
            }
        } catch (const error&) {
        }
        return nullptr;
    }

    /// Generates, certifies and measures a candidate seed. Null when the
    /// certificate is missing or disagrees with the predicted alpha.
    std::optional<RealizedSeed> realize(SeedSet seed, std::vector<ConstructionStep> steps,
                                        int kappa_expected, const Triadic& alpha_expected) {
        ++executions_;
        const int spread = kappa_expected <= 9 ? 2 : 1;
        const std::size_t horizon =
            std::max<std::size_t>(std::size_t{1} << (kappa_expected + spread), 64);
        RealizedSeed state;
        state.seed = seed;
        try {
            state.seq = std::make_shared<GeneratedSequence>(generate(seed, horizon));
        } catch (const resource_error&) {
            return std::nullopt;
        }
        CertifyOptions opts;
        opts.k_max = kappa_expected + spread - 1;
        auto cert = certify(*state.seq, opts);
        if (!cert || !(cert->alpha == alpha_expected)) return std::nullopt;
        state.cert = *cert;
        state.omega = obstruction_set(seed).omega;
        state.steps = std::move(steps);
        return state;
    }

    const RealizedSeed& realize_root(const std::string& recipe, SeedSet seed, int kappa,
                                     const Triadic& alpha) {
        if (RealizedSeed* hit = cache_->find(recipe)) return *hit;
        auto state = realize(std::move(seed), {}, kappa, alpha);
        if (!state) throw inconsistency_error("root seed failed to certify: " + recipe);
        cache_->store(recipe, std::move(*state));
        return *cache_->find(recipe);
    }

    static std::string recipe_of(const RealizedSeed& state) {
        std::string r = "0";
        for (const auto& step : state.steps) {
            if (step.kind == ConstructionStep::Kind::adk)
                r += "|a:" + step.predicted_alpha.str();
            else
                r += "|p:" + step.predicted_alpha.str() + "#" +
                     std::to_string(step.operand ? step.operand->size() : 0);
        }
        return r;
    }

    bool extend_to(const RealizedSeed& state, std::size_t count) {
        if (state.seq->size() >= count) return true;
        try {
            state.seq->extend(count - state.seq->size());
            return true;
        } catch (const resource_error&) {
            return false;
        }
    }

    SearchLimits limits_;
    ConstructionCache* cache_;
    ConstructionCache local_;
    std::set<std::string> failed_;
    std::size_t executions_ = 0;
};

/// A candidate route to a scaling target: an optional opening adk tune v1,
/// an optional small product operand, m products by {0,1,7}, and an
/// optional closing adk hop onto the target.
struct ScalingPlan {
    Triadic v1{1};
    int v2 = -1; // operand catalog index, -1 for none
    int m = 0;
    bool hop = false;
    Triadic alpha0; // value before the closing hop (== target when !hop)
    int depth = 0;
    int kappa_estimate = 0;
};

struct CatalogEntry {
    Triadic alpha;
    int kappa;
};

std::vector<CatalogEntry> operand_catalog() {
    std::vector<CatalogEntry> cat;
    cat.push_back({Triadic::make(10, 2), 2});   // {0,1,7}
    cat.push_back({Triadic::make(100, 4), 4});  // {0,1,7} squared
    for (std::int64_t q : {28, 29}) cat.push_back({Triadic::make(q, 3), 3});
    for (std::int64_t q : {82, 83, 85, 86, 88, 89}) cat.push_back({Triadic::make(q, 4), 4});
    return cat;
}

int v1_kappa(const Triadic& v1) {
    return v1 == Triadic(1) ? 0 : std::max(3, static_cast<int>(v1.den_pow3()));
}

} // namespace

ConstructionChain target_scaling(const Triadic& alpha_target, const SearchLimits& limits,
                                 ConstructionCache* cache) {
    if (alpha_target < Triadic(1))
        throw precondition_error("scaling target must be at least 1, got " + alpha_target.str());

    Executor ex(limits, cache);
    const RealizedSeed& base = ex.base_zero();
    if (alpha_target == Triadic(1)) return ConstructionChain{base.seed, {}, base.seed};

    const Triadic one(1);
    const Triadic ten_ninths = Triadic::make(10, 2);
    const auto catalog = operand_catalog();

    std::vector<ScalingPlan> plans;
    Triadic power(1);
    for (int m = 0; m <= 6; ++m, power = power * ten_ninths) {
        for (int v2 = -1; v2 < static_cast<int>(catalog.size()); ++v2) {
            const Triadic base_value = v2 < 0 ? power : power * catalog[v2].alpha;
            const int v2_kappa = v2 < 0 ? 0 : catalog[v2].kappa;
            const int base_depth = m + (v2 < 0 ? 0 : 1);

            // Exact route: target = v1 * base_value with v1 in [1, 10/9].
            if (auto q = Triadic::divide_exact(alpha_target, base_value);
                q && one <= *q && *q <= ten_ninths) {
                ScalingPlan plan;
                plan.v1 = *q;
                plan.v2 = v2;
                plan.m = m;
                plan.alpha0 = alpha_target;
                plan.depth = base_depth + (*q == one ? 0 : 1);
                plan.kappa_estimate = v1_kappa(*q) + v2_kappa + 2 * m;
                if (plan.depth > 0 && plan.depth <= limits.max_depth &&
                    plan.kappa_estimate <= limits.max_k + 2)
                    plans.push_back(plan);
            }

            // Hop route: alpha0 = v1 * base_value in [9T/10, T), then adk.
            const int budget = std::min(limits.max_k - 1, 11) - v2_kappa - 2 * m;
            for (int e1 = 0; e1 <= std::min(budget, 12); ++e1) {
                const double base_d = base_value.to_double();
                const double t_d = alpha_target.to_double();
                const double pow3 = std::pow(3.0, e1);
                const auto lo_n =
                    static_cast<std::int64_t>(std::floor(0.9 * t_d / base_d * pow3)) - 1;
                const auto hi_n = static_cast<std::int64_t>(std::ceil(t_d / base_d * pow3)) + 1;
                for (std::int64_t n = std::max<std::int64_t>(lo_n, 1); n <= hi_n; ++n) {
                    const Triadic v1 = Triadic::make(n, e1);
                    if (v1.den_pow3() != e1) continue; // canonical exponent only
                    if (v1 < one || ten_ninths < v1) continue;
                    const Triadic alpha0 = v1 * base_value;
                    if (Triadic(10) * alpha0 < Triadic(9) * alpha_target) continue;
                    if (!(alpha0 < alpha_target)) continue;
                    ScalingPlan plan;
                    plan.v1 = v1;
                    plan.v2 = v2;
                    plan.m = m;
                    plan.hop = true;
                    plan.alpha0 = alpha0;
                    plan.depth = base_depth + (v1 == one ? 0 : 1) + 1;
                    plan.kappa_estimate = v1_kappa(v1) + v2_kappa + 2 * m;
                    if (plan.depth <= limits.max_depth && plan.kappa_estimate <= 11)
                        plans.push_back(plan);
                }
            }
        }
    }

    std::sort(plans.begin(), plans.end(), [](const ScalingPlan& a, const ScalingPlan& b) {
        if (a.depth != b.depth) return a.depth < b.depth;
        if (a.kappa_estimate != b.kappa_estimate) return a.kappa_estimate < b.kappa_estimate;
        if (a.m != b.m) return a.m < b.m;
        if (a.v2 != b.v2) return a.v2 < b.v2;
        if (!(a.alpha0 == b.alpha0)) return a.alpha0 < b.alpha0;
        return false;
    });

    for (const auto& plan : plans) {
        if (!ex.budget_left()) break;
        const RealizedSeed* cur = &ex.base_zero();
        if (!(plan.v1 == one)) {
            cur = ex.adk_to(*cur, plan.v1);
            if (!cur) continue;
        }
        if (plan.v2 >= 0) {
            const CatalogEntry& entry = catalog[plan.v2];
            const RealizedSeed* op = nullptr;
            if (entry.alpha == ten_ninths) {
                op = &ex.base_017();
            } else if (entry.alpha == Triadic::make(100, 4)) {
                op = ex.product_with(ex.base_017(), ex.base_017());
            } else {
                op = ex.adk_to(ex.base_zero(), entry.alpha);
            }
            if (!op) continue;
            cur = ex.product_with(*cur, *op);
            if (!cur) continue;
        }
        bool ok = true;
        for (int i = 0; i < plan.m; ++i) {
            cur = ex.product_with(*cur, ex.base_017());
            if (!cur) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        if (!(cur->cert.alpha == alpha_target)) {
            cur = ex.adk_to(*cur, alpha_target);
            if (!cur) continue;
        }
        if (cur->steps.size() > static_cast<std::size_t>(limits.max_depth)) continue;
        return ConstructionChain{base.seed, cur->steps, cur->seed};
    }

    throw resource_error("scaling target " + alpha_target.str() +
                         " not reached within caps (max depth " +
                         std::to_string(limits.max_depth) + ", max k " +
                         std::to_string(limits.max_k) + ", max seed size " +
                         std::to_string(limits.max_seed_size) + ")");
}

ConstructionChain target_repeat(std::int64_t rho_target, const SearchLimits& limits,
                                ConstructionCache* cache) {
    if (rho_target < 1) throw precondition_error("repeat target must be at least 1");

    Executor ex(limits, cache);
    const RealizedSeed& base = ex.base_zero();
    if (rho_target == 1) return ConstructionChain{base.seed, {}, base.seed};

    std::deque<RealizedSeed> owned; // stable storage for expanded states
    std::deque<const RealizedSeed*> queue;
    queue.push_back(&base);

    while (!queue.empty() && ex.budget_left()) {
        const RealizedSeed* state = queue.front();
        queue.pop_front();
        if (state->steps.size() >= static_cast<std::size_t>(limits.max_depth)) continue;

        // No descendant can produce a repeat factor below
        // 9*a_{2^{kappa+1}} + lambda = 27*rho + lambda.
        if (27 * state->cert.rho + state->cert.lambda > rho_target) continue;

        for (int k = state->cert.kappa + 1; k <= limits.max_k; ++k) {
            if ((std::size_t{4} << k) > limits.max_seed_size) break;
            const std::size_t need = (std::size_t{1} << k) + 1;
            if (state->seq->size() < need) state->seq->extend(need - state->seq->size());
            const std::int64_t c = state->seq->term(std::size_t{1} << k);
            const std::int64_t b = state->seq->term((std::size_t{1} << k) - 1);
            if (b < state->cert.lambda + state->omega) continue;
            const std::int64_t lo = 9 * c + state->cert.lambda;
            const std::int64_t hi = 10 * c - state->omega - 1;
            if (lo > rho_target) break; // intervals only move up with k
            if (rho_target <= hi) {
                const std::int64_t d = 10 * c - rho_target;
                const RealizedSeed* hit = ex.adk_at(*state, k, d);
                if (hit && hit->cert.rho == rho_target)
                    return ConstructionChain{base.seed, hit->steps, hit->seed};
                continue;
            }
            // Interval entirely below the target; expand children that can
            // still reach it, lowest d first.
            for (std::int64_t d = state->omega + 1; d <= c - state->cert.lambda; ++d) {
                const std::int64_t child_rho = 10 * c - d;
                const std::int64_t child_lambda = 2 * b + 6 * c - d + 1;
                if (27 * child_rho + child_lambda > rho_target) continue;
                if (!ex.budget_left()) break;
                const RealizedSeed* child = ex.adk_at(*state, k, d);
                if (!child) continue;
                owned.push_back(*child);
                queue.push_back(&owned.back());
            }
        }
    }

    throw resource_error("repeat factor " + std::to_string(rho_target) +
                         " not reached within caps; the search is inconclusive");
}

SeedSet replay_chain(const ConstructionChain& chain, const SearchLimits& limits) {
    (void)limits;
    SeedSet current = chain.start;
    for (const auto& step : chain.steps) {
        // An adk step requires kappa < k and a product step kappa <= k, so
        // a horizon of 2^{k+2} always covers the certificate scan.
        const std::size_t horizon = std::size_t{1} << (step.k + 2);
        GeneratedSequence seq = generate(current, std::max<std::size_t>(64, horizon));
        CertifyOptions opts;
        opts.k_max = step.k;
        auto cert = certify(seq, opts);
        if (!cert)
            throw inconsistency_error("chain replay: intermediate seed failed to certify");
        if (step.kind == ConstructionStep::Kind::adk) {
            AdkResult r = adk(seq, *cert, step.k, step.d);
            if (r.predicted_rho != step.predicted_rho ||
                !(r.predicted_alpha == step.predicted_alpha))
                throw inconsistency_error("chain replay: adk predictions diverge");
            current = r.seed;
        } else {
            if (!step.operand) throw input_error("product step without an operand seed");
            current = product(seq, *cert, step.k, *step.operand);
        }
    }
    if (!(current == chain.final_seed))
        throw inconsistency_error("chain replay does not reproduce the final seed");
    return current;
}

} // namespace stanley
