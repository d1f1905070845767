// stanley: generate greedy 3-free sequences, certify their independence
// parameters, realize target scaling/repeat factors, and cross-check every
// fast path against brute-force oracles.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "serialize.hpp"
#include "stanley/errors.hpp"
#include "stanley/rng.hpp"

using namespace stanley;
using stanley_cli::certificate_json;
using stanley_cli::ojson;
using stanley_cli::terms_csv;
using stanley_cli::to_json;

namespace {

constexpr const char* kVersion = "stanley 0.1.0";

SequenceOptions sequence_options_from_env() {
    SequenceOptions opts;
    if (const char* cap = std::getenv("STANLEY_MEM_CAP_MB")) {
        char* end = nullptr;
        const unsigned long long mb = std::strtoull(cap, &end, 10);
        if (end && *end == '\0' && mb > 0) opts.sieve_mem_cap_bytes = std::uint64_t{mb} << 20;
    }
    return opts;
}

/// Routes results to stdout or a file; a run manifest is written next to
/// file outputs.
class Emitter {
public:
    Emitter(std::string command, ojson parameters, std::string out_path)
        : command_(std::move(command)),
          parameters_(std::move(parameters)),
          out_path_(std::move(out_path)),
          start_(std::chrono::steady_clock::now()) {}

    void emit(const std::string& content) const {
        if (out_path_.empty()) {
            std::cout << content;
            return;
        }
        {
            std::ofstream out(out_path_, std::ios::binary);
            if (!out) throw input_error("cannot open output file " + out_path_);
            out << content;
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        ojson manifest;
        manifest["command"] = command_;
        manifest["parameters"] = parameters_;
        manifest["versions"] = kVersion;
        manifest["outputs"] = ojson::array({out_path_});
        manifest["timing"] = seconds;
        std::ofstream mf(out_path_ + ".manifest.json", std::ios::binary);
        mf << manifest.dump(2) << '\n';
    }

    void emit(const ojson& value) const { emit(value.dump(2) + "\n"); }

private:
    std::string command_;
    ojson parameters_;
    std::string out_path_;
    std::chrono::steady_clock::time_point start_;
};

Triadic parse_alpha_arg(const std::string& text) {
    auto value = Triadic::parse(text);
    if (!value)
        throw input_error("cannot parse '" + text +
                          "' as a triadic number (use p, p/3^e, or p/q with q a power of 3)");
    return *value;
}

struct CertifiedSeq {
    GeneratedSequence seq;
    IndependenceCertificate cert;
};

CertifiedSeq certify_or_fail(const SeedSet& seed, std::size_t horizon, int k_max) {
    GeneratedSequence seq = generate(seed, horizon, sequence_options_from_env());
    CertifyOptions opts;
    opts.k_max = k_max;
    auto cert = certify(seq, opts);
    if (!cert)
        throw precondition_error("seed " + seed.str() +
                                 " has no independence certificate at horizon " +
                                 std::to_string(horizon));
    return {std::move(seq), *cert};
}

/// Certificate for a constructed seed, retrying with larger horizons until
/// the scan can reach the seed's kappa.
ojson final_certificate_json(const SeedSet& seed) {
    const SequenceOptions opts = sequence_options_from_env();
    std::size_t horizon = 512;
    while (horizon < 2 * seed.size()) horizon *= 2;
    for (; horizon <= (std::size_t{1} << 18); horizon *= 4) {
        GeneratedSequence seq = generate(seed, horizon, opts);
        CertifyOptions copts;
        copts.k_max = 16;
        if (auto cert = certify(seq, copts)) return certificate_json(seed, *cert);
    }
    return ojson(nullptr);
}

int run_generate(const std::string& seed_text, std::size_t count, const std::string& format,
                 const std::string& out_path) {
    const SeedSet seed = SeedSet::parse(seed_text);
    ojson params{{"seed", seed_text}, {"count", count}, {"format", format}};
    Emitter emitter("generate", params, out_path);
    GeneratedSequence seq = generate(seed, count, sequence_options_from_env());
    if (format == "json") {
        ojson out;
        out["seed"] = to_json(seed);
        out["terms"] = std::vector<std::int64_t>(seq.terms().begin(), seq.terms().end());
        emitter.emit(out);
    } else {
        emitter.emit(terms_csv(seq.terms()));
    }
    return 0;
}

int run_analyze(const std::string& seed_text, std::size_t horizon, int k_max,
                const std::string& out_path) {
    const SeedSet seed = SeedSet::parse(seed_text);
    ojson params{{"seed", seed_text}, {"horizon", horizon}, {"kmax", k_max}};
    Emitter emitter("analyze", params, out_path);
    GeneratedSequence seq = generate(seed, horizon, sequence_options_from_env());
    CertifyOptions opts;
    opts.k_max = k_max;
    auto cert = certify(seq, opts);
    ojson out;
    if (!cert) {
        out["seed"] = to_json(seed);
        out["horizon"] = horizon;
        out["certificate"] = nullptr;
        emitter.emit(out);
        return 0;
    }
    out["certificate"] = certificate_json(seed, *cert);
    out["decomposition"] = to_json(scaling_decomposition(seq, *cert));
    out["repeat_structure"] = repeat_structure_check(seq, *cert);
    emitter.emit(out);
    return 0;
}

int run_omega(const std::string& seed_text, const std::string& out_path) {
    const SeedSet seed = SeedSet::parse(seed_text);
    Emitter emitter("omega", ojson{{"seed", seed_text}}, out_path);
    const ObstructionReport report = obstruction_set(seed);
    ojson out;
    out["seed"] = to_json(seed);
    out["members"] = report.members;
    out["omega"] = report.omega;
    emitter.emit(out);
    return 0;
}

int run_construct_product(const std::string& seed_a, int k, const std::string& seed_b,
                          std::size_t horizon, const std::string& out_path) {
    ojson params{{"seed-a", seed_a}, {"k", k}, {"seed-b", seed_b}, {"horizon", horizon}};
    Emitter emitter("construct product", params, out_path);
    CertifiedSeq a = certify_or_fail(SeedSet::parse(seed_a), horizon, 12);
    const SeedSet b = SeedSet::parse(seed_b);
    if (a.seq.size() < (std::size_t{1} << k) + 1)
        a.seq.extend((std::size_t{1} << k) + 1 - a.seq.size());
    const SeedSet result = product(a.seq, a.cert, k, b);

    ojson out;
    out["seed"] = to_json(result);
    CertifyOptions opts;
    opts.k_max = 12;
    if (auto cert_b = certify(generate(b, horizon, sequence_options_from_env()), opts)) {
        out["predicted_alpha"] = to_json(a.cert.alpha * cert_b->alpha);
        out["predicted_rho"] = a.seq.term(std::size_t{1} << k) * cert_b->rho;
    } else {
        out["predicted_alpha"] = nullptr;
        out["predicted_rho"] = nullptr;
    }
    emitter.emit(out);
    return 0;
}

int run_construct_adk(const std::string& seed_text, int k, std::int64_t d, std::size_t horizon,
                      const std::string& out_path) {
    ojson params{{"seed", seed_text}, {"k", k}, {"d", d}, {"horizon", horizon}};
    Emitter emitter("construct adk", params, out_path);
    CertifiedSeq a = certify_or_fail(SeedSet::parse(seed_text), horizon, 12);
    if (a.seq.size() < (std::size_t{1} << k) + 1)
        a.seq.extend((std::size_t{1} << k) + 1 - a.seq.size());
    const AdkResult result = adk(a.seq, a.cert, k, d);
    ojson out;
    out["seed"] = to_json(result.seed);
    out["predicted_rho"] = result.predicted_rho;
    out["predicted_alpha"] = to_json(result.predicted_alpha);
    emitter.emit(out);
    return 0;
}

int run_search_scaling(const std::string& alpha_text, int max_depth,
                       const std::string& out_path) {
    const Triadic target = parse_alpha_arg(alpha_text);
    ojson params{{"alpha", alpha_text}, {"max-depth", max_depth}};
    Emitter emitter("search scaling", params, out_path);
    SearchLimits limits;
    limits.max_depth = max_depth;
    const ConstructionChain chain = target_scaling(target, limits);
    ojson out;
    out["target"] = to_json(target);
    out["chain"] = to_json(chain);
    out["certificate"] = final_certificate_json(chain.final_seed);
    emitter.emit(out);
    return 0;
}

int run_search_repeat(std::int64_t rho, int max_depth, const std::string& out_path) {
    ojson params{{"rho", rho}, {"max-depth", max_depth}};
    Emitter emitter("search repeat", params, out_path);
    SearchLimits limits;
    limits.max_depth = max_depth;
    const ConstructionChain chain = target_repeat(rho, limits);
    ojson out;
    out["target"] = rho;
    out["chain"] = to_json(chain);
    out["certificate"] = final_certificate_json(chain.final_seed);
    emitter.emit(out);
    return 0;
}

int run_verify_cover(const std::string& seed_text, int k, const std::string& part,
                     std::int64_t x, std::optional<std::int64_t> y, std::size_t horizon,
                     const std::string& out_path) {
    ojson params{{"seed", seed_text}, {"k", k}, {"part", part}, {"x", x}, {"horizon", horizon}};
    Emitter emitter("verify cover", params, out_path);
    CertifiedSeq a = certify_or_fail(SeedSet::parse(seed_text),
                                     std::max(horizon, (std::size_t{1} << (k + 2))), 12);
    oracle::CoverClaim claim;
    claim.part = part[0];
    claim.x = x;
    claim.y = y ? *y : x + a.seq.term(std::size_t{1} << k); // default: one block up
    const bool ok = oracle::check_cover_claim(a.seq, a.cert, k, claim);
    ojson out;
    out["claim"] = ojson{{"part", part}, {"x", claim.x}, {"y", claim.y}, {"k", k}};
    out["result"] = ok;
    emitter.emit(out);
    return ok ? 0 : 4;
}

int run_verify_main_prefix(const std::string& seed_text, int k, std::int64_t d,
                           std::size_t horizon, const std::string& out_path) {
    ojson params{{"seed", seed_text}, {"k", k}, {"d", d}, {"horizon", horizon}};
    Emitter emitter("verify main-prefix", params, out_path);
    CertifiedSeq a = certify_or_fail(SeedSet::parse(seed_text),
                                     std::max(horizon, (std::size_t{1} << (k + 2))), 12);
    const bool ok = oracle::check_main_prefix(a.seq, a.cert, k, d);
    ojson out;
    out["k"] = k;
    out["d"] = d;
    out["result"] = ok;
    emitter.emit(out);
    return ok ? 0 : 4;
}

int run_verify_oracle(std::size_t trials, std::int64_t max_seed_value, std::size_t terms,
                      std::uint64_t rng_seed, const std::string& out_path) {
    ojson params{{"trials", trials},
                 {"max-seed-value", max_seed_value},
                 {"terms", terms},
                 {"rng-seed", rng_seed}};
    Emitter emitter("verify oracle", params, out_path);
    SplitMix64 rng(rng_seed);
    const SequenceOptions opts = sequence_options_from_env();
    ojson mismatches = ojson::array();
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<std::int64_t> elems{0};
        const std::size_t want = 1 + rng.below(5);
        int attempts = 0;
        while (elems.size() < want && attempts < 300) {
            ++attempts;
            const std::int64_t v = 1 + static_cast<std::int64_t>(
                                           rng.below(static_cast<std::uint64_t>(max_seed_value)));
            std::vector<std::int64_t> trial = elems;
            trial.insert(std::lower_bound(trial.begin(), trial.end(), v), v);
            if (std::adjacent_find(trial.begin(), trial.end()) != trial.end()) continue;
            if (!is_three_free(trial)) continue;
            elems = std::move(trial);
        }
        const SeedSet seed(elems);
        const std::size_t count = std::max(terms, seed.size());
        GeneratedSequence fast = generate(seed, count, opts);
        const std::vector<std::int64_t> slow = oracle::naive_generate(seed, count);
        if (!std::equal(fast.terms().begin(), fast.terms().end(), slow.begin(), slow.end()))
            mismatches.push_back(to_json(seed));
    }
    ojson out;
    out["trials"] = trials;
    out["terms"] = terms;
    out["rng_seed"] = rng_seed;
    out["mismatches"] = mismatches;
    out["pass"] = mismatches.empty();
    emitter.emit(out);
    return mismatches.empty() ? 0 : 4;
}

int run_classify(const std::string& seed_text, std::size_t count, const std::string& out_path) {
    const SeedSet seed = SeedSet::parse(seed_text);
    ojson params{{"seed", seed_text}, {"count", count}};
    Emitter emitter("classify", params, out_path);
    GeneratedSequence seq = generate(seed, count, sequence_options_from_env());
    ojson out = to_json(classify_growth(seq));
    out["seed"] = to_json(seed);
    emitter.emit(out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stanley sequence toolkit: greedy 3-free generation, independence "
                 "certificates, scaling/repeat-factor constructions, and brute-force "
                 "verification"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string seed_text, seed_a, seed_b, format = "csv", out_path, part = "a", alpha_text;
    std::size_t count = 0, horizon = 4096, trials = 100, terms = 500;
    int k = 0, k_max = 12, max_depth = 8;
    std::int64_t d = 0, x = 0, rho = 0, max_seed_value = 50;
    std::optional<std::int64_t> y;
    std::uint64_t rng_seed = 12345;

    auto* cmd_generate = app.add_subcommand("generate", "Generate sequence terms");
    cmd_generate->add_option("--seed", seed_text, "Seed as comma-separated integers")->required();
    cmd_generate->add_option("--count", count, "Number of terms")->required();
    cmd_generate->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    cmd_generate->add_option("--out", out_path, "Write output (and a manifest) to this file");

    auto* cmd_analyze =
        app.add_subcommand("analyze", "Certificate, decomposition and repeat structure");
    cmd_analyze->add_option("--seed", seed_text)->required();
    cmd_analyze->add_option("--horizon", horizon, "Terms to generate")->required();
    cmd_analyze->add_option("--kmax", k_max, "Largest independence index scanned");
    cmd_analyze->add_option("--out", out_path);

    auto* cmd_omega = app.add_subcommand("omega", "Obstruction set O(A) and omega(A)");
    cmd_omega->add_option("--seed", seed_text)->required();
    cmd_omega->add_option("--out", out_path);

    auto* cmd_construct = app.add_subcommand("construct", "Seed constructions");
    cmd_construct->require_subcommand(1);
    auto* cmd_product = cmd_construct->add_subcommand("product", "Product seed A (x)_k B");
    cmd_product->add_option("--seed-a", seed_a)->required();
    cmd_product->add_option("--k", k)->required();
    cmd_product->add_option("--seed-b", seed_b)->required();
    cmd_product->add_option("--horizon", horizon);
    cmd_product->add_option("--out", out_path);
    auto* cmd_adk = cmd_construct->add_subcommand("adk", "Interpolated seed at level k, offset d");
    cmd_adk->add_option("--seed", seed_text)->required();
    cmd_adk->add_option("--k", k)->required();
    cmd_adk->add_option("--d", d)->required();
    cmd_adk->add_option("--horizon", horizon);
    cmd_adk->add_option("--out", out_path);

    auto* cmd_search = app.add_subcommand("search", "Chain searches for target parameters");
    cmd_search->require_subcommand(1);
    auto* cmd_scaling = cmd_search->add_subcommand("scaling", "Reach a target scaling factor");
    cmd_scaling->add_option("--alpha", alpha_text, "Target (p, p/3^e, or p/q with q a 3-power)")
        ->required();
    cmd_scaling->add_option("--max-depth", max_depth);
    cmd_scaling->add_option("--out", out_path);
    auto* cmd_repeat = cmd_search->add_subcommand("repeat", "Reach a target repeat factor");
    cmd_repeat->add_option("--rho", rho)->required();
    cmd_repeat->add_option("--max-depth", max_depth);
    cmd_repeat->add_option("--out", out_path);

    auto* cmd_verify = app.add_subcommand("verify", "Brute-force verification");
    cmd_verify->require_subcommand(1);
    auto* cmd_cover = cmd_verify->add_subcommand("cover", "Check one cover-lemma claim");
    cmd_cover->add_option("--seed", seed_text)->required();
    cmd_cover->add_option("--k", k)->required();
    cmd_cover->add_option("--part", part)
        ->required()
        ->check(CLI::IsMember({"a", "b", "c", "d", "e"}));
    cmd_cover->add_option("--x", x);
    cmd_cover->add_option("--y", y, "Defaults to x + a_{2^k}");
    cmd_cover->add_option("--horizon", horizon);
    cmd_cover->add_option("--out", out_path);
    auto* cmd_prefix = cmd_verify->add_subcommand("main-prefix", "Check the proof prefix J");
    cmd_prefix->add_option("--seed", seed_text)->required();
    cmd_prefix->add_option("--k", k)->required();
    cmd_prefix->add_option("--d", d)->required();
    cmd_prefix->add_option("--horizon", horizon);
    cmd_prefix->add_option("--out", out_path);
    auto* cmd_oracle =
        cmd_verify->add_subcommand("oracle", "Randomized sieve-vs-naive equivalence");
    cmd_oracle->add_option("--trials", trials);
    cmd_oracle->add_option("--max-seed-value", max_seed_value);
    cmd_oracle->add_option("--terms", terms);
    cmd_oracle->add_option("--rng-seed", rng_seed, "Deterministic stream seed");
    cmd_oracle->add_option("--out", out_path);

    auto* cmd_classify = app.add_subcommand("classify", "Heuristic growth classification");
    cmd_classify->add_option("--seed", seed_text)->required();
    cmd_classify->add_option("--count", count)->required();
    cmd_classify->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1; // any usage problem exits 1
    }

    try {
        if (cmd_generate->parsed()) return run_generate(seed_text, count, format, out_path);
        if (cmd_analyze->parsed()) return run_analyze(seed_text, horizon, k_max, out_path);
        if (cmd_omega->parsed()) return run_omega(seed_text, out_path);
        if (cmd_product->parsed())
            return run_construct_product(seed_a, k, seed_b, horizon, out_path);
        if (cmd_adk->parsed()) return run_construct_adk(seed_text, k, d, horizon, out_path);
        if (cmd_scaling->parsed()) return run_search_scaling(alpha_text, max_depth, out_path);
        if (cmd_repeat->parsed()) return run_search_repeat(rho, max_depth, out_path);
        if (cmd_cover->parsed())
            return run_verify_cover(seed_text, k, part, x, y, horizon, out_path);
        if (cmd_prefix->parsed())
            return run_verify_main_prefix(seed_text, k, d, horizon, out_path);
        if (cmd_oracle->parsed())
            return run_verify_oracle(trials, max_seed_value, terms, rng_seed, out_path);
        if (cmd_classify->parsed()) return run_classify(seed_text, count, out_path);
        std::cerr << "no subcommand selected\n";
        return 1;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 1;
    } catch (const precondition_error& e) {
        std::cerr << "precondition error: " << e.what() << '\n';
        return 2;
    } catch (const resource_error& e) {
        std::cerr << "resource cap: " << e.what() << '\n';
        return 3;
    } catch (const inconsistency_error& e) {
        std::cerr << "internal inconsistency: " << e.what() << '\n';
        return 4;
    }
}
