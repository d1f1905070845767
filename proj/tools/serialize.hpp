#ifndef STANLEY_TOOLS_SERIALIZE_HPP
#define STANLEY_TOOLS_SERIALIZE_HPP

#include <string>

#include "json.hpp"
#include "stanley/certificate.hpp"
#include "stanley/construct.hpp"
#include "stanley/decomposition.hpp"
#include "stanley/growth.hpp"
#include "stanley/oracle.hpp"

namespace stanley_cli {

// ordered_json keeps field order deterministic so identical invocations
// produce byte-identical output.
using ojson = nlohmann::ordered_json;

inline ojson to_json(const stanley::SeedSet& seed) {
    return ojson(std::vector<std::int64_t>(seed.elements().begin(), seed.elements().end()));
}

inline ojson to_json(const stanley::Triadic& t) {
    return ojson{{"num", t.num()}, {"den_pow3", t.den_pow3()}};
}

/// The stable certificate schema: exactly
/// {seed, horizon, kappa, lambda, rho, alpha:{num,den_pow3}, proven}.
inline ojson certificate_json(const stanley::SeedSet& seed,
                              const stanley::IndependenceCertificate& cert) {
    ojson out;
    out["seed"] = to_json(seed);
    out["horizon"] = cert.horizon;
    out["kappa"] = cert.kappa;
    out["lambda"] = cert.lambda;
    out["rho"] = cert.rho;
    out["alpha"] = to_json(cert.alpha);
    out["proven"] = cert.proven;
    return out;
}

inline ojson to_json(const stanley::ObstructionReport& report) {
    return ojson{{"members", report.members}, {"omega", report.omega}};
}

inline ojson to_json(const stanley::ScalingDecomposition& dec) {
    ojson b = ojson::array();
    for (const auto& v : dec.b) b.push_back(to_json(v));
    return ojson{{"alpha", to_json(dec.alpha)}, {"period", dec.period()}, {"b", b}};
}

inline ojson to_json(const stanley::GrowthReport& report) {
    return ojson{{"classification", stanley::growth_class_name(report.classification)},
                 {"fitted_exponent", report.fitted_exponent},
                 {"fit_residual", report.fit_residual},
                 {"type1_model_residual", report.type1_model_residual},
                 {"quadlog_residual", report.quadlog_residual},
                 {"quadlog_exponent", report.quadlog_exponent},
                 {"window", {report.window_lo, report.window_hi}},
                 {"certified", report.certified}};
}

inline ojson to_json(const stanley::ConstructionStep& step) {
    ojson out;
    out["kind"] = step.kind == stanley::ConstructionStep::Kind::adk ? "adk" : "product";
    out["k"] = step.k;
    if (step.kind == stanley::ConstructionStep::Kind::adk)
        out["d"] = step.d;
    else
        out["operand"] = to_json(*step.operand);
    out["predicted_rho"] = step.predicted_rho;
    out["predicted_alpha"] = to_json(step.predicted_alpha);
    return out;
}

inline ojson to_json(const stanley::ConstructionChain& chain) {
    ojson steps = ojson::array();
    for (const auto& s : chain.steps) steps.push_back(to_json(s));
    return ojson{{"start", to_json(chain.start)},
                 {"steps", steps},
                 {"final_seed", to_json(chain.final_seed)}};
}

inline ojson to_json(const stanley::oracle::ValidationReport& report) {
    return ojson{{"pass", report.pass},
                 {"certified", report.certified},
                 {"predicted_rho", report.predicted_rho},
                 {"predicted_alpha", to_json(report.predicted_alpha)},
                 {"measured_rho", report.measured_rho},
                 {"measured_alpha", to_json(report.measured_alpha)},
                 {"detail", report.detail}};
}

/// CSV term listing: header `index,value`, one row per term, no trailing
/// whitespace.
inline std::string terms_csv(std::span<const std::int64_t> terms) {
    std::string out = "index,value";
    for (std::size_t i = 0; i < terms.size(); ++i) {
        out += '\n';
        out += std::to_string(i);
        out += ',';
        out += std::to_string(terms[i]);
    }
    out += '\n';
    return out;
}

} // namespace stanley_cli

#endif
