#include "stanley/growth.hpp"

#include <cmath>

#include "stanley/errors.hpp"

namespace stanley {

namespace {

constexpr double kLog2Of3 = 1.5849625007211562;

double rms(double ss, double n) { return std::sqrt(ss / n); }

} // namespace

GrowthReport classify_growth(const GeneratedSequence& seq, const CertifyOptions& options) {
    if (seq.size() < 512)
        throw needs_more_terms_error("growth classification needs 512 terms", 512);

    GrowthReport report;
    // Structured sequences are self-similar staircases in log-log space, so
    // a single-octave window measures octave phase instead of growth; the
    // fit needs several octaves to stabilize.
    report.window_lo = std::max<std::size_t>(32, seq.size() / 50);
    report.window_hi = seq.size();

    const auto terms = seq.terms();
    const std::size_t lo = report.window_lo;
    const std::size_t hi = report.window_hi;
    const double n = static_cast<double>(hi - lo);

    double sx = 0, sy = 0, sxx = 0, sxy = 0, su = 0, sxu = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        const double x = std::log(static_cast<double>(i));
        const double y = std::log(static_cast<double>(terms[i]));
        const double u = y + std::log(x); // removes the 1/log n factor
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        su += u;
        sxu += x * u;
    }
    const double denom = n * sxx - sx * sx;
    const double free_slope = (n * sxy - sx * sy) / denom;
    const double free_icept = (sy - free_slope * sx) / n;
    const double quad_slope = (n * sxu - sx * su) / denom; // exponent m in n^m/log n
    const double t1_icept = (sy - kLog2Of3 * sx) / n;      // model C * n^{log2 3}
    const double quad_icept = (su - 2 * sx) / n;           // model C * n^2 / log n

    double ss_free = 0, ss_t1 = 0, ss_quad = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        const double x = std::log(static_cast<double>(i));
        const double y = std::log(static_cast<double>(terms[i]));
        const double rf = y - (free_icept + free_slope * x);
        const double r1 = y - (t1_icept + kLog2Of3 * x);
        const double r2 = y - (quad_icept + 2 * x - std::log(x));
        ss_free += rf * rf;
        ss_t1 += r1 * r1;
        ss_quad += r2 * r2;
    }

    report.fitted_exponent = free_slope;
    report.fit_residual = rms(ss_free, n);
    report.type1_model_residual = rms(ss_t1, n);
    report.quadlog_residual = rms(ss_quad, n);
    report.quadlog_exponent = quad_slope;
    report.certified = certify(seq, options).has_value();

    if (report.certified || std::abs(free_slope - kLog2Of3) <= 0.1) {
        report.classification = GrowthClass::type1;
    } else if (std::abs(quad_slope - 2.0) <= 0.2 &&
               report.quadlog_residual < report.type1_model_residual) {
        report.classification = GrowthClass::type2;
    } else {
        report.classification = GrowthClass::unknown;
    }
    return report;
}

std::vector<std::size_t> quadratic_bound_violations(const GeneratedSequence& seq, std::size_t from) {
    std::vector<std::size_t> violations;
    const auto terms = seq.terms();
    for (std::size_t n = from; n < terms.size(); ++n) {
        const std::int64_t bound = static_cast<std::int64_t>(n) * static_cast<std::int64_t>(n) / 2;
        if (terms[n] > bound) violations.push_back(n);
    }
    return violations;
}

const char* growth_class_name(GrowthClass c) {
    switch (c) {
        case GrowthClass::type1: return "type1";
        case GrowthClass::type2: return "type2";
        default: return "unknown";
    }
}

} // namespace stanley
