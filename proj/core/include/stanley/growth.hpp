#ifndef STANLEY_GROWTH_HPP
#define STANLEY_GROWTH_HPP

#include <cstddef>
#include <vector>

#include "stanley/certificate.hpp"

namespace stanley {

enum class GrowthClass { type1, type2, unknown };

/// Heuristic growth classification. Never a proof: the report carries the
/// raw fits so callers can re-judge.
struct GrowthReport {
    GrowthClass classification = GrowthClass::unknown;
    double fitted_exponent = 0.0;        // free slope of log a_n vs log n
    double fit_residual = 0.0;           // RMS residual of the free fit
    double type1_model_residual = 0.0;   // RMS residual of C * n^{log2 3}
    double quadlog_residual = 0.0;       // RMS residual of C * n^2 / log n
    double quadlog_exponent = 0.0;       // fitted m in C * n^m / log n
    std::size_t window_lo = 0;           // fit window [window_lo, window_hi)
    std::size_t window_hi = 0;
    bool certified = false;              // an independence certificate exists
};

/// Fits log a_n vs log n over a multi-octave window. type1 when a
/// certificate exists or the free exponent is within 0.1 of log2(3); type2
/// when the n^m/log n exponent is within 0.2 of 2 and that model beats the
/// n^{log2 3} law. Requires at least 512 terms.
GrowthReport classify_growth(const GeneratedSequence& seq,
                             const CertifyOptions& options = {});

/// Indices 100 <= n < horizon with a_n > n^2/2, an empirical guard with a
/// deliberately slack constant. Expected to be empty.
std::vector<std::size_t> quadratic_bound_violations(const GeneratedSequence& seq, std::size_t from = 100);

const char* growth_class_name(GrowthClass c);

} // namespace stanley

#endif
