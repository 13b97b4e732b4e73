#pragma once

// Weighted L^p functionals of the Green function and its z-derivative over
// the meridian half-plane, plus scaling-law reports against the reference
// exponents fixed by the dilation invariance of the kernel.
//
// Admissible parameter windows are p in [1, 2) and delta in [0, 1); values
// outside them raise parameter_range_error. The windows are enforced as
// stated rather than re-derived from the epsilon bookkeeping that proves
// them; the excluded endpoints are probed separately by the truncation
// studies below.

#include <span>
#include <vector>

#include <axikernel/quadrature.hpp>

namespace axikernel {

enum class NormKind {
    lp_inverse_rho,  // (int int |Gamma|^p rho^{-1} drho dl)^{1/p},  p in [1,2)
    l2_rho,          // (int int |Gamma|^2 rho drho dl)^{1/2}
    dz_l1_rho_delta  // int int |dGamma/dz| rho^{-delta} drho dl,  delta in [0,1)
};

struct NormReport {
    NormKind kind = NormKind::lp_inverse_rho;
    double parameter = 0.0; // p or delta; unused for l2_rho
    std::vector<double> r_samples;
    std::vector<double> values;
    double fitted_exponent = 0.0;    // least squares on (log r, log value)
    double reference_exponent = 0.0; // 1/p - 1, 1/2, or -delta
    double constant = 0.0;           // geometric mean of value * r^{-reference}
    double max_ratio_deviation = 0.0;
};

/// Reference exponent of the scaling law for the given norm kind.
double norm_reference_exponent(NormKind kind, double parameter);

double norm_lp_inverse_rho(double r, double p, const QuadratureSpec& spec);
double norm_l2_rho(double r, const QuadratureSpec& spec);
double norm_dz_weighted(double r, double delta, const QuadratureSpec& spec);

/// Truncation studies at the excluded endpoints. The raw integral (no 1/p
/// root) with the square |rho - r| < h, |l| < h removed; admits p = 2 and
/// delta = 1, where the full norms reject the parameter.
double lp_mass_excluded(double r, double p, double exclusion_halfwidth,
                        const QuadratureSpec& spec);
double dz_mass_excluded(double r, double delta, double exclusion_halfwidth,
                        const QuadratureSpec& spec);

/// Evaluates the chosen norm at every r sample (in parallel), fits the
/// exponent by least squares on logs and records the deviation from an exact
/// power law. Requires at least 3 distinct positive samples.
NormReport scaling_report(NormKind kind, double parameter, std::span<const double> r_samples,
                          const QuadratureSpec& spec);

} // namespace axikernel
