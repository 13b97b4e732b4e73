#pragma once

// Modified Bessel functions I0 and I1 of nonnegative real argument, in plain
// and exponentially scaled form, plus quadrature checks of the closed-form
// identities they satisfy.

#include <string>

#include <axikernel/quadrature.hpp>

namespace axikernel {

enum class BesselRegime { series, asymptotic };

/// Boundary between the ascending-series and large-argument regimes.
/// Below it the series converges to full double precision with ~40 terms at
/// most; above it the truncated asymptotic expansion of the scaled function
/// is accurate to ~2.5e-15. The raw asymptotic expansion bottoms out near
/// e^{-2x}, so a smaller switch point would not meet the 1e-12 target.
inline constexpr double bessel_regime_boundary = 16.0;

struct BesselEval {
    double argument = 0.0;
    double value = 0.0;         // I_nu(x); +inf once e^x overflows
    double scaled_value = 0.0;  // e^{-x} I_nu(x); finite for every finite x
    BesselRegime regime = BesselRegime::series;
};

double bessel_i0(double x);
double bessel_i1(double x);
double bessel_i0_scaled(double x);
double bessel_i1_scaled(double x);
/// e^{-x} I1(x) / x, stable down to x = 0 where the limit is 1/2.
double bessel_i1_scaled_over_x(double x);

BesselEval bessel_i0_eval(double x);
BesselEval bessel_i1_eval(double x);

/// Outcome of checking one closed-form identity by quadrature.
struct IdentityReport {
    std::string name;
    double parameter = 0.0;
    double lhs = 0.0;  // quadrature side
    double rhs = 0.0;  // closed form
    double relative_error = 0.0;
    QuadratureResult quadrature;  // bookkeeping for the lhs
};

/// int_0^inf e^{-s^2} I1(a s) ds  ==  (e^{a^2/4} - 1)/a
IdentityReport verify_identity_id1(double a, const QuadratureSpec& spec);
/// int_0^inf e^{-s^2} I1^2(a s) s ds  ==  (1/2) e^{a^2/2} I1(a^2/2)
IdentityReport verify_identity_id2(double a, const QuadratureSpec& spec);
/// int_{-1}^{1} e^{A s} sqrt(1 - s^2) ds  ==  pi I1(A)/A
IdentityReport verify_lemma_sphere(double big_a, const QuadratureSpec& spec);

} // namespace axikernel
