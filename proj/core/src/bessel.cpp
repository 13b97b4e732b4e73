#include <axikernel/bessel.hpp>

#include <cmath>
#include <limits>

#include <axikernel/errors.hpp>

namespace axikernel {

namespace {

void require_argument(double x) {
    if (!std::isfinite(x))
        throw std::domain_error("bessel: argument must be finite");
    if (x < 0.0)
        throw std::domain_error("bessel: argument must be nonnegative");
}

// Ascending series for I_nu, nu in {0, 1}. All terms are positive, so there
// is no cancellation; truncated once the next term drops below 1e-18 of the
// partial sum.
double series_sum(int nu, double x) {
    const double q = 0.25 * x * x;
    double term = (nu == 0) ? 1.0 : 0.5 * x;
    double sum = term;
    for (int m = 1; m < 400; ++m) {
        term *= q / (static_cast<double>(m) * (m + nu));
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return sum;
}

// Truncated large-argument expansion of e^{-x} I_nu(x) for
// x > bessel_regime_boundary. Terms are accumulated while they decrease;
// at x = 16 the smallest term is ~2e-15 of the sum.
double scaled_asymptotic(int nu, double x) {
    const double mu = 4.0 * nu * nu;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 60; ++k) {
        const double odd = 2.0 * k - 1.0;
        const double next = term * (-(mu - odd * odd) / (8.0 * x * k));
        if (std::abs(next) >= std::abs(term) && k > 1) break;
        term = next;
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum / std::sqrt(2.0 * M_PI * x);
}

} // namespace

double bessel_i0_scaled(double x) {
    require_argument(x);
    if (x <= bessel_regime_boundary) return std::exp(-x) * series_sum(0, x);
    return scaled_asymptotic(0, x);
}

double bessel_i1_scaled(double x) {
    require_argument(x);
    if (x == 0.0) return 0.0;
    if (x <= bessel_regime_boundary) return std::exp(-x) * series_sum(1, x);
    return scaled_asymptotic(1, x);
}

double bessel_i0(double x) {
    require_argument(x);
    if (x <= bessel_regime_boundary) return series_sum(0, x);
    return std::exp(x) * scaled_asymptotic(0, x);
}

double bessel_i1(double x) {
    require_argument(x);
    if (x <= bessel_regime_boundary) return series_sum(1, x);
    return std::exp(x) * scaled_asymptotic(1, x);
}

double bessel_i1_scaled_over_x(double x) {
    require_argument(x);
    if (x < 1e-4) {
        const double q = 0.25 * x * x;
        // I1(x)/x = 1/2 (1 + q/2 + q^2/12 + ...), then scale by e^{-x}.
        return std::exp(-x) * 0.5 * (1.0 + q / 2.0 + q * q / 12.0);
    }
    return bessel_i1_scaled(x) / x;
}

BesselEval bessel_i0_eval(double x) {
    BesselEval e;
    e.argument = x;
    e.scaled_value = bessel_i0_scaled(x);
    e.regime = (x <= bessel_regime_boundary) ? BesselRegime::series : BesselRegime::asymptotic;
    e.value = (e.regime == BesselRegime::series) ? series_sum(0, x)
                                                 : std::exp(x) * e.scaled_value;
    return e;
}

BesselEval bessel_i1_eval(double x) {
    BesselEval e;
    e.argument = x;
    e.scaled_value = bessel_i1_scaled(x);
    e.regime = (x <= bessel_regime_boundary) ? BesselRegime::series : BesselRegime::asymptotic;
    e.value = (e.regime == BesselRegime::series) ? series_sum(1, x)
                                                 : std::exp(x) * e.scaled_value;
    return e;
}

namespace {

IdentityReport make_report(const char* name, double parameter, QuadratureResult lhs,
                           double rhs) {
    if (!lhs.converged)
        throw accuracy_error(std::string(name) + ": quadrature did not converge",
                             lhs.error_estimate);
    IdentityReport rep;
    rep.name = name;
    rep.parameter = parameter;
    rep.lhs = lhs.value;
    rep.rhs = rhs;
    const double denom = std::max(std::abs(rhs), std::numeric_limits<double>::min());
    rep.relative_error = std::abs(lhs.value - rhs) / denom;
    rep.quadrature = lhs;
    return rep;
}

void require_positive(double a, const char* name) {
    if (!std::isfinite(a) || !(a > 0.0))
        throw std::domain_error(std::string(name) + ": parameter must be positive and finite");
}

} // namespace

IdentityReport verify_identity_id1(double a, const QuadratureSpec& spec) {
    require_positive(a, "verify_identity_id1");
    // e^{-s^2} I1(a s) written through the scaled Bessel function so the
    // exponent a*s - s^2 never exceeds a^2/4, matching the closed form.
    auto f = [a](double s) { return bessel_i1_scaled(a * s) * std::exp(a * s - s * s); };
    QuadratureResult lhs = integrate_semi_infinite(f, 0.0, std::max(1.0, 0.5 * a), spec);
    const double rhs = std::expm1(0.25 * a * a) / a;
    return make_report("ID1", a, lhs, rhs);
}

IdentityReport verify_identity_id2(double a, const QuadratureSpec& spec) {
    require_positive(a, "verify_identity_id2");
    auto f = [a](double s) {
        const double scaled = bessel_i1_scaled(a * s);
        return scaled * scaled * std::exp(2.0 * a * s - s * s) * s;
    };
    QuadratureResult lhs = integrate_semi_infinite(f, 0.0, std::max(1.0, a), spec);
    const double half_a2 = 0.5 * a * a;
    const double rhs = 0.5 * bessel_i1_scaled(half_a2) * std::exp(a * a);
    return make_report("ID2", a, lhs, rhs);
}

IdentityReport verify_lemma_sphere(double big_a, const QuadratureSpec& spec) {
    require_positive(big_a, "verify_lemma_sphere");
    auto f = [big_a](double s) { return std::exp(big_a * s) * std::sqrt(1.0 - s * s); };
    QuadratureResult lhs = integrate_finite(f, -1.0, 1.0, spec);
    // pi I1(A)/A, written so it stays accurate as A -> 0 (limit pi/2). The
    // factor pi follows from I1(A) = (1/pi) int_0^pi e^{A cos h} cos h dh.
    const double rhs = M_PI * std::exp(big_a) * bessel_i1_scaled_over_x(big_a);
    return make_report("Lemma3.1", big_a, lhs, rhs);
}

} // namespace axikernel
