#include <axikernel/norms.hpp>

#include <cmath>

#include <axikernel/errors.hpp>
#include <axikernel/kernel.hpp>
#include <axikernel/parallel.hpp>

namespace axikernel {

namespace {

void require_radius(double r, const char* name) {
    if (!std::isfinite(r) || !(r > 0.0))
        throw std::domain_error(std::string(name) + ": r must be positive and finite");
}

// The kernel evaluations are the integrand; they run well below the 2D
// tolerance so quadrature noise does not limit the outer estimates.
QuadratureSpec kernel_spec(const QuadratureSpec& spec) {
    return spec.tightened(0.01);
}

QuadratureResult lp_mass(double r, double p, double exclusion, const QuadratureSpec& spec) {
    const QuadratureSpec gspec = kernel_spec(spec);
    auto f = [r, p, gspec](double rho, double l) {
        return std::pow(green_function(r, rho, l, gspec), p) / rho;
    };
    HalfPlaneOptions opts;
    opts.even_in_l = true; // Gamma is even in zeta
    opts.exclusion_halfwidth = exclusion;
    return integrate_2d_halfplane(f, spec, HalfPlanePoint{r, 0.0}, opts);
}

QuadratureResult dz_mass(double r, double delta, double exclusion,
                         const QuadratureSpec& spec) {
    const QuadratureSpec gspec = kernel_spec(spec);
    auto f = [r, delta, gspec](double rho, double l) {
        return std::abs(green_function_dz(r, rho, l, gspec)) * std::pow(rho, -delta);
    };
    HalfPlaneOptions opts;
    opts.even_in_l = true; // |dGamma/dz| is even in zeta
    opts.exclusion_halfwidth = exclusion;
    return integrate_2d_halfplane(f, spec, HalfPlanePoint{r, 0.0}, opts);
}

void require_converged(const QuadratureResult& q, const char* name) {
    if (!q.converged)
        throw accuracy_error(std::string(name) + ": quadrature did not converge",
                             q.error_estimate);
}

} // namespace

double norm_reference_exponent(NormKind kind, double parameter) {
    switch (kind) {
        case NormKind::lp_inverse_rho: return 1.0 / parameter - 1.0;
        case NormKind::l2_rho: return 0.5;
        case NormKind::dz_l1_rho_delta: return -parameter;
    }
    throw std::invalid_argument("norm_reference_exponent: unknown kind");
}

double norm_lp_inverse_rho(double r, double p, const QuadratureSpec& spec) {
    require_radius(r, "norm_lp_inverse_rho");
    if (!std::isfinite(p) || p < 1.0 || p >= 2.0)
        throw parameter_range_error("norm_lp_inverse_rho: p must lie in [1, 2)");
    QuadratureResult q = lp_mass(r, p, 0.0, spec);
    require_converged(q, "norm_lp_inverse_rho");
    return std::pow(q.value, 1.0 / p);
}

double norm_l2_rho(double r, const QuadratureSpec& spec) {
    require_radius(r, "norm_l2_rho");
    const QuadratureSpec gspec = kernel_spec(spec);
    auto f = [r, gspec](double rho, double l) {
        const double g = green_function(r, rho, l, gspec);
        return g * g * rho;
    };
    HalfPlaneOptions opts;
    opts.even_in_l = true;
    QuadratureResult q = integrate_2d_halfplane(f, spec, HalfPlanePoint{r, 0.0}, opts);
    require_converged(q, "norm_l2_rho");
    return std::sqrt(q.value);
}

double norm_dz_weighted(double r, double delta, const QuadratureSpec& spec) {
    require_radius(r, "norm_dz_weighted");
    if (!std::isfinite(delta) || delta < 0.0 || delta >= 1.0)
        throw parameter_range_error("norm_dz_weighted: delta must lie in [0, 1)");
    QuadratureResult q = dz_mass(r, delta, 0.0, spec);
    require_converged(q, "norm_dz_weighted");
    return q.value;
}

double lp_mass_excluded(double r, double p, double exclusion_halfwidth,
                        const QuadratureSpec& spec) {
    require_radius(r, "lp_mass_excluded");
    if (!std::isfinite(p) || p < 1.0 || p > 2.0)
        throw parameter_range_error("lp_mass_excluded: p must lie in [1, 2]");
    if (!(exclusion_halfwidth > 0.0))
        throw std::invalid_argument("lp_mass_excluded: exclusion halfwidth must be positive");
    QuadratureResult q = lp_mass(r, p, exclusion_halfwidth, spec);
    require_converged(q, "lp_mass_excluded");
    return q.value;
}

double dz_mass_excluded(double r, double delta, double exclusion_halfwidth,
                        const QuadratureSpec& spec) {
    require_radius(r, "dz_mass_excluded");
    if (!std::isfinite(delta) || delta < 0.0 || delta > 1.0)
        throw parameter_range_error("dz_mass_excluded: delta must lie in [0, 1]");
    if (!(exclusion_halfwidth > 0.0))
        throw std::invalid_argument("dz_mass_excluded: exclusion halfwidth must be positive");
    QuadratureResult q = dz_mass(r, delta, exclusion_halfwidth, spec);
    require_converged(q, "dz_mass_excluded");
    return q.value;
}

NormReport scaling_report(NormKind kind, double parameter, std::span<const double> r_samples,
                          const QuadratureSpec& spec) {
    if (r_samples.size() < 3)
        throw std::invalid_argument("scaling_report: need at least 3 r samples");
    for (std::size_t i = 0; i < r_samples.size(); ++i) {
        require_radius(r_samples[i], "scaling_report");
        for (std::size_t j = i + 1; j < r_samples.size(); ++j)
            if (r_samples[i] == r_samples[j])
                throw std::invalid_argument("scaling_report: r samples must be distinct");
    }

    NormReport report;
    report.kind = kind;
    report.parameter = parameter;
    report.r_samples.assign(r_samples.begin(), r_samples.end());
    report.values.resize(r_samples.size());
    report.reference_exponent = norm_reference_exponent(kind, parameter);

    parallel_for(r_samples.size(), [&](std::size_t i) {
        const double r = r_samples[i];
        switch (kind) {
            case NormKind::lp_inverse_rho:
                report.values[i] = norm_lp_inverse_rho(r, parameter, spec);
                break;
            case NormKind::l2_rho:
                report.values[i] = norm_l2_rho(r, spec);
                break;
            case NormKind::dz_l1_rho_delta:
                report.values[i] = norm_dz_weighted(r, parameter, spec);
                break;
        }
    });

    // Least squares of log value against log r.
    const std::size_t n = r_samples.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = std::log(report.r_samples[i]);
        const double y = std::log(report.values[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = n * sxx - sx * sx;
    report.fitted_exponent = (n * sxy - sx * sy) / denom;

    // Prefactor of the exact power law with the reference exponent, and the
    // worst relative departure from it.
    double log_c = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        log_c += std::log(report.values[i]) -
                 report.reference_exponent * std::log(report.r_samples[i]);
    report.constant = std::exp(log_c / static_cast<double>(n));
    report.max_ratio_deviation = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double model =
            report.constant * std::pow(report.r_samples[i], report.reference_exponent);
        report.max_ratio_deviation =
            std::max(report.max_ratio_deviation, std::abs(report.values[i] / model - 1.0));
    }
    return report;
}

} // namespace axikernel
