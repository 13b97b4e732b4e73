#include <axikernel/kernel.hpp>

#include <cmath>
#include <limits>

#include <axikernel/errors.hpp>

namespace axikernel {

namespace {

constexpr double inv_4sqrtpi = 0.1410473958869390717370198; // 1/(4 sqrt(pi))

void require_off_diagonal_pair(double r, double rho, double zeta, const char* name) {
    if (!std::isfinite(r) || !std::isfinite(rho) || !std::isfinite(zeta))
        throw std::domain_error(std::string(name) + ": coordinates must be finite");
    if (!(r > 0.0) || !(rho > 0.0))
        throw std::domain_error(std::string(name) + ": radii must be positive");
}

double off_diagonal_distance_sq(double r, double rho, double zeta, const char* name) {
    const double d2 = (r - rho) * (r - rho) + zeta * zeta;
    if (d2 == 0.0)
        throw singularity_error(std::string(name) +
                                ": requested on the diagonal (rho, l) == (r, z)");
    return d2;
}

} // namespace

void KernelArgs::validate() const {
    if (!std::isfinite(t) || !std::isfinite(r) || !std::isfinite(rho) || !std::isfinite(zeta))
        throw std::domain_error("KernelArgs: arguments must be finite");
    if (!(t > 0.0))
        throw std::domain_error("KernelArgs: t must be positive");
    if (r < 0.0 || rho < 0.0)
        throw std::domain_error("KernelArgs: radii must be nonnegative");
}

double heat_kernel(const KernelArgs& a) {
    a.validate();
    if (a.r == 0.0 || a.rho == 0.0) return 0.0;

    const double dr = a.r - a.rho;
    const double expo = -(dr * dr + a.zeta * a.zeta) / (4.0 * a.t);
    const double xi = a.r * a.rho / (2.0 * a.t);

    if (xi < 1e300 && expo > -700.0 && a.t > 1e-200)
        return inv_4sqrtpi / (a.t * std::sqrt(a.t)) * std::exp(expo) * bessel_i1_scaled(xi);

    // Log-space path for extreme arguments (deep quadrature probes).
    double log_scaled;
    if (xi < 1e300) {
        const double s = bessel_i1_scaled(xi);
        if (s == 0.0) return 0.0;
        log_scaled = std::log(s);
    } else {
        // leading term of e^{-xi} I1(xi) ~ (2 pi xi)^{-1/2}
        log_scaled = -0.5 * (std::log(2.0 * M_PI) + std::log(a.r) + std::log(a.rho) +
                             std::log(0.5 / a.t));
    }
    const double logv = expo + log_scaled - 1.5 * std::log(a.t) + std::log(inv_4sqrtpi);
    return (logv < -745.0) ? 0.0 : std::exp(logv);
}

double heat_kernel_dz(const KernelArgs& a) {
    a.validate();
    return -(a.zeta / (2.0 * a.t)) * heat_kernel(a);
}

double heat_kernel_dr(const KernelArgs& a) {
    a.validate();
    if (!(a.r > 0.0))
        throw std::domain_error("heat_kernel_dr: r must be positive");
    if (a.rho == 0.0) return 0.0;

    const double dr = a.r - a.rho;
    const double expo = -(dr * dr + a.zeta * a.zeta) / (4.0 * a.t);
    const double xi = a.r * a.rho / (2.0 * a.t);
    // d/dxi [e^{-xi} I1(xi)] = e^{-xi}(I0 - I1 - I1/xi); bounded by 1/2.
    const double dscaled =
        bessel_i0_scaled(xi) - bessel_i1_scaled(xi) - bessel_i1_scaled_over_x(xi);
    const double bracket =
        -(dr / (2.0 * a.t)) * bessel_i1_scaled(xi) + (a.rho / (2.0 * a.t)) * dscaled;

    if (expo > -700.0 && a.t > 1e-200)
        return inv_4sqrtpi / (a.t * std::sqrt(a.t)) * std::exp(expo) * bracket;
    if (bracket == 0.0) return 0.0;
    const double logv = expo + std::log(std::abs(bracket)) - 1.5 * std::log(a.t) +
                        std::log(inv_4sqrtpi);
    if (logv < -745.0) return 0.0;
    return std::copysign(std::exp(logv), bracket);
}

namespace {

// Gamma and dGamma/dz share the same decomposition of the time integral:
// a logarithmic substitution t = t* e^{-w} on (0, t*] (the integrand is a
// plateau-with-cliff there, so the cost is independent of how close the
// point sits to the diagonal) and the anchored rational map on [t*, inf).
// The tail anchor widens to d^2/4 when t* is smaller, since the integrand
// peaks near t ~ d^2/6 regardless of how small r*rho is.
template <class G>
QuadratureResult integrate_time(G&& g, double tstar, double d2, const QuadratureSpec& spec) {
    QuadratureResult near;
    const double t_floor = std::max(d2 / 3100.0, tstar * 1e-280);
    if (t_floor < tstar) {
        const double w_max = std::log(tstar / t_floor);
        near = integrate_finite(
            [&g, tstar](double w) {
                const double t = tstar * std::exp(-w);
                return g(t) * t;
            },
            0.0, w_max, spec);
    } else {
        near.converged = true; // exp(-d^2/4t) already underflows on (0, t*]
    }

    QuadratureResult far = integrate_semi_infinite(g, tstar, tstar + 0.25 * d2, spec);

    QuadratureResult out;
    out.value = near.value + far.value;
    out.error_estimate = near.error_estimate + far.error_estimate;
    out.evaluations = near.evaluations + far.evaluations;
    out.converged = near.converged && far.converged;
    return out;
}

} // namespace

QuadratureResult green_function_quad(double r, double rho, double zeta,
                                     const QuadratureSpec& spec) {
    require_off_diagonal_pair(r, rho, zeta, "green_function");
    const double d2 = off_diagonal_distance_sq(r, rho, zeta, "green_function");
    const double tstar = 0.5 * r * rho;
    auto g = [r, rho, zeta](double t) { return heat_kernel({t, r, rho, zeta}); };
    return integrate_time(g, tstar, d2, spec);
}

double green_function(double r, double rho, double zeta, const QuadratureSpec& spec) {
    return green_function_quad(r, rho, zeta, spec).value;
}

QuadratureResult green_function_dz_quad(double r, double rho, double zeta,
                                        const QuadratureSpec& spec) {
    require_off_diagonal_pair(r, rho, zeta, "green_function_dz");
    const double d2 = off_diagonal_distance_sq(r, rho, zeta, "green_function_dz");
    const double tstar = 0.5 * r * rho;
    auto g = [r, rho, zeta](double t) { return heat_kernel_dz({t, r, rho, zeta}); };
    return integrate_time(g, tstar, d2, spec);
}

double green_function_dz(double r, double rho, double zeta, const QuadratureSpec& spec) {
    return green_function_dz_quad(r, rho, zeta, spec).value;
}

QuadratureResult green_function_oracle_quad(double r, double rho, double zeta,
                                            const QuadratureSpec& spec) {
    require_off_diagonal_pair(r, rho, zeta, "green_function_oracle");
    const double d2 = off_diagonal_distance_sq(r, rho, zeta, "green_function_oracle");
    const double four_rr = 4.0 * r * rho;
    auto f = [d2, four_rr](double phi) {
        const double sh = std::sin(0.5 * phi);
        return std::cos(phi) / std::sqrt(d2 + four_rr * sh * sh);
    };
    QuadratureResult q = integrate_finite(f, 0.0, M_PI, spec);
    q.value /= 2.0 * M_PI;
    q.error_estimate /= 2.0 * M_PI;
    return q;
}

double green_function_oracle(double r, double rho, double zeta, const QuadratureSpec& spec) {
    return green_function_oracle_quad(r, rho, zeta, spec).value;
}

EllipticKE elliptic_ke_complementary(double m1) {
    if (!std::isfinite(m1) || !(m1 > 0.0) || m1 > 1.0)
        throw std::domain_error("elliptic_ke_complementary: need m1 in (0, 1]");
    // E = K (1 - sum 2^{n-1} c_n^2), c_0 = k, c_n = (a_{n-1} - b_{n-1})/2.
    double a = 1.0;
    double b = std::sqrt(m1);
    double c2_sum = 0.5 * (1.0 - m1); // n = 0 term, c_0^2 = m
    double pow2 = 0.5;
    for (int n = 1; n < 60; ++n) {
        const double c = 0.5 * (a - b);
        pow2 *= 2.0;
        c2_sum += pow2 * c * c;
        if (c < 1e-17 * a) break;
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    EllipticKE ke;
    ke.K = M_PI / (2.0 * a);
    ke.E = ke.K * (1.0 - c2_sum);
    return ke;
}

namespace {

struct RingGeometry {
    double s;   // sqrt((r+rho)^2 + zeta^2)
    double m;   // 4 r rho / s^2
    double m1;  // 1 - m = d^2 / s^2, cancellation-free
};

RingGeometry ring_geometry(double r, double rho, double zeta, const char* name) {
    const double d2 = off_diagonal_distance_sq(r, rho, zeta, name);
    RingGeometry g;
    const double s2 = (r + rho) * (r + rho) + zeta * zeta;
    g.s = std::sqrt(s2);
    g.m = 4.0 * r * rho / s2;
    g.m1 = d2 / s2;
    return g;
}

} // namespace

double green_function_closed(double r, double rho, double zeta) {
    if (!std::isfinite(r) || !std::isfinite(rho) || !std::isfinite(zeta) || r < 0.0 || rho < 0.0)
        throw std::domain_error("green_function_closed: invalid coordinates");
    if (r == 0.0 || rho == 0.0) return 0.0;
    const RingGeometry g = ring_geometry(r, rho, zeta, "green_function_closed");
    if (g.m < 5e-3) {
        // series in m; avoids the K-E cancellation of the closed form
        const double m = g.m;
        return m / (16.0 * g.s) *
               (1.0 + m * (0.75 + m * (75.0 / 128.0 + m * (245.0 / 512.0))));
    }
    const EllipticKE ke = elliptic_ke_complementary(g.m1);
    const double bracket = (2.0 / g.m - 1.0) * ke.K - (2.0 / g.m) * ke.E;
    return bracket / (M_PI * g.s);
}

double green_function_dz_closed(double r, double rho, double zeta) {
    if (!std::isfinite(r) || !std::isfinite(rho) || !std::isfinite(zeta) || r < 0.0 || rho < 0.0)
        throw std::domain_error("green_function_dz_closed: invalid coordinates");
    if (r == 0.0 || rho == 0.0) return 0.0;
    if (zeta == 0.0) {
        off_diagonal_distance_sq(r, rho, zeta, "green_function_dz_closed");
        return 0.0;
    }
    const RingGeometry g = ring_geometry(r, rho, zeta, "green_function_dz_closed");
    double bracket; // [(2-m)E - 2(1-m)K] / (m (1-m))
    if (g.m < 5e-3) {
        const double m = g.m;
        bracket = 3.0 * M_PI * m / 16.0 *
                  (1.0 + m * (0.5 + m * (15.0 / 64.0 + m * (35.0 / 256.0)))) / (1.0 - m);
    } else {
        const EllipticKE ke = elliptic_ke_complementary(g.m1);
        bracket = ((2.0 - g.m) * ke.E - 2.0 * g.m1 * ke.K) / (g.m * g.m1);
    }
    return -zeta / (M_PI * g.s * g.s * g.s) * bracket;
}

IdentityReport semigroup_check(double s, double t, double r, double rho_final, double zeta,
                               const QuadratureSpec& spec) {
    if (!(s > 0.0) || !(t > 0.0) || !std::isfinite(s) || !std::isfinite(t))
        throw std::domain_error("semigroup_check: times must be positive and finite");
    const double rhs = heat_kernel({s + t, r, rho_final, zeta});

    auto f = [s, t, r, rho_final, zeta](double rho, double eta) {
        return heat_kernel({s, r, rho, zeta - eta}) * heat_kernel({t, rho, rho_final, eta}) *
               rho;
    };
    HalfPlaneOptions opts;
    opts.rho_scale = r + rho_final + std::sqrt(s) + std::sqrt(t);
    opts.l_scale = opts.rho_scale + std::abs(zeta);
    QuadratureResult q = integrate_2d_halfplane(f, spec, std::nullopt, opts);
    if (!q.converged)
        throw accuracy_error("semigroup_check: composition quadrature did not converge",
                             q.error_estimate);

    IdentityReport rep;
    rep.name = "semigroup";
    rep.parameter = s + t;
    rep.lhs = q.value;
    rep.rhs = rhs;
    rep.relative_error =
        std::abs(q.value - rhs) / std::max(std::abs(rhs), std::numeric_limits<double>::min());
    rep.quadrature = q;
    return rep;
}

IdentityReport first_moment_check(double t, double r, const QuadratureSpec& spec) {
    if (!(t > 0.0) || !(r > 0.0) || !std::isfinite(t) || !std::isfinite(r))
        throw std::domain_error("first_moment_check: need positive finite t and r");

    auto f = [t, r](double rho, double zeta) {
        return heat_kernel({t, r, rho, zeta}) * rho * rho;
    };
    HalfPlaneOptions opts;
    opts.rho_scale = r + std::sqrt(t);
    opts.l_scale = opts.rho_scale;
    opts.even_in_l = true;
    QuadratureResult q = integrate_2d_halfplane(f, spec, std::nullopt, opts);
    if (!q.converged)
        throw accuracy_error("first_moment_check: quadrature did not converge",
                             q.error_estimate);

    IdentityReport rep;
    rep.name = "first-moment";
    rep.parameter = t;
    rep.lhs = q.value;
    rep.rhs = r;
    rep.relative_error = std::abs(q.value - r) / r;
    rep.quadrature = q;
    return rep;
}

} // namespace axikernel
