#pragma once

// Adaptive numerical integration engines for finite, semi-infinite and
// endpoint-singular integrands. The 1D engine is a globally adaptive
// Gauss7/Kronrod15 scheme; the half-plane engine iterates it with dyadic
// pre-splitting around a caller-declared singular point.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

namespace axikernel {

struct QuadratureSpec {
    double rel_tol = 1e-9;
    double abs_tol = 1e-14;
    int max_subdivisions = 2000;
    /// Integrand-magnitude ratio at which semi-infinite tails are cut.
    double truncation_drop = 1e-16;

    void validate() const {
        if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
            throw std::invalid_argument("QuadratureSpec: tolerances must be positive");
        if (max_subdivisions < 1)
            throw std::invalid_argument("QuadratureSpec: max_subdivisions must be >= 1");
        if (!(truncation_drop > 0.0) || !(truncation_drop < rel_tol))
            throw std::invalid_argument(
                "QuadratureSpec: truncation_drop must lie in (0, rel_tol)");
    }

    QuadratureSpec tightened(double factor) const {
        QuadratureSpec s = *this;
        s.rel_tol = std::max(rel_tol * factor, 5e-15);
        s.abs_tol = std::max(abs_tol * factor, 1e-300);
        s.truncation_drop = std::min(truncation_drop, s.rel_tol * 0.5);
        return s;
    }
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = false;
};

/// A point (r, z) in the meridian half-plane, r >= 0.
struct HalfPlanePoint {
    double r = 0.0;
    double z = 0.0;

    void validate() const {
        if (!std::isfinite(r) || !std::isfinite(z) || r < 0.0)
            throw std::domain_error("HalfPlanePoint: need finite coordinates with r >= 0");
    }
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
// Abscissae are symmetric; entries with odd index are the Gauss nodes.
inline constexpr double gk15_x[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
inline constexpr double gk15_wk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
inline constexpr double gk15_wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, error;
};

template <class F>
Segment evaluate_segment(F&& f, double a, double b, long& evaluations) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    const double fc = f(c);
    double resk = gk15_wk[7] * fc;
    double resg = gk15_wg[3] * fc;
    double resabs = gk15_wk[7] * std::abs(fc);
    double fv[15];
    fv[14] = fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = h * gk15_x[j];
        const double f1 = f(c - dx);
        const double f2 = f(c + dx);
        fv[2 * j] = f1;
        fv[2 * j + 1] = f2;
        resk += gk15_wk[j] * (f1 + f2);
        resabs += gk15_wk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) resg += gk15_wg[j / 2] * (f1 + f2);
    }
    evaluations += 15;

    const double mean = 0.5 * resk;
    double resasc = gk15_wk[7] * std::abs(fc - mean);
    for (int j = 0; j < 7; ++j)
        resasc += gk15_wk[j] * (std::abs(fv[2 * j] - mean) + std::abs(fv[2 * j + 1] - mean));

    const double value = resk * h;
    resabs *= std::abs(h);
    resasc *= std::abs(h);
    double err = std::abs((resk - resg) * h);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps = std::numeric_limits<double>::epsilon();
    const double uflow = std::numeric_limits<double>::min();
    if (resabs > uflow / (50.0 * eps)) err = std::max(err, 50.0 * eps * resabs);
    return {a, b, value, err};
}

} // namespace detail

/// Globally adaptive quadrature over [a, b]. Endpoint singularities are fine
/// as long as they are integrable: the Kronrod nodes never touch endpoints
/// and the worst-error-first subdivision zooms into them geometrically.
/// On exhaustion of the subdivision budget the best-effort result is
/// returned with converged = false.
template <class F>
QuadratureResult integrate_finite(F&& f, double a, double b, const QuadratureSpec& spec) {
    spec.validate();
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
        throw std::invalid_argument("integrate_finite: need finite a < b");

    long evaluations = 0;
    std::vector<detail::Segment> segs;
    segs.reserve(64);
    segs.push_back(detail::evaluate_segment(f, a, b, evaluations));

    double total_value = segs[0].value;
    double total_error = segs[0].error;
    int splits = 0;
    while (splits < spec.max_subdivisions) {
        const double threshold =
            std::max(spec.rel_tol * std::abs(total_value), spec.abs_tol);
        if (total_error <= threshold) break;

        std::size_t worst = 0;
        for (std::size_t i = 1; i < segs.size(); ++i)
            if (segs[i].error > segs[worst].error) worst = i;

        const detail::Segment seg = segs[worst];
        const double mid = seg.a + 0.5 * (seg.b - seg.a);
        if (!(mid > seg.a) || !(mid < seg.b)) break;  // interval exhausted at double precision

        detail::Segment left = detail::evaluate_segment(f, seg.a, mid, evaluations);
        detail::Segment right = detail::evaluate_segment(f, mid, seg.b, evaluations);
        total_value += left.value + right.value - seg.value;
        total_error += left.error + right.error - seg.error;
        segs[worst] = left;
        segs.push_back(right);
        ++splits;
    }

    // Deterministic final summation in left-to-right order.
    std::sort(segs.begin(), segs.end(),
              [](const detail::Segment& x, const detail::Segment& y) { return x.a < y.a; });
    QuadratureResult res;
    res.evaluations = evaluations;
    for (const auto& s : segs) {
        res.value += s.value;
        res.error_estimate += s.error;
    }
    res.converged =
        std::isfinite(res.value) &&
        res.error_estimate <= std::max(spec.rel_tol * std::abs(res.value), spec.abs_tol);
    return res;
}

/// Quadrature over [a, inf) through the anchored rational map
/// t = a + scale * u/(1-u). The anchor concentrates nodes around t ~ a + scale
/// while algebraic and exponential tails are compressed into u -> 1; the tail
/// is cut where probes of the transformed integrand have dropped below
/// truncation_drop of the running maximum.
template <class F>
QuadratureResult integrate_semi_infinite(F&& f, double a, double scale,
                                         const QuadratureSpec& spec) {
    spec.validate();
    if (!std::isfinite(a) || !std::isfinite(scale) || !(scale > 0.0))
        throw std::invalid_argument("integrate_semi_infinite: need finite a and scale > 0");

    auto g = [&f, a, scale](double u) {
        const double omu = 1.0 - u;
        const double t = a + scale * u / omu;
        return f(t) * scale / (omu * omu);
    };

    // Probe ladder capped at 2^-50: beyond that 1-u is no longer resolved and
    // the cut tail of any integrable transformed integrand is negligible.
    long probe_evals = 0;
    double running_max = 0.0;
    double u_max = -1.0;
    for (int j = 1; j <= 50; ++j) {
        const double u = 1.0 - std::ldexp(1.0, -j);
        const double magnitude = std::abs(g(u));
        ++probe_evals;
        running_max = std::max(running_max, magnitude);
        if (j >= 8 && magnitude <= spec.truncation_drop * running_max) {
            u_max = u;
            break;
        }
    }
    if (u_max < 0.0) u_max = 1.0 - std::ldexp(1.0, -50);

    QuadratureResult res = integrate_finite(g, 0.0, u_max, spec);
    res.evaluations += probe_evals;
    return res;
}

struct HalfPlaneOptions {
    /// When positive (with a singular point declared), the closed square
    /// |rho - r0| < h, |l - z0| < h is omitted from the domain.
    double exclusion_halfwidth = 0.0;
    /// Declares f(rho, z0 + d) == f(rho, z0 - d); the mirror half is skipped.
    bool even_in_l = false;
    /// Decay scales of the integrand when no singular point is declared.
    double rho_scale = 1.0;
    double l_scale = 1.0;
};

/// Iterated adaptive quadrature of f over (0, inf) x (-inf, inf).
/// When a singular point is declared the rho-axis is pre-split by dyadic
/// annuli around it before adaptation and the inner l-integrals are split at
/// the singular line.
QuadratureResult integrate_2d_halfplane(const std::function<double(double, double)>& f,
                                        const QuadratureSpec& spec,
                                        std::optional<HalfPlanePoint> singular_at = std::nullopt,
                                        const HalfPlaneOptions& options = {});

} // namespace axikernel
