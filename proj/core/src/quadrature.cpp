#include <axikernel/quadrature.hpp>

#include <cmath>

namespace axikernel {

namespace {

struct Interval {
    double a, b;
};

// Outer rho-axis decomposition: [0, r0/2], dyadic annuli closing in on r0
// from both sides, and the far piece handled by the anchored tail map.
// With an exclusion halfwidth h the annuli stop at distance h and a bridging
// strip [r0-h, r0+h] is kept (its inner integrals skip |l - z0| < h).
std::vector<Interval> outer_pieces(double r0, double h, int levels) {
    std::vector<Interval> pieces;
    pieces.push_back({0.0, 0.5 * r0});

    std::vector<double> down; // distances from r0, decreasing
    double d = 0.5 * r0;
    down.push_back(d);
    for (int j = 1; j <= levels; ++j) {
        d *= 0.5;
        if (d <= h) break;
        down.push_back(d);
    }
    for (std::size_t i = 0; i + 1 < down.size(); ++i)
        pieces.push_back({r0 - down[i], r0 - down[i + 1]});
    pieces.push_back({r0 - down.back(), r0 - h}); // h == 0: singular right endpoint

    if (h > 0.0) pieces.push_back({r0 - h, r0 + h});

    pieces.push_back({r0 + h, r0 + down.back()});
    for (std::size_t i = down.size() - 1; i > 0; --i)
        pieces.push_back({r0 + down[i], r0 + down[i - 1]});
    return pieces;
}

} // namespace

QuadratureResult integrate_2d_halfplane(const std::function<double(double, double)>& f,
                                        const QuadratureSpec& spec,
                                        std::optional<HalfPlanePoint> singular_at,
                                        const HalfPlaneOptions& options) {
    spec.validate();
    const double h = options.exclusion_halfwidth;
    if (h < 0.0 || !std::isfinite(h))
        throw std::invalid_argument("integrate_2d_halfplane: bad exclusion halfwidth");
    if (singular_at) {
        singular_at->validate();
        if (!(singular_at->r > 0.0))
            throw std::invalid_argument(
                "integrate_2d_halfplane: declared singular point must have r > 0");
        if (h >= 0.5 * singular_at->r)
            throw std::invalid_argument(
                "integrate_2d_halfplane: exclusion halfwidth must be < r0/2");
    } else if (h > 0.0) {
        throw std::invalid_argument(
            "integrate_2d_halfplane: exclusion requires a singular point");
    }

    // Pieces run tighter than the aggregate request so that the summed error
    // still satisfies the converged-result contract; inner integrals run
    // tighter still so their noise stays below the outer error estimator.
    const QuadratureSpec outer_spec = spec.tightened(0.25);
    const QuadratureSpec inner_spec = spec.tightened(0.05);
    long inner_evaluations = 0;
    bool inner_converged = true;

    const double z0 = singular_at ? singular_at->z : 0.0;
    const double r0 = singular_at ? singular_at->r : 0.0;

    auto inner = [&](double rho) -> double {
        double gap = 0.0;
        if (singular_at && h > 0.0 && std::abs(rho - r0) < h) gap = h;
        const double lscale = singular_at ? (rho + r0 + gap) : options.l_scale;

        double value = 0.0;
        const int sides = options.even_in_l ? 1 : 2;
        for (int side = 0; side < sides; ++side) {
            const double sign = (side == 0) ? 1.0 : -1.0;
            auto g = [&f, rho, z0, sign](double u) { return f(rho, z0 + sign * u); };
            QuadratureResult p1 = integrate_finite(g, gap, gap + lscale, inner_spec);
            QuadratureResult p2 = integrate_semi_infinite(g, gap + lscale, lscale, inner_spec);
            value += p1.value + p2.value;
            inner_evaluations += p1.evaluations + p2.evaluations;
            inner_converged = inner_converged && p1.converged && p2.converged;
        }
        return options.even_in_l ? 2.0 * value : value;
    };

    std::vector<Interval> pieces;
    double tail_start, tail_scale;
    if (singular_at) {
        pieces = outer_pieces(r0, h, 12);
        tail_start = pieces.back().b;
        tail_scale = r0;
    } else {
        pieces.push_back({0.0, options.rho_scale});
        tail_start = options.rho_scale;
        tail_scale = options.rho_scale;
    }

    double value = 0.0;
    double running_abs = 0.0;
    double outer_error = 0.0;
    bool outer_converged = true;
    // Small pieces inherit an absolute floor from the mass seen so far, so
    // the dyadic annuli do not chase precision far below the total.
    auto piece_spec = [&]() {
        QuadratureSpec s = outer_spec;
        s.abs_tol = std::max(s.abs_tol, 0.005 * spec.rel_tol * running_abs);
        return s;
    };
    for (const Interval& piece : pieces) {
        if (!(piece.a < piece.b)) continue;
        QuadratureResult res = integrate_finite(inner, piece.a, piece.b, piece_spec());
        value += res.value;
        running_abs += std::abs(res.value);
        outer_error += res.error_estimate;
        outer_converged = outer_converged && res.converged;
    }
    {
        QuadratureResult tail = integrate_semi_infinite(inner, tail_start, tail_scale, piece_spec());
        value += tail.value;
        outer_error += tail.error_estimate;
        outer_converged = outer_converged && tail.converged;
    }

    QuadratureResult out;
    out.value = value;
    // The inner integrals contribute up to their relative tolerance on top of
    // the outer estimates.
    out.error_estimate = outer_error + inner_spec.rel_tol * std::abs(value);
    out.evaluations = inner_evaluations;
    out.converged = outer_converged && inner_converged && std::isfinite(value) &&
                    out.error_estimate <= std::max(spec.rel_tol * std::abs(value), spec.abs_tol);
    return out;
}

} // namespace axikernel
