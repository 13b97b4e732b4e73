#include <axikernel/fields.hpp>

#include <algorithm>
#include <cmath>

#include <axikernel/errors.hpp>
#include <axikernel/kernel.hpp>
#include <axikernel/parallel.hpp>

namespace axikernel {

namespace {

void check_axis(const std::vector<double>& axis, const char* what, bool radial) {
    if (axis.empty()) throw data_error(std::string(what) + ": empty axis");
    for (std::size_t i = 0; i < axis.size(); ++i) {
        if (!std::isfinite(axis[i]))
            throw data_error(std::string(what) + ": non-finite axis node");
        if (i > 0 && !(axis[i] > axis[i - 1]))
            throw data_error(std::string(what) + ": axis must be strictly increasing");
    }
    if (radial && axis.front() < 0.0)
        throw data_error(std::string(what) + ": r axis must be nonnegative");
}

void check_values(const std::vector<double>& v, std::size_t expected, const char* what) {
    if (v.size() != expected)
        throw data_error(std::string(what) + ": value count does not match the grid");
    for (double x : v)
        if (!std::isfinite(x)) throw data_error(std::string(what) + ": non-finite sample");
}

bool vanishes_on_axis(FieldQuantity q) {
    return q == FieldQuantity::omega_theta || q == FieldQuantity::L_theta ||
           q == FieldQuantity::u_theta;
}

} // namespace

const char* to_string(FieldQuantity q) {
    switch (q) {
        case FieldQuantity::omega_theta: return "omega_theta";
        case FieldQuantity::L_theta: return "L_theta";
        case FieldQuantity::u_theta: return "u_theta";
        case FieldQuantity::generic: return "generic";
    }
    return "generic";
}

FieldQuantity field_quantity_from_string(const std::string& s) {
    if (s == "omega_theta") return FieldQuantity::omega_theta;
    if (s == "L_theta") return FieldQuantity::L_theta;
    if (s == "u_theta") return FieldQuantity::u_theta;
    if (s == "generic") return FieldQuantity::generic;
    throw data_error("unknown field quantity '" + s + "'");
}

void MeridianScalarField::validate() const {
    check_axis(r_axis, "MeridianScalarField r_axis", true);
    check_axis(z_axis, "MeridianScalarField z_axis", false);
    check_values(values, r_axis.size() * z_axis.size(), "MeridianScalarField");
    if (r_axis.front() == 0.0 && vanishes_on_axis(quantity)) {
        for (std::size_t j = 0; j < nz(); ++j)
            if (at(0, j) != 0.0)
                throw data_error(std::string("MeridianScalarField: ") + to_string(quantity) +
                                 " must vanish on the r = 0 grid line");
    }
}

void MeridianVelocityField::validate() const {
    check_axis(r_axis, "MeridianVelocityField r_axis", true);
    check_axis(z_axis, "MeridianVelocityField z_axis", false);
    check_values(u_r, r_axis.size() * z_axis.size(), "MeridianVelocityField u_r");
    check_values(u_z, r_axis.size() * z_axis.size(), "MeridianVelocityField u_z");
    if (r_axis.front() == 0.0) {
        for (std::size_t j = 0; j < nz(); ++j)
            if (ur_at(0, j) != 0.0)
                throw data_error("MeridianVelocityField: u_r must vanish on the axis line");
    }
}

std::vector<double> RectilinearGrid::linspace(double lo, double hi, std::size_t n) {
    if (n < 1 || !(lo <= hi)) throw data_error("linspace: bad range");
    std::vector<double> out(n);
    if (n == 1) {
        out[0] = lo;
        return out;
    }
    const double step = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) out[i] = lo + step * static_cast<double>(i);
    out.back() = hi;
    return out;
}

void RectilinearGrid::validate() const {
    check_axis(r_axis, "RectilinearGrid r_axis", true);
    check_axis(z_axis, "RectilinearGrid z_axis", false);
}

MeridianScalarField sample_field(const RectilinearGrid& grid, FieldQuantity quantity,
                                 const std::function<double(double, double)>& fn,
                                 std::string provenance) {
    grid.validate();
    MeridianScalarField f;
    f.r_axis = grid.r_axis;
    f.z_axis = grid.z_axis;
    f.quantity = quantity;
    f.provenance = std::move(provenance);
    f.values.resize(f.nr() * f.nz());
    for (std::size_t i = 0; i < f.nr(); ++i)
        for (std::size_t j = 0; j < f.nz(); ++j) f.at(i, j) = fn(f.r_axis[i], f.z_axis[j]);
    f.validate();
    return f;
}

// ---------------------------------------------------------------------------
// Reconstruction
// ---------------------------------------------------------------------------

namespace {

// Gauss-Legendre rules on [0, 1].
constexpr double gl2_x[] = {0.21132486540518713, 0.78867513459481290};
constexpr double gl2_w[] = {0.5, 0.5};
constexpr double gl3_x[] = {0.11270166537925831, 0.5, 0.88729833462074169};
constexpr double gl3_w[] = {5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};
constexpr double gl4_x[] = {0.06943184420297371, 0.33000947820757187, 0.66999052179242813,
                            0.93056815579702629};
constexpr double gl4_w[] = {0.17392742256872693, 0.32607257743127307, 0.32607257743127307,
                            0.17392742256872693};

struct GLRule {
    const double* x;
    const double* w;
    int n;
};

constexpr GLRule gl2{gl2_x, gl2_w, 2};
constexpr GLRule gl3{gl3_x, gl3_w, 3};
constexpr GLRule gl4{gl4_x, gl4_w, 4};

using KernelFn = double (*)(double, double, double);

struct Cell {
    double ra, rb, za, zb;
    double v00, v01, v10, v11; // corner samples, (r index, z index) order
};

double bilinear(const Cell& c, double rho, double l) {
    const double u = (rho - c.ra) / (c.rb - c.ra);
    const double v = (l - c.za) / (c.zb - c.za);
    return (1.0 - u) * ((1.0 - v) * c.v00 + v * c.v01) +
           u * ((1.0 - v) * c.v10 + v * c.v11);
}

double rect_distance(double rt, double zt, double ra, double rb, double za, double zb) {
    const double dr = std::max({ra - rt, 0.0, rt - rb});
    const double dz = std::max({za - zt, 0.0, zt - zb});
    return std::sqrt(dr * dr + dz * dz);
}

double panel_gl(KernelFn kern, double rt, double zt, const Cell& c, double ra, double rb,
                double za, double zb, const GLRule& gl) {
    const double wr = rb - ra;
    const double wz = zb - za;
    double acc = 0.0;
    for (int i = 0; i < gl.n; ++i) {
        const double rho = ra + wr * gl.x[i];
        double row = 0.0;
        for (int j = 0; j < gl.n; ++j) {
            const double l = za + wz * gl.x[j];
            row += gl.w[j] * kern(rt, rho, zt - l) * bilinear(c, rho, l);
        }
        acc += gl.w[i] * row * rho;
    }
    return acc * wr * wz;
}

// Geometric panel refinement toward the target point. Panels within 0.7 of
// their own diagonal keep splitting until the size floor; the floor panel
// containing the target itself is dropped (its contribution scales like
// area * log(1/area)).
double panel_refined(KernelFn kern, double rt, double zt, const Cell& c, double ra, double rb,
                     double za, double zb, double floor_diag) {
    const double dr = rb - ra;
    const double dz = zb - za;
    const double diag = std::sqrt(dr * dr + dz * dz);
    const double dist = rect_distance(rt, zt, ra, rb, za, zb);
    if (dist >= 0.7 * diag) return panel_gl(kern, rt, zt, c, ra, rb, za, zb, gl3);
    if (diag <= floor_diag) {
        const bool contains = rt >= ra && rt <= rb && zt >= za && zt <= zb;
        return contains ? 0.0 : panel_gl(kern, rt, zt, c, ra, rb, za, zb, gl3);
    }
    const double rm = ra + 0.5 * dr;
    const double zm = za + 0.5 * dz;
    return panel_refined(kern, rt, zt, c, ra, rm, za, zm, floor_diag) +
           panel_refined(kern, rt, zt, c, ra, rm, zm, zb, floor_diag) +
           panel_refined(kern, rt, zt, c, rm, rb, za, zm, floor_diag) +
           panel_refined(kern, rt, zt, c, rm, rb, zm, zb, floor_diag);
}

MeridianScalarField convolve(const MeridianScalarField& omega, const RectilinearGrid& target,
                             const QuadratureSpec& spec, KernelFn kern, double sign,
                             FieldQuantity quantity, std::string provenance) {
    omega.validate();
    target.validate();
    spec.validate();
    if (omega.quantity != FieldQuantity::omega_theta)
        throw data_error("reconstruction: source quantity must be omega_theta");
    if (omega.nr() < 2 || omega.nz() < 2)
        throw data_error("reconstruction: source grid needs at least 2 nodes per axis");

    std::vector<Cell> cells;
    cells.reserve((omega.nr() - 1) * (omega.nz() - 1));
    for (std::size_t i = 0; i + 1 < omega.nr(); ++i) {
        for (std::size_t j = 0; j + 1 < omega.nz(); ++j) {
            Cell c;
            c.ra = omega.r_axis[i];
            c.rb = omega.r_axis[i + 1];
            c.za = omega.z_axis[j];
            c.zb = omega.z_axis[j + 1];
            c.v00 = omega.at(i, j);
            c.v01 = omega.at(i, j + 1);
            c.v10 = omega.at(i + 1, j);
            c.v11 = omega.at(i + 1, j + 1);
            if (c.v00 != 0.0 || c.v01 != 0.0 || c.v10 != 0.0 || c.v11 != 0.0)
                cells.push_back(c);
        }
    }

    MeridianScalarField out;
    out.r_axis = target.r_axis;
    out.z_axis = target.z_axis;
    out.quantity = quantity;
    out.provenance = std::move(provenance);
    out.values.assign(out.nr() * out.nz(), 0.0);

    // Panel refinement descends until panels shrink below this fraction of
    // their cell diagonal; the dropped core and the floor panels then sit far
    // below the requested tolerance (contribution ~ floor^2 log(1/floor)).
    const double floor_scale =
        std::clamp(spec.rel_tol, std::ldexp(1.0, -30), std::ldexp(1.0, -14));

    const std::size_t total = out.nr() * out.nz();
    parallel_for(total, [&](std::size_t idx) {
        const std::size_t i = idx / out.nz();
        const std::size_t j = idx % out.nz();
        const double rt = out.r_axis[i];
        const double zt = out.z_axis[j];
        if (rt == 0.0) return; // kernel vanishes identically on the axis
        double acc = 0.0;
        for (const Cell& c : cells) {
            const double dr = c.rb - c.ra;
            const double dz = c.zb - c.za;
            const double diag = std::sqrt(dr * dr + dz * dz);
            const double q = rect_distance(rt, zt, c.ra, c.rb, c.za, c.zb) / diag;
            if (q >= 10.0)
                acc += panel_gl(kern, rt, zt, c, c.ra, c.rb, c.za, c.zb, gl2);
            else if (q >= 3.0)
                acc += panel_gl(kern, rt, zt, c, c.ra, c.rb, c.za, c.zb, gl3);
            else if (q >= 0.6)
                acc += panel_gl(kern, rt, zt, c, c.ra, c.rb, c.za, c.zb, gl4);
            else
                acc += panel_refined(kern, rt, zt, c, c.ra, c.rb, c.za, c.zb,
                                     diag * floor_scale);
        }
        out.values[idx] = sign * acc;
    });

    out.validate();
    return out;
}

} // namespace

MeridianScalarField stream_from_vorticity(const MeridianScalarField& omega,
                                          const RectilinearGrid& target,
                                          const QuadratureSpec& spec) {
    return convolve(omega, target, spec, &green_function_closed, 1.0,
                    FieldQuantity::L_theta,
                    "stream function reconstructed from omega_theta by Green-function "
                    "convolution");
}

MeridianScalarField ur_from_vorticity(const MeridianScalarField& omega,
                                      const RectilinearGrid& target,
                                      const QuadratureSpec& spec) {
    return convolve(omega, target, spec, &green_function_dz_closed, -1.0,
                    FieldQuantity::generic,
                    "u_r reconstructed from omega_theta (z-derivative under the "
                    "convolution)");
}

// ---------------------------------------------------------------------------
// Finite differences
// ---------------------------------------------------------------------------

std::vector<double> fd_weights(double x0, std::span<const double> nodes, int order) {
    const int n = static_cast<int>(nodes.size());
    if (n < order + 1) throw std::invalid_argument("fd_weights: not enough nodes");
    // Fornberg's recurrence; table[k][j] holds the k-th derivative weight of
    // node j over the first i+1 nodes.
    std::vector<std::vector<double>> table(order + 1, std::vector<double>(n, 0.0));
    table[0][0] = 1.0;
    double c1 = 1.0;
    double c4 = nodes[0] - x0;
    for (int i = 1; i < n; ++i) {
        const int mn = std::min(i, order);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = nodes[i] - x0;
        for (int j = 0; j < i; ++j) {
            const double c3 = nodes[i] - nodes[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    table[k][i] = c1 * (k * table[k - 1][i - 1] - c5 * table[k][i - 1]) / c2;
                table[0][i] = -c1 * c5 * table[0][i - 1] / c2;
            }
            for (int k = mn; k >= 1; --k)
                table[k][j] = (c4 * table[k][j] - k * table[k - 1][j]) / c3;
            table[0][j] = c4 * table[0][j] / c3;
        }
        c1 = c2;
    }
    return table[order];
}

namespace {

// Derivative of a grid line through a 5-point moving stencil, one-sided near
// the ends.
void line_derivative(std::span<const double> axis, std::span<const double> f, int order,
                     std::span<double> out) {
    const std::size_t n = axis.size();
    constexpr std::size_t stencil = 5;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t lo =
            std::min(n - stencil, i >= 2 ? i - 2 : static_cast<std::size_t>(0));
        const auto w = fd_weights(axis[i], axis.subspan(lo, stencil), order);
        double acc = 0.0;
        for (std::size_t k = 0; k < stencil; ++k) acc += w[k] * f[lo + k];
        out[i] = acc;
    }
}

} // namespace

MeridianScalarField uz_from_stream(const MeridianScalarField& stream) {
    stream.validate();
    if (stream.quantity != FieldQuantity::L_theta)
        throw data_error("uz_from_stream: quantity must be L_theta");
    if (stream.nr() < 5)
        throw data_error("uz_from_stream: need at least 5 r nodes for the stencil");

    MeridianScalarField out;
    out.r_axis = stream.r_axis;
    out.z_axis = stream.z_axis;
    out.quantity = FieldQuantity::generic;
    out.provenance = "u_z = (1/r) d_r(r L_theta) by radial finite differences";
    out.values.assign(stream.nr() * stream.nz(), 0.0);

    const std::size_t nr = stream.nr();
    const std::size_t nz = stream.nz();
    std::vector<double> column(nr), deriv(nr);
    for (std::size_t j = 0; j < nz; ++j) {
        for (std::size_t i = 0; i < nr; ++i) column[i] = stream.at(i, j);
        line_derivative(stream.r_axis, column, 1, deriv);
        for (std::size_t i = 0; i < nr; ++i) {
            const double r = stream.r_axis[i];
            // (1/r) d_r(r L) = dL/dr + L/r; at the axis the limit is 2 dL/dr.
            out.at(i, j) = (r == 0.0) ? 2.0 * deriv[i] : deriv[i] + column[i] / r;
        }
    }
    return out;
}

ReconstructedFlow velocity_from_vorticity(const MeridianScalarField& omega,
                                          const RectilinearGrid& target,
                                          const QuadratureSpec& spec) {
    ReconstructedFlow flow;
    flow.stream = stream_from_vorticity(omega, target, spec);
    MeridianScalarField ur = ur_from_vorticity(omega, target, spec);
    MeridianScalarField uz = uz_from_stream(flow.stream);
    flow.velocity.r_axis = target.r_axis;
    flow.velocity.z_axis = target.z_axis;
    flow.velocity.u_r = std::move(ur.values);
    flow.velocity.u_z = std::move(uz.values);
    flow.velocity.provenance =
        "reconstructed from omega_theta: u_r by kernel convolution, u_z by radial "
        "differentiation of the stream function";
    flow.velocity.validate();
    return flow;
}

MeridianScalarField apply_vorticity_operator(const MeridianScalarField& stream) {
    stream.validate();
    if (stream.quantity != FieldQuantity::L_theta)
        throw data_error("apply_vorticity_operator: quantity must be L_theta");
    if (stream.nr() < 5 || stream.nz() < 5)
        throw data_error("apply_vorticity_operator: need at least 5 nodes per axis");

    const std::size_t nr = stream.nr();
    const std::size_t nz = stream.nz();
    MeridianScalarField out;
    out.r_axis = stream.r_axis;
    out.z_axis = stream.z_axis;
    out.quantity = FieldQuantity::generic;
    out.provenance = "-(Laplacian - 1/r^2) applied to L_theta by finite differences";
    out.values.assign(nr * nz, 0.0);

    // -(d_rr + (1/r) d_r - 1/r^2) part, one r column at a time.
    std::vector<double> column(nr), d1(nr), d2(nr);
    for (std::size_t j = 0; j < nz; ++j) {
        for (std::size_t i = 0; i < nr; ++i) column[i] = stream.at(i, j);
        line_derivative(stream.r_axis, column, 1, d1);
        line_derivative(stream.r_axis, column, 2, d2);
        for (std::size_t i = 0; i < nr; ++i) {
            const double r = stream.r_axis[i];
            if (r == 0.0) continue; // both sides vanish on the axis
            out.at(i, j) = -(d2[i] + d1[i] / r - column[i] / (r * r));
        }
    }
    // -d_zz part, one z row at a time.
    std::vector<double> row(nz), dzz(nz);
    for (std::size_t i = 0; i < nr; ++i) {
        const double r = stream.r_axis[i];
        if (r == 0.0) continue;
        for (std::size_t j = 0; j < nz; ++j) row[j] = stream.at(i, j);
        line_derivative(stream.z_axis, row, 2, dzz);
        for (std::size_t j = 0; j < nz; ++j) out.at(i, j) -= dzz[j];
    }
    return out;
}

CriterionReport criterion_functionals(const MeridianVelocityField& b,
                                      const MeridianScalarField& u_theta, double alpha,
                                      double beta) {
    b.validate();
    u_theta.validate();
    if (b.r_axis != u_theta.r_axis || b.z_axis != u_theta.z_axis)
        throw data_error("criterion_functionals: velocity and swirl grids must coincide");
    if (!(alpha > 0.0) || alpha > 1.0 || !std::isfinite(alpha))
        throw std::domain_error("criterion_functionals: alpha must lie in (0, 1]");
    if (!(beta >= 0.0) || !std::isfinite(beta))
        throw std::domain_error("criterion_functionals: beta must be nonnegative");

    CriterionReport rep;
    rep.alpha = alpha;
    rep.beta = beta;
    for (std::size_t i = 0; i < b.nr(); ++i) {
        const double r = b.r_axis[i];
        if (!(r > 0.0)) continue;
        const double log_factor = 1.0 + std::abs(std::log(r));
        const double wb = r * std::pow(log_factor, -beta);
        const double wu = r * std::pow(log_factor, alpha);
        for (std::size_t j = 0; j < b.nz(); ++j) {
            const double mag = std::hypot(b.ur_at(i, j), b.uz_at(i, j));
            rep.sup_b_functional = std::max(rep.sup_b_functional, wb * mag);
            rep.sup_utheta_functional =
                std::max(rep.sup_utheta_functional, wu * std::abs(u_theta.at(i, j)));
        }
    }
    return rep;
}

AssumptionReport corollary_assumption_check(const MeridianScalarField& omega,
                                            double exponent) {
    omega.validate();
    if (!std::isfinite(exponent) || exponent < 1.0 || exponent > 2.0)
        throw std::domain_error(
            "corollary_assumption_check: exponent must lie in [1, 2]");
    AssumptionReport rep;
    rep.exponent = exponent;
    for (std::size_t i = 0; i < omega.nr(); ++i) {
        const double r = omega.r_axis[i];
        if (!(r > 0.0)) continue;
        const double w = std::pow(r, exponent);
        for (std::size_t j = 0; j < omega.nz(); ++j)
            rep.sup_weighted = std::max(rep.sup_weighted, w * std::abs(omega.at(i, j)));
    }
    return rep;
}

} // namespace axikernel
