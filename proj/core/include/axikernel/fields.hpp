#pragma once

// Gridded meridian fields, the stream-function / velocity reconstruction from
// the angular vorticity, and the criterion functionals of the drift and swirl
// envelopes.

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <axikernel/quadrature.hpp>

namespace axikernel {

enum class FieldQuantity { omega_theta, L_theta, u_theta, generic };

const char* to_string(FieldQuantity q);
FieldQuantity field_quantity_from_string(const std::string& s);

/// Axisymmetric scalar sampled on a rectilinear (r, z) grid, row-major with r
/// as the slow index. Quantities that vanish on the symmetry axis
/// (omega_theta, L_theta, u_theta) must be exactly zero on an r = 0 grid line.
struct MeridianScalarField {
    std::vector<double> r_axis;
    std::vector<double> z_axis;
    std::vector<double> values;
    FieldQuantity quantity = FieldQuantity::generic;
    std::string provenance;

    std::size_t nr() const { return r_axis.size(); }
    std::size_t nz() const { return z_axis.size(); }
    double& at(std::size_t i, std::size_t j) { return values[i * z_axis.size() + j]; }
    double at(std::size_t i, std::size_t j) const { return values[i * z_axis.size() + j]; }

    void validate() const;
};

/// Velocity pair (u_r, u_z) on a shared grid; u_r vanishes on the axis line.
struct MeridianVelocityField {
    std::vector<double> r_axis;
    std::vector<double> z_axis;
    std::vector<double> u_r;
    std::vector<double> u_z;
    std::string provenance;

    std::size_t nr() const { return r_axis.size(); }
    std::size_t nz() const { return z_axis.size(); }
    double ur_at(std::size_t i, std::size_t j) const { return u_r[i * z_axis.size() + j]; }
    double uz_at(std::size_t i, std::size_t j) const { return u_z[i * z_axis.size() + j]; }

    void validate() const;
};

struct RectilinearGrid {
    std::vector<double> r_axis;
    std::vector<double> z_axis;

    static std::vector<double> linspace(double lo, double hi, std::size_t n);
    void validate() const;
};

/// Samples fn(r, z) on the grid.
MeridianScalarField sample_field(const RectilinearGrid& grid, FieldQuantity quantity,
                                 const std::function<double(double, double)>& fn,
                                 std::string provenance = {});

struct CriterionReport {
    double alpha = 0.0;
    double beta = 0.0;
    double sup_b_functional = 0.0;      // sup r |b| (1+|ln r|)^{-beta}
    double sup_utheta_functional = 0.0; // sup r |u_theta| (1+|ln r|)^{alpha}
};

struct AssumptionReport {
    double exponent = 0.0;
    double sup_weighted = 0.0; // sup rho^exponent |omega_theta|
};

/// Stream function L on the target grid from the gridded angular vorticity:
/// the Green-function convolution with per-cell bilinear reconstruction of
/// the source (zero outside its grid) and near-diagonal panel refinement.
MeridianScalarField stream_from_vorticity(const MeridianScalarField& omega,
                                          const RectilinearGrid& target,
                                          const QuadratureSpec& spec);

/// Radial velocity u_r = -dL/dz, computed with the z-derivative taken under
/// the convolution integral.
MeridianScalarField ur_from_vorticity(const MeridianScalarField& omega,
                                      const RectilinearGrid& target,
                                      const QuadratureSpec& spec);

/// u_z = (1/r) d_r(r L) by five-point finite differences along the r axis
/// (one-sided near boundaries); at r = 0 the L'Hopital limit 2 dL/dr is used.
/// Requires at least 5 r nodes.
MeridianScalarField uz_from_stream(const MeridianScalarField& stream);

/// Full reconstruction: stream function plus both velocity components.
struct ReconstructedFlow {
    MeridianScalarField stream;
    MeridianVelocityField velocity;
};
ReconstructedFlow velocity_from_vorticity(const MeridianScalarField& omega,
                                          const RectilinearGrid& target,
                                          const QuadratureSpec& spec);

/// Applies -(Laplacian - 1/r^2) to a gridded stream function by five-point
/// finite differences along each axis. Boundary nodes use one-sided stencils;
/// the r = 0 line is reported as zero (both sides vanish there).
MeridianScalarField apply_vorticity_operator(const MeridianScalarField& stream);

/// Envelope functionals of the drift field b = (u_r, u_z) and the swirl:
/// sup r |b| (1+|ln r|)^{-beta} and sup r |u_theta| (1+|ln r|)^{alpha} over
/// grid points with r > 0. Grids must coincide.
CriterionReport criterion_functionals(const MeridianVelocityField& b,
                                      const MeridianScalarField& u_theta, double alpha,
                                      double beta);

/// sup rho^exponent |omega_theta| over grid points with r > 0; finiteness of
/// this functional is the hypothesis of the reconstruction bounds.
AssumptionReport corollary_assumption_check(const MeridianScalarField& omega,
                                            double exponent);

/// Finite-difference weights for the m-th derivative at x0 over the given
/// nodes (Fornberg's recurrence); exposed for tests.
std::vector<double> fd_weights(double x0, std::span<const double> nodes, int order);

} // namespace axikernel
