#pragma once

// Heat kernel G of d/dt - (Laplacian - 1/r^2) on axisymmetric data, its first
// derivatives, and the Green function Gamma = int_0^inf G dt evaluated three
// ways: by time quadrature, by the independent ring-potential quadrature, and
// in closed form through complete elliptic integrals.

#include <axikernel/bessel.hpp>
#include <axikernel/quadrature.hpp>

namespace axikernel {

struct KernelArgs {
    double t = 1.0;     // time, > 0
    double r = 0.0;     // target radius, >= 0
    double rho = 0.0;   // source radius, >= 0
    double zeta = 0.0;  // axial offset z - l

    void validate() const;
};

/// G(t; r, rho, zeta), evaluated in the cancellation-safe form
///   (4 sqrt(pi) t^{3/2})^{-1} exp(-((r-rho)^2 + zeta^2)/(4t)) [e^{-xi} I1(xi)],
/// xi = r rho / (2t). Finite and nonnegative for every valid argument.
double heat_kernel(const KernelArgs& args);

/// dG/dz = -(zeta / 2t) G; odd in zeta.
double heat_kernel_dz(const KernelArgs& args);

/// Analytic dG/dr (requires r > 0), via I1'(xi) = I0(xi) - I1(xi)/xi.
double heat_kernel_dr(const KernelArgs& args);

/// Gamma(r, rho, zeta) by adaptive time quadrature of G, split at the scale
/// t* = r rho / 2. Throws singularity_error on the diagonal.
QuadratureResult green_function_quad(double r, double rho, double zeta,
                                     const QuadratureSpec& spec);
double green_function(double r, double rho, double zeta, const QuadratureSpec& spec);

/// Independent oracle: the angular mode-1 projection of the Newtonian kernel,
///   Gamma = (1/4pi) int_0^{2pi} cos(phi) (d^2 + 4 r rho sin^2(phi/2))^{-1/2} dphi,
/// d^2 = (r-rho)^2 + zeta^2, evaluated by finite-interval quadrature.
QuadratureResult green_function_oracle_quad(double r, double rho, double zeta,
                                            const QuadratureSpec& spec);
double green_function_oracle(double r, double rho, double zeta, const QuadratureSpec& spec);

/// dGamma/dz by time quadrature of dG/dz; odd in zeta.
QuadratureResult green_function_dz_quad(double r, double rho, double zeta,
                                        const QuadratureSpec& spec);
double green_function_dz(double r, double rho, double zeta, const QuadratureSpec& spec);

/// Closed form of the ring integrand via complete elliptic integrals (AGM):
///   Gamma = [(2/m - 1) K(m) - (2/m) E(m)] / (pi s),  m = 4 r rho / s^2,
///   s^2 = (r+rho)^2 + zeta^2.
/// Used as the fast kernel inside field reconstruction; agrees with
/// green_function to quadrature tolerance (covered by tests).
double green_function_closed(double r, double rho, double zeta);

/// Closed form of dGamma/dz:
///   -(zeta / (pi s^3)) [(2-m) E(m) - 2(1-m) K(m)] / (m (1-m)).
double green_function_dz_closed(double r, double rho, double zeta);

/// Complete elliptic integrals K and E parameterized by the complementary
/// parameter m1 = 1 - m, accurate as m -> 1.
struct EllipticKE {
    double K = 0.0;
    double E = 0.0;
};
EllipticKE elliptic_ke_complementary(double m1);

/// Chapman-Kolmogorov composition check:
///   G(s+t; r, rho_final, zeta) == int int G(s; r, rho, zeta-eta) G(t; rho, rho_final, eta)
///                                 rho drho deta.
IdentityReport semigroup_check(double s, double t, double r, double rho_final, double zeta,
                               const QuadratureSpec& spec);

/// Steady-state mass law: int int G(t; r, rho, zeta) rho^2 drho dzeta == r,
/// because v == r is annihilated by Laplacian - 1/r^2.
IdentityReport first_moment_check(double t, double r, const QuadratureSpec& spec);

} // namespace axikernel
