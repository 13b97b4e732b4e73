#pragma once

#include <stdexcept>
#include <string>

namespace axikernel {

/// Evaluation was requested exactly on the diagonal (rho, l) = (r, z), where
/// the Green function diverges.
class singularity_error : public std::domain_error {
public:
    explicit singularity_error(const std::string& what) : std::domain_error(what) {}
};

/// A parameter lies outside the admissible range of the estimate it belongs
/// to (e.g. p >= 2 for the 1/rho-weighted norm, delta >= 1 for the dz norm).
class parameter_range_error : public std::out_of_range {
public:
    explicit parameter_range_error(const std::string& what) : std::out_of_range(what) {}
};

/// Quadrature failed to reach the requested tolerance. Carries the error
/// estimate that was actually achieved.
class accuracy_error : public std::runtime_error {
public:
    accuracy_error(const std::string& what, double achieved_estimate)
        : std::runtime_error(what), achieved_(achieved_estimate) {}
    double achieved_estimate() const noexcept { return achieved_; }

private:
    double achieved_;
};

/// Malformed or inconsistent field data: CSV parse failures, mismatched grids,
/// non-finite samples, grids too coarse for the requested stencil.
class data_error : public std::runtime_error {
public:
    explicit data_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace axikernel
