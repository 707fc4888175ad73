#pragma once

#include <cstdint>
#include <vector>

#include "phonoscope/grid.hpp"

namespace phonoscope {

/// Numerical curl of a sampled field. Interior points use second-order
/// central differences; boundary points use one-sided second-order stencils
/// and are flagged in `boundary`.
struct CurlResult {
    VectorField field;
    std::vector<std::uint8_t> boundary;  // 1 where any one-sided stencil was used
};

/// RMS violation of the coupled curl equations
///   r1 = RMS |curl U1 + dU2/dt|,   r2 = RMS |curl U2 - dU1/dt|
/// taken over interior points only (one-sided stencils excluded).
struct ResidualReport {
    double r1_norm = 0.0;
    double r2_norm = 0.0;
    double h = 0.0;  // grid spacing the norms were computed at
};

CurlResult curl(const VectorField& field);

ResidualReport maxwell_form_residual(const VectorFieldPair& fields,
                                     const VectorField& du1_dt,
                                     const VectorField& du2_dt);

/// Symmetric two-point finite difference in time between two snapshots at
/// t - dt and t + dt. Fallback for callers without analytic derivatives.
struct TimeDerivativePair {
    VectorField du1_dt;
    VectorField du2_dt;
};

TimeDerivativePair time_derivative(const VectorFieldPair& at_t_minus,
                                   const VectorFieldPair& at_t_plus,
                                   double dt);

}  // namespace phonoscope
