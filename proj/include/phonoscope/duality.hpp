#pragma once

#include <vector>

#include "phonoscope/grid.hpp"

namespace phonoscope {

/// Rotation angle of the dual transformation, kept in [0, 2*pi].
class DualAngle {
public:
    explicit DualAngle(double radians);
    [[nodiscard]] double radians() const { return theta_; }

private:
    double theta_;
};

/// Quadratic invariants I1 = |U1|^2 - |U2|^2 and I2 = U1 . U2.
struct InvariantPair {
    double i1 = 0.0;
    double i2 = 0.0;
};

/// Pointwise invariant maps plus their trapezoid-integrated totals.
struct InvariantResult {
    GridSpec grid;
    std::vector<double> i1;
    std::vector<double> i2;
    InvariantPair integrated;
};

/// Pointwise SO(2) mix of the field pair:
///   U1' =  cos(theta) U1 + sin(theta) U2
///   U2' = -sin(theta) U1 + cos(theta) U2
VectorFieldPair dual_rotate(const VectorFieldPair& fields, DualAngle theta);

InvariantResult invariants(const VectorFieldPair& fields);

/// The rotated invariants evaluated on the *unrotated* fields:
///   I1' = (|U1|^2-|U2|^2) cos(2 theta) + 2 (U1.U2) sin(2 theta)
///   I2' = 2 (U1.U2) cos(2 theta) - (|U1|^2-|U2|^2) sin(2 theta)
/// Note the factor 2 relative to I2 of `invariants`.
InvariantResult rotated_invariants(const VectorFieldPair& fields, DualAngle theta);

}  // namespace phonoscope
