#include "phonoscope/duality.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace phonoscope {

DualAngle::DualAngle(double radians) : theta_(radians) {
    if (!std::isfinite(theta_)) throw std::invalid_argument("DualAngle: non-finite angle");
    constexpr double two_pi = 2.0 * std::numbers::pi;
    theta_ = std::fmod(theta_, two_pi);
    if (theta_ < 0.0) theta_ += two_pi;
}

VectorFieldPair dual_rotate(const VectorFieldPair& fields, DualAngle theta) {
    if (!fields.finite()) throw std::invalid_argument("dual_rotate: non-finite field samples");
    const double c = std::cos(theta.radians());
    const double s = std::sin(theta.radians());
    VectorFieldPair out(fields.grid, fields.time);
    for (std::size_t i = 0; i < fields.u1.size(); ++i) {
        out.u1[i] = c * fields.u1[i] + s * fields.u2[i];
        out.u2[i] = -s * fields.u1[i] + c * fields.u2[i];
    }
    return out;
}

namespace {

InvariantResult map_and_integrate(const VectorFieldPair& fields,
                                  double (*f1)(const Vec3&, const Vec3&, double, double),
                                  double (*f2)(const Vec3&, const Vec3&, double, double),
                                  double c2t, double s2t) {
    const GridSpec& g = fields.grid;
    InvariantResult out{g, std::vector<double>(g.size()), std::vector<double>(g.size()), {}};
    double acc1 = 0.0, acc2 = 0.0;
    for (int ix = 0; ix < g.points(0); ++ix)
        for (int iy = 0; iy < g.points(1); ++iy)
            for (int iz = 0; iz < g.points(2); ++iz) {
                const std::size_t idx = g.index(ix, iy, iz);
                const double v1 = f1(fields.u1[idx], fields.u2[idx], c2t, s2t);
                const double v2 = f2(fields.u1[idx], fields.u2[idx], c2t, s2t);
                out.i1[idx] = v1;
                out.i2[idx] = v2;
                const double w = g.quad_weight(ix, iy, iz);
                acc1 += w * v1;
                acc2 += w * v2;
            }
    out.integrated = {acc1, acc2};
    return out;
}

}  // namespace

InvariantResult invariants(const VectorFieldPair& fields) {
    return map_and_integrate(
        fields,
        [](const Vec3& a, const Vec3& b, double, double) { return a.norm2() - b.norm2(); },
        [](const Vec3& a, const Vec3& b, double, double) { return a.dot(b); }, 0.0, 0.0);
}

InvariantResult rotated_invariants(const VectorFieldPair& fields, DualAngle theta) {
    const double c2t = std::cos(2.0 * theta.radians());
    const double s2t = std::sin(2.0 * theta.radians());
    return map_and_integrate(
        fields,
        [](const Vec3& a, const Vec3& b, double c, double s) {
            return (a.norm2() - b.norm2()) * c + 2.0 * a.dot(b) * s;
        },
        [](const Vec3& a, const Vec3& b, double c, double s) {
            return 2.0 * a.dot(b) * c - (a.norm2() - b.norm2()) * s;
        },
        c2t, s2t);
}

}  // namespace phonoscope
