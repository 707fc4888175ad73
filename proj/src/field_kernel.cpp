#include "phonoscope/field_kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace phonoscope {

namespace {

// Second-order d/dx of one Cartesian component along one axis.
// Central in the interior, one-sided three-point stencils at the ends.
struct AxisDeriv {
    int stride;  // index stride along the axis
    int n;       // points along the axis
    double inv2h;

    // i: index along the axis, base: flat index of the sample
    [[nodiscard]] double operator()(const std::vector<Vec3>& v, double Vec3::*comp,
                                    std::size_t base, int i) const {
        if (n < 3) return 0.0;
        if (i == 0)
            return (-3.0 * v[base].*comp + 4.0 * v[base + stride].*comp -
                    v[base + 2 * stride].*comp) * inv2h;
        if (i == n - 1)
            return (3.0 * v[base].*comp - 4.0 * v[base - stride].*comp +
                    v[base - 2 * stride].*comp) * inv2h;
        return (v[base + stride].*comp - v[base - stride].*comp) * inv2h;
    }
};

bool interior(const GridSpec& g, int ix, int iy, int iz) {
    if (g.active(0) && (ix == 0 || ix == g.points(0) - 1)) return false;
    if (g.active(1) && (iy == 0 || iy == g.points(1) - 1)) return false;
    if (g.active(2) && (iz == 0 || iz == g.points(2) - 1)) return false;
    return true;
}

}  // namespace

CurlResult curl(const VectorField& field) {
    const GridSpec& g = field.grid;
    if (field.values.size() != g.size())
        throw std::invalid_argument("curl: field samples do not match grid");
    for (int ax = 0; ax < 3; ++ax)
        if (g.active(ax) && g.points(ax) < 3)
            throw std::invalid_argument("curl: need at least 3 points per active axis");

    const int nx = g.points(0), ny = g.points(1), nz = g.points(2);
    const AxisDeriv dx{ny * nz, nx, g.active(0) ? 0.5 / g.spacing(0) : 0.0};
    const AxisDeriv dy{nz, ny, g.active(1) ? 0.5 / g.spacing(1) : 0.0};
    const AxisDeriv dz{1, nz, g.active(2) ? 0.5 / g.spacing(2) : 0.0};

    CurlResult out{VectorField(g), std::vector<std::uint8_t>(g.size(), 0)};
    const auto& v = field.values;

    for (int ix = 0; ix < nx; ++ix)
        for (int iy = 0; iy < ny; ++iy)
            for (int iz = 0; iz < nz; ++iz) {
                const std::size_t idx = g.index(ix, iy, iz);
                const double dFz_dy = g.active(1) ? dy(v, &Vec3::z, idx, iy) : 0.0;
                const double dFy_dz = g.active(2) ? dz(v, &Vec3::y, idx, iz) : 0.0;
                const double dFx_dz = g.active(2) ? dz(v, &Vec3::x, idx, iz) : 0.0;
                const double dFz_dx = g.active(0) ? dx(v, &Vec3::z, idx, ix) : 0.0;
                const double dFy_dx = g.active(0) ? dx(v, &Vec3::y, idx, ix) : 0.0;
                const double dFx_dy = g.active(1) ? dy(v, &Vec3::x, idx, iy) : 0.0;
                out.field.values[idx] = {dFz_dy - dFy_dz, dFx_dz - dFz_dx, dFy_dx - dFx_dy};
                if (!interior(g, ix, iy, iz)) out.boundary[idx] = 1;
            }
    return out;
}

ResidualReport maxwell_form_residual(const VectorFieldPair& fields,
                                     const VectorField& du1_dt,
                                     const VectorField& du2_dt) {
    const GridSpec& g = fields.grid;
    if (!(du1_dt.grid == g) || !(du2_dt.grid == g))
        throw std::invalid_argument("maxwell_form_residual: all fields must share one grid");
    if (!fields.finite() || !du1_dt.finite() || !du2_dt.finite())
        throw std::invalid_argument("maxwell_form_residual: non-finite samples");

    const CurlResult c1 = curl(fields.first());
    const CurlResult c2 = curl(fields.second());

    double sum1 = 0.0, sum2 = 0.0;
    std::size_t count = 0;
    const int nx = g.points(0), ny = g.points(1), nz = g.points(2);
    for (int ix = 0; ix < nx; ++ix)
        for (int iy = 0; iy < ny; ++iy)
            for (int iz = 0; iz < nz; ++iz) {
                if (!interior(g, ix, iy, iz)) continue;
                const std::size_t idx = g.index(ix, iy, iz);
                sum1 += (c1.field.values[idx] + du2_dt.values[idx]).norm2();
                sum2 += (c2.field.values[idx] - du1_dt.values[idx]).norm2();
                ++count;
            }
    if (count == 0)
        throw std::invalid_argument("maxwell_form_residual: grid has no interior points");

    return {std::sqrt(sum1 / count), std::sqrt(sum2 / count), g.max_spacing()};
}

TimeDerivativePair time_derivative(const VectorFieldPair& at_t_minus,
                                   const VectorFieldPair& at_t_plus,
                                   double dt) {
    if (!(at_t_minus.grid == at_t_plus.grid))
        throw std::invalid_argument("time_derivative: snapshots on different grids");
    if (dt <= 0.0) throw std::invalid_argument("time_derivative: dt must be positive");

    const GridSpec& g = at_t_minus.grid;
    TimeDerivativePair out{VectorField(g), VectorField(g)};
    const double inv = 1.0 / (2.0 * dt);
    for (std::size_t i = 0; i < g.size(); ++i) {
        out.du1_dt.values[i] = (at_t_plus.u1[i] - at_t_minus.u1[i]) * inv;
        out.du2_dt.values[i] = (at_t_plus.u2[i] - at_t_minus.u2[i]) * inv;
    }
    return out;
}

}  // namespace phonoscope
