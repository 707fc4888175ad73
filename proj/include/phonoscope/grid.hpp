#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace phonoscope {

/// Real 3-vector with value semantics. Used for field samples.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }

    friend Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
    friend Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
    friend Vec3 operator*(double s, Vec3 v) { return v *= s; }
    friend Vec3 operator*(Vec3 v, double s) { return v *= s; }
    friend Vec3 operator-(Vec3 v) { return {-v.x, -v.y, -v.z}; }

    [[nodiscard]] double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    [[nodiscard]] double norm2() const { return dot(*this); }
    [[nodiscard]] double norm() const { return std::sqrt(norm2()); }
    [[nodiscard]] Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    [[nodiscard]] bool finite() const {
        return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
    }
};

/// Regular rectilinear sampling grid. Axes with a single point are inactive
/// (zero extent, zero spacing); this covers 1D z-only lines as well as full
/// 3D boxes. Spacing is extent / (points - 1) on active axes.
class GridSpec {
public:
    GridSpec() = default;

    GridSpec(std::array<double, 3> extent, std::array<int, 3> points)
        : extent_(extent), points_(points) {
        for (int ax = 0; ax < 3; ++ax) {
            if (points_[ax] < 1) throw std::invalid_argument("GridSpec: points per axis must be >= 1");
            if (points_[ax] > 1 && extent_[ax] <= 0.0)
                throw std::invalid_argument("GridSpec: active axis needs positive extent");
            if (points_[ax] == 1) extent_[ax] = 0.0;
            spacing_[ax] = points_[ax] > 1 ? extent_[ax] / (points_[ax] - 1) : 0.0;
        }
    }

    /// 1D line along z spanning [0, length].
    static GridSpec line_z(double length, int points) {
        if (points < 2) throw std::invalid_argument("GridSpec::line_z: need at least 2 points");
        return GridSpec({0.0, 0.0, length}, {1, 1, points});
    }

    static GridSpec box(std::array<double, 3> extent, std::array<int, 3> points) {
        return GridSpec(extent, points);
    }

    [[nodiscard]] int points(int axis) const { return points_[axis]; }
    [[nodiscard]] double extent(int axis) const { return extent_[axis]; }
    [[nodiscard]] double spacing(int axis) const { return spacing_[axis]; }
    [[nodiscard]] bool active(int axis) const { return points_[axis] > 1; }

    [[nodiscard]] std::size_t size() const {
        return static_cast<std::size_t>(points_[0]) * points_[1] * points_[2];
    }

    [[nodiscard]] std::size_t index(int ix, int iy, int iz) const {
        return (static_cast<std::size_t>(ix) * points_[1] + iy) * points_[2] + iz;
    }

    [[nodiscard]] Vec3 point(int ix, int iy, int iz) const {
        return {ix * spacing_[0], iy * spacing_[1], iz * spacing_[2]};
    }

    /// Largest spacing over active axes; the h reported alongside residuals.
    [[nodiscard]] double max_spacing() const {
        double h = 0.0;
        for (int ax = 0; ax < 3; ++ax)
            if (active(ax)) h = std::max(h, spacing_[ax]);
        return h;
    }

    /// Trapezoidal quadrature weight of grid node (ix,iy,iz): product of the
    /// per-axis weights h * (1/2 at endpoints, 1 inside). Inactive axes
    /// contribute a factor of 1.
    [[nodiscard]] double quad_weight(int ix, int iy, int iz) const {
        auto axis_w = [this](int ax, int i) {
            if (!active(ax)) return 1.0;
            const bool edge = (i == 0 || i == points_[ax] - 1);
            return spacing_[ax] * (edge ? 0.5 : 1.0);
        };
        return axis_w(0, ix) * axis_w(1, iy) * axis_w(2, iz);
    }

    friend bool operator==(const GridSpec& a, const GridSpec& b) {
        return a.extent_ == b.extent_ && a.points_ == b.points_;
    }

private:
    std::array<double, 3> extent_{0.0, 0.0, 0.0};
    std::array<int, 3> points_{1, 1, 1};
    std::array<double, 3> spacing_{0.0, 0.0, 0.0};
};

/// A real 3-vector field sampled on a grid.
struct VectorField {
    GridSpec grid;
    std::vector<Vec3> values;

    VectorField() = default;
    explicit VectorField(const GridSpec& g) : grid(g), values(g.size()) {}
    VectorField(const GridSpec& g, std::vector<Vec3> v) : grid(g), values(std::move(v)) {
        if (values.size() != grid.size())
            throw std::invalid_argument("VectorField: sample count does not match grid");
    }

    Vec3& at(int ix, int iy, int iz) { return values[grid.index(ix, iy, iz)]; }
    [[nodiscard]] const Vec3& at(int ix, int iy, int iz) const { return values[grid.index(ix, iy, iz)]; }

    [[nodiscard]] bool finite() const {
        for (const auto& v : values)
            if (!v.finite()) return false;
        return true;
    }
};

/// The two real components of a complex vector field U = U1 + i U2,
/// sampled on one shared grid.
struct VectorFieldPair {
    GridSpec grid;
    std::vector<Vec3> u1;
    std::vector<Vec3> u2;
    double time = 0.0;

    VectorFieldPair() = default;
    explicit VectorFieldPair(const GridSpec& g, double t = 0.0)
        : grid(g), u1(g.size()), u2(g.size()), time(t) {}

    VectorFieldPair(VectorField f1, VectorField f2, double t = 0.0)
        : grid(f1.grid), u1(std::move(f1.values)), u2(std::move(f2.values)), time(t) {
        if (!(f1.grid == f2.grid) || u1.size() != grid.size() || u2.size() != grid.size())
            throw std::invalid_argument("VectorFieldPair: fields must share one grid");
    }

    [[nodiscard]] VectorField first() const { return {grid, u1}; }
    [[nodiscard]] VectorField second() const { return {grid, u2}; }

    [[nodiscard]] bool finite() const {
        for (const auto& v : u1)
            if (!v.finite()) return false;
        for (const auto& v : u2)
            if (!v.finite()) return false;
        return true;
    }
};

}  // namespace phonoscope
