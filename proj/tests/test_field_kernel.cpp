#include <doctest.h>

#include <cmath>

#include "phonoscope/cavity.hpp"
#include "phonoscope/field_kernel.hpp"
#include "test_helpers.hpp"

using namespace phonoscope;
using test_helpers::Rng;
using test_helpers::sample_field;

namespace {

GridSpec small_box(int n) {
    return GridSpec::box({1.0, 1.0, 1.0}, {n, n, n});
}

double max_interior_error(const CurlResult& got, const VectorField& expected) {
    double worst = 0.0;
    for (std::size_t i = 0; i < got.field.values.size(); ++i) {
        if (got.boundary[i]) continue;
        worst = std::max(worst, (got.field.values[i] - expected.values[i]).norm());
    }
    return worst;
}

}  // namespace

TEST_CASE("curl of a constant field vanishes everywhere") {
    const auto field = sample_field(small_box(7), [](const Vec3&) { return Vec3{1.0, 2.0, 3.0}; });
    const CurlResult c = curl(field);
    for (const Vec3& v : c.field.values) CHECK(v.norm() == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("curl of the linear field (-y, x, 0) is (0, 0, 2) at interior points") {
    const auto field =
        sample_field(small_box(9), [](const Vec3& r) { return Vec3{-r.y, r.x, 0.0}; });
    const CurlResult c = curl(field);
    const GridSpec& g = field.grid;
    for (int ix = 1; ix < g.points(0) - 1; ++ix)
        for (int iy = 1; iy < g.points(1) - 1; ++iy)
            for (int iz = 1; iz < g.points(2) - 1; ++iz) {
                const Vec3 v = c.field.values[g.index(ix, iy, iz)];
                CHECK((v - Vec3{0.0, 0.0, 2.0}).norm() <= 1e-10);
            }
}

TEST_CASE("curl of sin(kz) e_x matches the analytic derivative at second order") {
    // U = A q sin(kz) e_x with A = q = 1, k = 2 -> curl = 2 cos(2z) e_y
    const double k = 2.0;
    auto run = [&](int n) {
        const GridSpec g = GridSpec::line_z(1.0, n);
        const auto field =
            sample_field(g, [&](const Vec3& r) { return Vec3{std::sin(k * r.z), 0.0, 0.0}; });
        const auto expected =
            sample_field(g, [&](const Vec3& r) { return Vec3{0.0, k * std::cos(k * r.z), 0.0}; });
        return max_interior_error(curl(field), expected);
    };
    const double err_h = run(101);
    const double err_h2 = run(201);
    CHECK(err_h <= 1e-3);                      // O(h^2) head room at h = 0.01
    CHECK(err_h / err_h2 == doctest::Approx(4.0).epsilon(0.15));
}

TEST_CASE("curl of a gradient field vanishes at second order") {
    // grad phi for phi = sin(x) cos(y) z is curl-free.
    auto grad_phi = [](const Vec3& r) {
        return Vec3{std::cos(r.x) * std::cos(r.y) * r.z, -std::sin(r.x) * std::sin(r.y) * r.z,
                    std::sin(r.x) * std::cos(r.y)};
    };
    auto run = [&](int n) {
        const auto field = sample_field(small_box(n), grad_phi);
        const CurlResult c = curl(field);
        double worst = 0.0;
        for (std::size_t i = 0; i < c.field.values.size(); ++i)
            if (!c.boundary[i]) worst = std::max(worst, c.field.values[i].norm());
        return worst;
    };
    const double err_h = run(11);
    const double err_h2 = run(21);
    CHECK(err_h2 < err_h);
    CHECK(err_h / err_h2 > 3.0);
}

TEST_CASE("curl rejects too-small grids and mismatched shapes") {
    CHECK_THROWS_AS(curl(VectorField(GridSpec::line_z(1.0, 2))), std::invalid_argument);
    VectorField bad(small_box(5));
    bad.values.pop_back();
    CHECK_THROWS_AS(curl(bad), std::invalid_argument);
}

TEST_CASE("maxwell_form_residual is zero for zero fields and derivatives") {
    const GridSpec g = GridSpec::line_z(1.0, 16);
    const ResidualReport r = maxwell_form_residual(VectorFieldPair(g), VectorField(g), VectorField(g));
    CHECK(r.r1_norm == 0.0);
    CHECK(r.r2_norm == 0.0);
    CHECK(r.h == doctest::Approx(g.spacing(2)));
}

TEST_CASE("first cavity solution residual converges at second order") {
    const CavitySpec spec{std::numbers::pi, 2.0, 1.0, 1};
    const ModeSet modes = mode_spectrum(spec);
    const std::vector<ModeState> states{state_from_initial(1.0, 0.3, modes[0])};

    auto residual = [&](int n) {
        const GridSpec g = GridSpec::line_z(spec.length, n);
        const SynthesizedField s = synthesize_first_solution(modes, states, g, 0.3);
        return maxwell_form_residual(s.fields, s.du1_dt, s.du2_dt);
    };
    const ResidualReport at_h = residual(201);
    const ResidualReport at_h2 = residual(401);
    CHECK(at_h.r1_norm / at_h2.r1_norm == doctest::Approx(4.0).epsilon(0.13));
    CHECK(at_h.r2_norm / at_h2.r2_norm == doctest::Approx(4.0).epsilon(0.13));
    CHECK(at_h.r1_norm <= 1e-3);
    CHECK(at_h.r2_norm <= 1e-3);
}

TEST_CASE("traveling pair cos(z - t) satisfies the equations to O(h^2)") {
    const double t = 0.4;
    auto run = [&](int n) {
        const GridSpec g = GridSpec::line_z(2.0, n);
        VectorFieldPair pair(g, t);
        VectorField du1(g), du2(g);
        for (int iz = 0; iz < n; ++iz) {
            const double z = g.point(0, 0, iz).z;
            const std::size_t i = g.index(0, 0, iz);
            pair.u1[i] = {std::cos(z - t), 0.0, 0.0};
            pair.u2[i] = {0.0, std::cos(z - t), 0.0};
            du1.values[i] = {std::sin(z - t), 0.0, 0.0};
            du2.values[i] = {0.0, std::sin(z - t), 0.0};
        }
        return maxwell_form_residual(pair, du1, du2);
    };
    const ResidualReport at_h = run(101);
    const ResidualReport at_h2 = run(201);
    CHECK(at_h.r1_norm <= 1e-4);
    CHECK(at_h.r2_norm <= 1e-4);
    CHECK(at_h.r1_norm / at_h2.r1_norm == doctest::Approx(4.0).epsilon(0.15));
    CHECK(at_h.r2_norm / at_h2.r2_norm == doctest::Approx(4.0).epsilon(0.15));
}

TEST_CASE("residual swaps exactly under the quarter-turn dual substitution") {
    Rng rng(2024);
    const GridSpec g = small_box(6);
    const VectorFieldPair fields = test_helpers::random_pair(g, rng);
    const VectorField du1 = test_helpers::sample_field(g, [&](const Vec3&) { return rng.vec3(); });
    const VectorField du2 = test_helpers::sample_field(g, [&](const Vec3&) { return rng.vec3(); });

    VectorFieldPair swapped(g, fields.time);
    swapped.u1 = fields.u2;
    for (std::size_t i = 0; i < g.size(); ++i) swapped.u2[i] = -fields.u1[i];
    VectorField sdu1 = du2, sdu2(g);
    for (std::size_t i = 0; i < g.size(); ++i) sdu2.values[i] = -du1.values[i];

    const ResidualReport r = maxwell_form_residual(fields, du1, du2);
    const ResidualReport rs = maxwell_form_residual(swapped, sdu1, sdu2);
    CHECK(rs.r1_norm == r.r2_norm);
    CHECK(rs.r2_norm == r.r1_norm);
}

TEST_CASE("residual rejects mismatched grids and non-finite samples") {
    const GridSpec g = GridSpec::line_z(1.0, 8);
    const GridSpec other = GridSpec::line_z(1.0, 9);
    CHECK_THROWS_AS(maxwell_form_residual(VectorFieldPair(g), VectorField(other), VectorField(g)),
                    std::invalid_argument);

    VectorFieldPair bad(g);
    bad.u1[3].x = std::nan("");
    CHECK_THROWS_AS(maxwell_form_residual(bad, VectorField(g), VectorField(g)),
                    std::invalid_argument);
}

TEST_CASE("time_derivative recovers analytic rates from snapshots") {
    const CavitySpec spec{std::numbers::pi, 2.0, 1.0, 2};
    const ModeSet modes = mode_spectrum(spec);
    const std::vector<ModeState> states{state_from_initial(0.7, 0.1, modes[0]),
                                        state_from_initial(-0.2, 0.5, modes[1])};
    const GridSpec g = GridSpec::line_z(spec.length, 64);
    const double t = 0.9, dt = 1e-5;

    const SynthesizedField minus = synthesize_first_solution(modes, states, g, t - dt);
    const SynthesizedField plus = synthesize_first_solution(modes, states, g, t + dt);
    const SynthesizedField at_t = synthesize_first_solution(modes, states, g, t);

    const TimeDerivativePair fd = time_derivative(minus.fields, plus.fields, dt);
    double worst = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        worst = std::max(worst, (fd.du1_dt.values[i] - at_t.du1_dt.values[i]).norm());
        worst = std::max(worst, (fd.du2_dt.values[i] - at_t.du2_dt.values[i]).norm());
    }
    CHECK(worst <= 1e-8);  // O(dt^2)
}
