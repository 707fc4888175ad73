#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <unsupported/Eigen/MatrixFunctions>

#include "phonoscope/fock.hpp"
#include "test_helpers.hpp"

using namespace phonoscope;
using namespace std::complex_literals;

namespace {

constexpr double kPi = std::numbers::pi;

double block_frobenius(const Matrix& m, const std::vector<int>& keep) {
    double acc = 0.0;
    for (int r : keep)
        for (int c : keep) acc += std::norm(m(r, c));
    return std::sqrt(acc);
}

// Heisenberg conjugation through an explicit matrix exponential of
// H = hbar omega (a_dag a + 1/2): a(t) = e^{iHt/hbar} a e^{-iHt/hbar}.
Matrix exponential_oracle(const Matrix& op, const LadderPair& ladder, double omega,
                          double hbar, double t) {
    const Eigen::Index dim = op.rows();
    const Matrix h = hbar * omega *
                     (ladder.a_dag * ladder.a +
                      0.5 * Matrix::Identity(dim, dim));
    const Matrix u = ((1i * t / hbar) * h).exp();
    return u * op * u.adjoint();
}

}  // namespace

TEST_CASE("ladder matrices carry sqrt(n) on the first superdiagonal") {
    const LadderPair l = build_ladder({2});
    CHECK(l.a.rows() == 3);
    CHECK(std::abs(l.a(0, 1) - 1.0) <= 1e-15);
    CHECK(std::abs(l.a(1, 2) - std::sqrt(2.0)) <= 1e-15);
    double off = 0.0;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            if (c != r + 1) off += std::abs(l.a(r, c));
    CHECK(off == 0.0);
    CHECK((l.a_dag - l.a.adjoint()).norm() == 0.0);
}

TEST_CASE("the vacuum is annihilated") {
    const LadderPair l = build_ladder({5});
    CVector vac = CVector::Zero(6);
    vac(0) = 1.0;
    CHECK((l.a * vac).norm() == 0.0);
}

TEST_CASE("build_ladder rejects n_max < 1") {
    CHECK_THROWS_AS(build_ladder({0}), std::invalid_argument);
}

TEST_CASE("[a, a_dag] is the identity on the faithful block, -n_max at the corner") {
    for (int n_max : {2, 8, 32}) {
        const LadderPair l = build_ladder({n_max});
        const Matrix comm = l.a * l.a_dag - l.a_dag * l.a;
        const std::vector<int> keep = faithful_block(n_max, 1);
        const Matrix id = Matrix::Identity(n_max + 1, n_max + 1);
        double worst = 0.0;
        for (int r : keep)
            for (int c : keep) worst = std::max(worst, std::abs(comm(r, c) - id(r, c)));
        CHECK(worst <= 1e-12);
        CHECK(std::abs(comm(n_max, n_max) - static_cast<double>(-n_max)) <= 1e-12);
    }
}

TEST_CASE("position and momentum are Hermitian with canonical commutator i hbar") {
    const double mass = 1.3, omega = 0.7, hbar = 1.0;
    const int n_max = 10;
    const LadderPair l = build_ladder({n_max});
    const QPPair qp = position_momentum_ops(l, mass, omega, hbar);

    CHECK((qp.q - qp.q.adjoint()).norm() == 0.0);
    CHECK((qp.p - qp.p.adjoint()).norm() == 0.0);

    const Matrix comm = qp.q * qp.p - qp.p * qp.q;
    const std::vector<int> keep = faithful_block(n_max, 1);
    double worst = 0.0;
    for (int r : keep)
        for (int c : keep) {
            const std::complex<double> want = (r == c) ? 1i * hbar : 0.0;
            worst = std::max(worst, std::abs(comm(r, c) - want));
        }
    CHECK(worst <= 1e-12);
}

TEST_CASE("vacuum moments of position match hbar/(2 m omega)") {
    const double mass = 2.0, omega = 0.5, hbar = 1.0;
    const LadderPair l = build_ladder({8});
    const QPPair qp = position_momentum_ops(l, mass, omega, hbar);
    CVector vac = CVector::Zero(9);
    vac(0) = 1.0;
    const std::complex<double> mean = vac.adjoint() * qp.q * vac;
    const std::complex<double> second = vac.adjoint() * qp.q * qp.q * vac;
    CHECK(std::abs(mean) <= 1e-15);
    CHECK(second.real() == doctest::Approx(hbar / (2.0 * mass * omega)).epsilon(1e-13));
    CHECK(std::abs(second.imag()) <= 1e-15);
}

TEST_CASE("heisenberg_evolve: t = 0 and full periods are the identity") {
    const LadderPair l = build_ladder({6});
    const LadderPair at0 = heisenberg_evolve(l, 1.7, 0.0);
    CHECK((at0.a - l.a).norm() == 0.0);
    const double omega = 1.7;
    const LadderPair cycle = heisenberg_evolve(l, omega, 2.0 * kPi / omega);
    CHECK((cycle.a - l.a).norm() <= 1e-14 * l.a.norm());
    CHECK((cycle.a_dag - l.a_dag).norm() <= 1e-14 * l.a.norm());
}

TEST_CASE("heisenberg_evolve matches the matrix-exponential oracle") {
    const int n_max = 8;
    const double omega = 1.0, hbar = 1.0, t = 1.7;  // omega t = 1.7
    const LadderPair l = build_ladder({n_max});
    const LadderPair evolved = heisenberg_evolve(l, omega, t);

    const Matrix oracle_a = exponential_oracle(l.a, l, omega, hbar, t);
    const Matrix oracle_adag = exponential_oracle(l.a_dag, l, omega, hbar, t);

    const std::vector<int> keep = faithful_block(n_max, 1);
    CHECK(block_frobenius(evolved.a - oracle_a, keep) <= 1e-8);
    CHECK(block_frobenius(evolved.a_dag - oracle_adag, keep) <= 1e-8);
}

TEST_CASE("real cosine phases cannot replace the complex exponential") {
    // Deliberate failing counterexample: cos(omega t) a differs from the
    // unitary evolution by a finite residual at omega t = pi/2.
    const int n_max = 8;
    const double omega = 1.0, t = kPi / 2.0;
    const LadderPair l = build_ladder({n_max});
    const Matrix cosine_version = std::cos(omega * t) * l.a;
    const Matrix oracle_a = exponential_oracle(l.a, l, omega, 1.0, t);
    const std::vector<int> keep = faithful_block(n_max, 1);
    CHECK(block_frobenius(cosine_version - oracle_a, keep) >= 0.5);
}

TEST_CASE("phonon number is conserved under free evolution") {
    const LadderPair l = build_ladder({12});
    const Matrix n0 = l.a_dag * l.a;
    for (double t : {0.3, 2.9, 41.0}) {
        const LadderPair lt = heisenberg_evolve(l, 1.3, t);
        const Matrix nt = lt.a_dag * lt.a;
        CHECK((nt - n0).norm() <= 1e-14 * std::max(1.0, n0.norm()));
    }
}

TEST_CASE("oscillator Hamiltonian spectrum is hbar omega (n + 1/2) on the faithful block") {
    const int n_max = 12;
    const double omega = 0.8, hbar = 1.0;
    const LadderPair l = build_ladder({n_max});
    const Matrix h =
        hbar * omega * (l.a_dag * l.a + 0.5 * Matrix::Identity(n_max + 1, n_max + 1));
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    REQUIRE(solver.info() == Eigen::Success);
    for (int n = 0; n < n_max; ++n)
        CHECK(solver.eigenvalues()(n) ==
              doctest::Approx(hbar * omega * (n + 0.5)).epsilon(1e-10));
}

TEST_CASE("field operators: vacuum expectation vanishes, variance matches") {
    // Single mode alpha = 1 in L = pi, V = 2: <0|U1^2|0> = hbar omega / V at z = L/2.
    const CavitySpec cavity{kPi, 2.0, 1.0, 1};
    const ModeSet modes = mode_spectrum(cavity);
    const FockSpec spec{8};
    const double z = cavity.length / 2.0;

    const FieldOperators ops = field_operators(modes, spec, z, 0.9);
    CHECK((ops.u1 - ops.u1.adjoint()).norm() <= 1e-14 * ops.u1.norm());
    CHECK((ops.u2 - ops.u2.adjoint()).norm() <= 1e-14 * ops.u2.norm());

    CVector vac = CVector::Zero(9);
    vac(0) = 1.0;
    const std::complex<double> mean1 = vac.adjoint() * ops.u1 * vac;
    const std::complex<double> mean2 = vac.adjoint() * ops.u2 * vac;
    CHECK(std::abs(mean1) <= 1e-14);
    CHECK(std::abs(mean2) <= 1e-14);

    const std::complex<double> second = vac.adjoint() * ops.u1 * ops.u1 * vac;
    CHECK(second.real() ==
          doctest::Approx(spec.hbar * modes[0].omega / cavity.volume).epsilon(1e-12));
}

TEST_CASE("coherent-state expectation reproduces the classical standing wave") {
    const CavitySpec cavity{kPi, 2.0, 1.0, 1};
    const ModeSet modes = mode_spectrum(cavity);
    const Mode& mode = modes[0];
    const int n_max = 16;
    const FockSpec spec{n_max};

    const std::complex<double> gamma = 1.2 * std::exp(1i * (kPi / 5.0));
    REQUIRE(std::norm(gamma) <= n_max / 4.0);
    const CVector state = coherent_state(gamma, n_max);

    // Classical trajectory matched to gamma.
    const double q0 = std::sqrt(2.0 * spec.hbar / (mode.mass * mode.omega)) * gamma.real();
    const double p0 = std::sqrt(2.0 * spec.hbar * mode.mass * mode.omega) * gamma.imag();
    const ModeState classical = state_from_initial(q0, p0, mode);

    const double scale = mode.amplitude * classical.amplitude;
    for (double t : {0.0, 0.63, 1.9, 4.4}) {
        const ModeState now = oscillator_evolve(classical, mode, t);
        for (double z : {0.31, 1.1, 2.2, 2.9}) {
            const FieldOperators ops = field_operators(modes, spec, z, t);
            const std::complex<double> expect = state.adjoint() * ops.u1 * state;
            const double classical_value = mode.amplitude * now.q * std::sin(mode.k * z);
            CHECK(std::abs(expect.real() - classical_value) <= 1e-6 * scale);
            CHECK(std::abs(expect.imag()) <= 1e-12);
        }
    }
}

TEST_CASE("operator field equations: single-mode residual cancels to rounding") {
    const CavitySpec cavity{kPi, 2.0, 1.0, 1};
    const ModeSet modes = mode_spectrum(cavity);
    const FockSpec spec{8};
    const GridSpec grid = GridSpec::line_z(cavity.length, 33);
    for (double t : {0.0, 0.7, 3.1}) {
        const OperatorResidual r = operator_field_equation_residual(modes, spec, grid, t);
        CHECK(r.r1_max <= 1e-12);
        CHECK(r.r2_max <= 1e-12);
    }
}

TEST_CASE("operator field equations: two-mode tensor product residual cancels") {
    const CavitySpec cavity{kPi, 2.0, 1.0, 2};
    const ModeSet modes = mode_spectrum(cavity);
    const FockSpec spec{4};  // dimension 25
    const GridSpec grid = GridSpec::line_z(cavity.length, 17);
    const OperatorResidual r = operator_field_equation_residual(modes, spec, grid, 1.3);
    CHECK(r.r1_max <= 1e-12);
    CHECK(r.r2_max <= 1e-12);
}

TEST_CASE("vacuum matrix element of the residual operators is zero") {
    const CavitySpec cavity{kPi, 2.0, 1.0, 1};
    const ModeSet modes = mode_spectrum(cavity);
    const FockSpec spec{6};
    const double z = 1.234, t = 0.77;

    // Rebuild both residual operators explicitly at one point.
    const LadderPair l = heisenberg_evolve(build_ladder(spec), modes[0].omega, t);
    const double c = std::sqrt(spec.hbar * modes[0].omega / cavity.volume);
    const Matrix plus = l.a_dag + l.a;
    const Matrix minus = l.a_dag - l.a;
    const Matrix r1 = c * modes[0].k * std::cos(modes[0].k * z) * plus +
                      1i * std::cos(modes[0].k * z) * c * (1i * modes[0].omega * plus);
    const Matrix r2 = 1i * c * modes[0].k * std::sin(modes[0].k * z) * minus -
                      c * std::sin(modes[0].k * z) * (1i * modes[0].omega * minus);

    CVector vac = CVector::Zero(7);
    vac(0) = 1.0;
    CHECK(std::abs(std::complex<double>(vac.adjoint() * r1 * vac)) <= 1e-15);
    CHECK(std::abs(std::complex<double>(vac.adjoint() * r2 * vac)) <= 1e-15);
}

TEST_CASE("multimode tensor dimension cap is enforced") {
    const CavitySpec big{kPi, 2.0, 1.0, 4};
    const FockSpec over{15};  // 16^4 = 65536 > 4096
    CHECK_THROWS_AS(field_operators(mode_spectrum(big), over, 1.0, 0.0),
                    std::invalid_argument);

    const CavitySpec small{kPi, 2.0, 1.0, 2};
    const FockSpec under{5};  // 6^2 = 36
    CHECK_NOTHROW(field_operators(mode_spectrum(small), under, 1.0, 0.0));
}

TEST_CASE("faithful_block enumerates per-mode occupations below n_max") {
    const auto single = faithful_block(3, 1);
    CHECK(single == std::vector<int>{0, 1, 2});
    const auto pair = faithful_block(1, 2);  // dim 4, keep occ (0,0) only
    CHECK(pair == std::vector<int>{0});
}

TEST_CASE("embedded mode operators act on their own factor only") {
    const LadderPair l = build_ladder({2});
    const Matrix a0 = embed_mode_operator(l.a, 0, 2);
    const Matrix a1 = embed_mode_operator(l.a, 1, 2);
    // Different factors commute.
    CHECK((a0 * a1 - a1 * a0).norm() <= 1e-14);
    CHECK(a0.rows() == 9);
}
