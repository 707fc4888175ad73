#include "phonoscope/verify.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <sstream>
#include <unsupported/Eigen/MatrixFunctions>

#include "phonoscope/cavity.hpp"
#include "phonoscope/duality.hpp"
#include "phonoscope/field_kernel.hpp"
#include "phonoscope/fock.hpp"
#include "phonoscope/io.hpp"
#include "phonoscope/kinetics.hpp"
#include "phonoscope/lattice.hpp"
#include "phonoscope/pairing.hpp"

namespace phonoscope {

using namespace std::complex_literals;

namespace {

constexpr double kPi = std::numbers::pi;

// Portable deterministic uniforms: raw engine bits mapped to [0, 1).
class Uniform {
public:
    explicit Uniform(std::uint64_t seed) : engine_(seed) {}
    double operator()(double lo = 0.0, double hi = 1.0) {
        const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

private:
    std::mt19937_64 engine_;
};

CheckResult bounded(const std::string& name, double measured, double threshold,
                    std::string detail = "") {
    return {name, measured <= threshold, measured, threshold, std::move(detail)};
}

CheckResult in_window(const std::string& name, double measured, double lo, double hi,
                      std::string detail = "") {
    CheckResult r{name, measured >= lo && measured <= hi, measured, hi, std::move(detail)};
    return r;
}

std::vector<ModeState> random_states(const ModeSet& modes, Uniform& rng, bool zero_momentum) {
    std::vector<ModeState> states;
    for (std::size_t i = 0; i < modes.size(); ++i)
        states.push_back(state_from_initial(rng(-1.5, 1.5),
                                            zero_momentum ? 0.0 : rng(-1.5, 1.5), modes[i]));
    return states;
}

// ---------------------------------------------------------------------------
// field_kernel + cavity

void check_field_kernel(std::vector<CheckResult>& out, Uniform& rng, bool quick) {
    const CavitySpec spec{kPi, 8.0, 1.0, 3};
    const ModeSet modes = mode_spectrum(spec);
    std::vector<ModeState> states;
    for (std::size_t i = 0; i < modes.size(); ++i)
        states.push_back(state_from_initial(rng(-1.0, 1.0), rng(-1.0, 1.0), modes[i]));

    auto residual = [&](int n) {
        const GridSpec g = GridSpec::line_z(spec.length, n);
        const SynthesizedField s = synthesize_first_solution(modes, states, g, 0.3);
        return maxwell_form_residual(s.fields, s.du1_dt, s.du2_dt);
    };
    const int coarse = quick ? 251 : 1001;
    const ResidualReport at_h = residual(coarse);
    const ResidualReport at_h2 = residual(2 * coarse - 1);
    out.push_back(in_window("field.residual_convergence_r1", at_h.r1_norm / at_h2.r1_norm, 3.5,
                            4.5, "first solution, ratio of residuals at h and h/2"));
    out.push_back(in_window("field.residual_convergence_r2", at_h.r2_norm / at_h2.r2_norm, 3.5,
                            4.5));
    out.push_back(bounded("field.residual_magnitude", std::max(at_h.r1_norm, at_h.r2_norm),
                          1e-4 * (quick ? 16.0 : 1.0), "residual size at the coarse grid"));

    // Quarter-turn substitution swaps the two residual norms exactly.
    const GridSpec g = GridSpec::line_z(spec.length, 65);
    const SynthesizedField s = synthesize_first_solution(modes, states, g, 0.8);
    VectorFieldPair swapped(g, s.fields.time);
    swapped.u1 = s.fields.u2;
    for (std::size_t i = 0; i < g.size(); ++i) swapped.u2[i] = -s.fields.u1[i];
    VectorField sdu1 = s.du2_dt, sdu2(g);
    for (std::size_t i = 0; i < g.size(); ++i) sdu2.values[i] = -s.du1_dt.values[i];
    const ResidualReport direct = maxwell_form_residual(s.fields, s.du1_dt, s.du2_dt);
    const ResidualReport swapped_r = maxwell_form_residual(swapped, sdu1, sdu2);
    const double swap_err = std::max(std::abs(swapped_r.r1_norm - direct.r2_norm),
                                     std::abs(swapped_r.r2_norm - direct.r1_norm));
    out.push_back(bounded("field.dual_swap_symmetry", swap_err, 0.0, "must be exact"));
}

void check_duality(std::vector<CheckResult>& out, Uniform& rng, bool quick) {
    const GridSpec g = GridSpec::line_z(1.0, 16);
    const int trials = quick ? 20 : 100;

    double law_err = 0.0, norm_err = 0.0, group_err = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
        VectorFieldPair p(g);
        for (auto& v : p.u1) v = {rng(-2.0, 2.0), rng(-2.0, 2.0), rng(-2.0, 2.0)};
        for (auto& v : p.u2) v = {rng(-2.0, 2.0), rng(-2.0, 2.0), rng(-2.0, 2.0)};
        const double theta = rng(0.0, 2.0 * kPi);
        const VectorFieldPair r = dual_rotate(p, DualAngle(theta));
        const std::complex<double> phase = std::exp(std::complex<double>(0.0, 2.0 * theta));
        for (std::size_t i = 0; i < g.size(); ++i) {
            const std::complex<double> before(p.u1[i].norm2() - p.u2[i].norm2(),
                                              2.0 * p.u1[i].dot(p.u2[i]));
            const std::complex<double> after(r.u1[i].norm2() - r.u2[i].norm2(),
                                             2.0 * r.u1[i].dot(r.u2[i]));
            law_err = std::max(law_err,
                               std::abs(phase * after - before) / std::max(1.0, std::abs(before)));
            const double e0 = p.u1[i].norm2() + p.u2[i].norm2();
            const double e1 = r.u1[i].norm2() + r.u2[i].norm2();
            norm_err = std::max(norm_err, std::abs(e1 - e0) / std::max(1.0, e0));
        }
        const double t2 = rng(0.0, 2.0 * kPi);
        const VectorFieldPair two = dual_rotate(r, DualAngle(t2));
        const VectorFieldPair one = dual_rotate(p, DualAngle(theta + t2));
        for (std::size_t i = 0; i < g.size(); ++i) {
            group_err = std::max(group_err, (two.u1[i] - one.u1[i]).norm());
            group_err = std::max(group_err, (two.u2[i] - one.u2[i]).norm());
        }
    }
    out.push_back(bounded("duality.rotation_law", law_err, 1e-12,
                          "complex invariant phase law over random pairs"));
    out.push_back(bounded("duality.energy_invariance", norm_err, 1e-12));
    out.push_back(bounded("duality.group_property", group_err, 1e-12));
}

void check_cavity(std::vector<CheckResult>& out, Uniform& rng, bool quick) {
    const CavitySpec spec{kPi, 2.0, 1.0, 2};
    const ModeSet modes = mode_spectrum(spec);
    const std::vector<ModeState> states = random_states(modes, rng, false);

    // Energy conservation over a hundred periods of the slowest mode.
    const double e0 = modal_energy(states, modes);
    double drift = 0.0;
    const int steps = quick ? 20 : 100;
    for (int i = 1; i <= steps; ++i) {
        const double t = i * (100.0 * 2.0 * kPi / modes[0].omega) / steps;
        std::vector<ModeState> evolved;
        for (std::size_t m = 0; m < modes.size(); ++m)
            evolved.push_back(oscillator_evolve(states[m], modes[m], t));
        drift = std::max(drift, std::abs(modal_energy(evolved, modes) - e0) / e0);
    }
    out.push_back(bounded("cavity.energy_conservation", drift, 1e-12));

    // Field-route vs modal-route Hamiltonian.
    const GridSpec g = GridSpec::line_z(spec.length, quick ? 2001 : 10001);
    const SynthesizedField s = synthesize_first_solution(modes, states, g, 0.45);
    const double two_routes =
        std::abs(field_energy(s.fields, spec) - e0) / std::max(1e-300, e0);
    out.push_back(bounded("cavity.energy_two_routes", two_routes, quick ? 3e-6 : 1e-6));

    // Mode orthogonality: energies add across modes.
    const std::vector<ModeState> only_first{states[0], ModeState{}};
    const std::vector<ModeState> only_second{ModeState{}, states[1]};
    const double e_first =
        field_energy(synthesize_first_solution(modes, only_first, g, 0.45).fields, spec);
    const double e_second =
        field_energy(synthesize_first_solution(modes, only_second, g, 0.45).fields, spec);
    const double e_sum = field_energy(s.fields, spec);
    out.push_back(bounded("cavity.mode_orthogonality",
                          std::abs(e_sum - e_first - e_second) / std::max(1e-300, e_sum),
                          quick ? 3e-6 : 1e-6));

    // Boundary conditions are exact.
    double wall = std::abs(s.fields.u1.front().x) + std::abs(s.fields.u1.back().x);
    for (const Vec3& v : s.fields.u2) wall = std::max(wall, std::abs(v.z));
    out.push_back(bounded("cavity.boundary_conditions", wall, 0.0, "exact wall zeros"));

    // Second solution: q'' + q constant for zero-momentum states.
    const std::vector<ModeState> cosine_states = random_states(modes, rng, true);
    double const_err = 0.0;
    for (std::size_t m = 0; m < modes.size(); ++m) {
        const double reference = cosine_states[m].q;  // q''(0) + q(0)
        for (int i = 1; i <= 50; ++i) {
            const double t = (2.0 * kPi / modes[m].omega) * i / 50.0;
            const double combo =
                second_solution_amplitudes(cosine_states[m], modes[m], t).q_double_prime +
                oscillator_evolve(cosine_states[m], modes[m], t).q;
            const_err = std::max(const_err,
                                 std::abs(combo - reference) / std::max(1.0, std::abs(reference)));
        }
    }
    out.push_back(bounded("cavity.second_solution_constant", const_err, 1e-12));

    // Complex two-exponential solution with conjugate constants is the real one.
    double complex_err = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const double B = rng(0.1, 2.0), phi = rng(0.0, 2.0 * kPi), t = rng(0.0, 9.0);
        const std::complex<double> c1 = 0.5 * B * std::exp(1i * phi);
        const ModeState st = state_from_phase(B, phi, modes[0]);
        const std::complex<double> zq = complex_oscillator(c1, std::conj(c1), modes[0].omega, t);
        complex_err = std::max(complex_err,
                               std::abs(zq.real() - oscillator_evolve(st, modes[0], t).q));
        complex_err = std::max(complex_err, std::abs(zq.imag()));
    }
    out.push_back(bounded("cavity.complex_real_equivalence", complex_err, 1e-12));
}

// ---------------------------------------------------------------------------
// fock

void check_fock(std::vector<CheckResult>& out, bool quick) {
    double comm_err = 0.0, corner_err = 0.0;
    for (int n_max : {2, 8, 32}) {
        const LadderPair l = build_ladder({n_max});
        const Matrix comm = l.a * l.a_dag - l.a_dag * l.a;
        for (int r = 0; r < n_max; ++r)
            for (int c = 0; c < n_max; ++c)
                comm_err = std::max(comm_err, std::abs(comm(r, c) - (r == c ? 1.0 : 0.0)));
        corner_err = std::max(corner_err,
                              std::abs(comm(n_max, n_max) - static_cast<double>(-n_max)));
    }
    out.push_back(bounded("fock.commutator_block", comm_err, 1e-12,
                          "[a, a+] = I on occ <= n_max - 1 for n_max in {2, 8, 32}"));
    out.push_back(bounded("fock.commutator_corner", corner_err, 1e-12,
                          "truncation corner equals -n_max"));

    // Heisenberg phases against the matrix-exponential route.
    const int n_max = 8;
    const double omega = 1.0, t = 1.7;
    const LadderPair l = build_ladder({n_max});
    const Matrix h = omega * (l.a_dag * l.a + 0.5 * Matrix::Identity(n_max + 1, n_max + 1));
    const Matrix u = (1i * t * h).exp();
    const Matrix oracle = u * l.a * u.adjoint();
    const LadderPair evolved = heisenberg_evolve(l, omega, t);
    double frob = 0.0;
    for (int r = 0; r < n_max; ++r)
        for (int c = 0; c < n_max; ++c) frob += std::norm(evolved.a(r, c) - oracle(r, c));
    out.push_back(bounded("fock.heisenberg_oracle", std::sqrt(frob), 1e-8));

    // Real cosine phases must fail the same comparison.
    const Matrix cosine = std::cos(omega * kPi / 2.0) * l.a;
    const Matrix u2 = (1i * (kPi / 2.0) * h).exp();
    const Matrix oracle2 = u2 * l.a * u2.adjoint();
    double frob2 = 0.0;
    for (int r = 0; r < n_max; ++r)
        for (int c = 0; c < n_max; ++c) frob2 += std::norm(cosine(r, c) - oracle2(r, c));
    CheckResult counterexample{"fock.cosine_counterexample", std::sqrt(frob2) >= 0.5,
                               std::sqrt(frob2), 0.5,
                               "cos(omega t) phases must miss the unitary evolution"};
    out.push_back(counterexample);

    // Number conservation.
    const LadderPair lt = heisenberg_evolve(l, 1.3, 8.1);
    const Matrix dn = lt.a_dag * lt.a - l.a_dag * l.a;
    out.push_back(bounded("fock.number_conservation", dn.norm(), 1e-13));

    // Operator field equations, one and two modes.
    const CavitySpec one_mode{kPi, 2.0, 1.0, 1};
    const OperatorResidual r1 = operator_field_equation_residual(
        mode_spectrum(one_mode), FockSpec{8}, GridSpec::line_z(kPi, quick ? 9 : 33), 0.7);
    const CavitySpec two_mode{kPi, 2.0, 1.0, 2};
    const OperatorResidual r2 = operator_field_equation_residual(
        mode_spectrum(two_mode), FockSpec{4}, GridSpec::line_z(kPi, quick ? 9 : 17), 1.3);
    out.push_back(bounded("fock.operator_field_equations",
                          std::max({r1.r1_max, r1.r2_max, r2.r1_max, r2.r2_max}), 1e-12,
                          "single- and two-mode residual operators"));

    // Coherent state reproduces the classical solution.
    const ModeSet modes = mode_spectrum(one_mode);
    const Mode& mode = modes[0];
    const int n_coh = 16;
    const FockSpec spec{n_coh};
    const std::complex<double> gamma = 1.2 * std::exp(1i * (kPi / 5.0));
    const CVector state = coherent_state(gamma, n_coh);
    const double q0 = std::sqrt(2.0 / (mode.mass * mode.omega)) * gamma.real();
    const double p0 = std::sqrt(2.0 * mode.mass * mode.omega) * gamma.imag();
    const ModeState classical = state_from_initial(q0, p0, mode);
    const double scale = mode.amplitude * classical.amplitude;
    double coh_err = 0.0;
    for (double tt : {0.0, 0.63, 1.9}) {
        const ModeState now = oscillator_evolve(classical, mode, tt);
        for (double z : {0.31, 1.1, 2.2}) {
            const FieldOperators ops = field_operators(modes, spec, z, tt);
            const std::complex<double> expect = state.adjoint() * ops.u1 * state;
            coh_err = std::max(coh_err, std::abs(expect.real() -
                                                 mode.amplitude * now.q * std::sin(mode.k * z)) /
                                            scale);
        }
    }
    out.push_back(bounded("fock.coherent_classical", coh_err, 1e-6));
}

// ---------------------------------------------------------------------------
// lattice + kinetics + pairing

void check_lattice(std::vector<CheckResult>& out) {
    const ChainSpec spec{16, 1.0, 1.0, true};
    const auto modes = normal_modes(spec);
    double disp_err = 0.0;
    for (const NormalMode& m : modes)
        disp_err = std::max(disp_err,
                            std::abs(m.omega - 2.0 * std::abs(std::sin(m.k / 2.0))));
    out.push_back(bounded("lattice.dispersion", disp_err, 1e-9,
                          "N' = 16 chain vs closed-form 2 sqrt(a/m)|sin(k/2)|"));
    out.push_back(bounded("lattice.zero_mode", modes.back().omega, 1e-10));

    double sym_err = 0.0;
    for (int i = 0; i + 1 < 16; ++i)
        sym_err = std::max(sym_err, std::abs(modes[i].omega - modes[16 - 2 - i].omega));
    out.push_back(bounded("lattice.spectral_symmetry", sym_err, 1e-10));
}

void check_kinetics(std::vector<CheckResult>& out) {
    const BroadenedDelta delta{BroadenedDelta::Kind::gaussian, 0.05};

    double balance_err = 0.0;
    for (double n_q : {0.1, 1.0, 10.0}) {
        const double we = scattering_rate(1.0, 1.3, 0.9, 0.4, n_q, Branch::emission, delta);
        const double wa = scattering_rate(1.0, 1.3, 1.7, 0.4, n_q, Branch::absorption, delta);
        balance_err = std::max(balance_err,
                               std::abs(we / wa - (n_q + 1.0) / n_q) / ((n_q + 1.0) / n_q));
    }
    out.push_back(bounded("kinetics.detailed_balance", balance_err, 1e-14));
    const double w0 = scattering_rate(1.0, 1.0, 0.6, 0.4, 0.0, Branch::absorption, delta);
    out.push_back(bounded("kinetics.absorption_floor", w0, 0.0, "no phonons, no absorption"));

    // Matched grids agree with an inline brute-force count; incommensurate
    // rational grids produce nothing under exact matching.
    const int n_atoms = 8;
    const KGrid lattice = lattice_kgrid_exact(n_atoms);
    BandModel flat;
    flat.hopping = 0.0;
    ChannelQuery query;
    query.energy_tol = 0.5;
    query.b_max = 1;
    const auto omega_flat = [](double) { return 0.0; };
    const auto channels = enumerate_channels(lattice, lattice, flat, omega_flat, delta,
                                             OccupationModel::fixed(1.0), query);
    std::size_t counted = 0;
    for (std::size_t l = 0; l < lattice.size(); ++l)
        for (std::size_t m = 0; m < lattice.size(); ++m)
            for (std::size_t j = 0; j < lattice.size(); ++j)
                for (int sgn : {+1, -1})
                    for (int b = -1; b <= 1; ++b)
                        if (std::abs(lattice.values[l] - lattice.values[m] -
                                     sgn * lattice.values[j] - 2.0 * kPi * b) <= 1e-9)
                            ++counted;
    out.push_back(bounded("kinetics.channel_oracle",
                          std::abs(static_cast<double>(channels.size()) -
                                   static_cast<double>(counted)),
                          0.0, "brute-force tuple count equality"));

    ChannelQuery exact_query;
    exact_query.momentum_tol = 0.0;
    exact_query.energy_tol = 10.0;
    exact_query.b_max = 1;
    const auto matched =
        enumerate_channels(lattice, cavity_kgrid_exact(Rational(n_atoms, 2), 8), flat,
                           omega_flat, delta, OccupationModel::fixed(1.0), exact_query);
    const auto mismatched =
        enumerate_channels(lattice, cavity_kgrid_exact(Rational(17, 5), 8), flat, omega_flat,
                           delta, OccupationModel::fixed(1.0), exact_query);
    CheckResult dichotomy{"kinetics.commensurability_dichotomy",
                          !matched.empty() && mismatched.empty(),
                          static_cast<double>(mismatched.size()), 0.0,
                          "matched grids conduct, incommensurate grids do not"};
    out.push_back(dichotomy);

    const double flux = photon_flux(0.1, 1e10);
    const double oracle = 0.1 / (6.62607015e-34 * 1e10);
    out.push_back(bounded("kinetics.photon_flux", std::abs(flux - oracle) / oracle, 1e-12,
                          "0.1 W at 10 GHz"));
    CheckResult magnitude{"kinetics.photon_flux_magnitude",
                          flux > 0.5e22 && flux < 2.0e22, flux, 2.0e22,
                          "within a factor of two of 1e22 / s"};
    out.push_back(magnitude);
}

void check_pairing(std::vector<CheckResult>& out) {
    BandModel tb;
    tb.kind = BandModel::Kind::tightbinding;
    const std::vector<double> ks = lattice_kgrid(64);
    const double omega = 0.5, rho = 0.5;

    std::size_t misclassified = 0, oracle_window = 0;
    for (double k : ks)
        for (double q : ks) {
            const double de = band_energy(k, tb) - band_energy(k + q, tb);
            if (std::abs(de * de - omega * omega) < 1e-6 * omega * omega) continue;
            const double v = effective_interaction(band_energy(k, tb), band_energy(k + q, tb),
                                                   omega, 1.0);
            if ((v < 0.0) != (std::abs(de) < omega)) ++misclassified;
            if (std::abs(de) <= rho * omega) ++oracle_window;
        }
    out.push_back(bounded("pairing.sign_law", static_cast<double>(misclassified), 0.0,
                          "64-point tight-binding scan"));

    const auto scan = attractive_channels(
        tb, ks, ks, [&](double) { return omega; }, [](double) { return 1.0; }, rho);
    out.push_back(bounded("pairing.window_oracle",
                          std::abs(static_cast<double>(scan.entries.size()) -
                                   static_cast<double>(oracle_window)),
                          0.0, "kept-entry count equals the double-loop count"));
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    Uniform rng(options.seed);
    std::vector<CheckResult> results;
    check_field_kernel(results, rng, options.quick);
    check_duality(results, rng, options.quick);
    check_cavity(results, rng, options.quick);
    check_fock(results, options.quick);
    check_lattice(results);
    check_kinetics(results);
    check_pairing(results);
    return results;
}

std::string verify_report_csv(const std::vector<CheckResult>& results) {
    std::ostringstream out;
    out << "check,status,measured,threshold\n";
    for (const CheckResult& r : results)
        out << r.name << ',' << (r.pass ? "pass" : "fail") << ',' << format_double(r.measured)
            << ',' << format_double(r.threshold) << '\n';
    return out.str();
}

}  // namespace phonoscope
