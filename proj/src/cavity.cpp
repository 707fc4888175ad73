#include "phonoscope/cavity.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace phonoscope {

namespace {

constexpr double kPi = std::numbers::pi;

// Mode profile sin(alpha*pi*frac) with frac = z/L. The walls are exact
// zeros of every integer mode, so they are pinned rather than rounded.
double mode_sin(int alpha, double frac) {
    if (frac == 0.0 || frac == 1.0) return 0.0;
    return std::sin(kPi * alpha * frac);
}

double mode_cos(int alpha, double frac) { return std::cos(kPi * alpha * frac); }

void check_cavity_grid(const GridSpec& grid, const CavitySpec& spec) {
    if (grid.active(0) || grid.active(1) || !grid.active(2))
        throw std::invalid_argument("cavity synthesis: grid must be a 1D z-line");
    const double L = grid.extent(2);
    if (std::abs(L - spec.length) > 1e-9 * std::max(1.0, spec.length))
        throw std::invalid_argument("cavity synthesis: grid extent differs from cavity length");
}

void check_states(const ModeSet& modes, const std::vector<ModeState>& states) {
    if (states.size() != modes.size())
        throw std::invalid_argument("cavity synthesis: one state per mode required");
}

}  // namespace

ModeSet mode_spectrum(const CavitySpec& spec, const std::vector<double>& masses) {
    if (spec.length <= 0.0 || spec.volume <= 0.0 || spec.sound_speed <= 0.0)
        throw std::invalid_argument("mode_spectrum: L, V, c must be positive");
    if (spec.mode_count < 1)
        throw std::invalid_argument("mode_spectrum: need at least one mode");
    if (!masses.empty() && masses.size() != 1 &&
        masses.size() != static_cast<std::size_t>(spec.mode_count))
        throw std::invalid_argument("mode_spectrum: mass list must match mode count");

    std::vector<Mode> modes;
    modes.reserve(spec.mode_count);
    for (int alpha = 1; alpha <= spec.mode_count; ++alpha) {
        double m = 1.0;
        if (masses.size() == 1) m = masses[0];
        else if (!masses.empty()) m = masses[alpha - 1];
        if (m <= 0.0) throw std::invalid_argument("mode_spectrum: masses must be positive");

        Mode mode;
        mode.index = alpha;
        mode.k = alpha * kPi / spec.length;
        mode.omega = alpha * kPi * spec.sound_speed / spec.length;
        mode.mass = m;
        mode.amplitude = std::sqrt(2.0 * mode.omega * mode.omega * m / spec.volume);
        modes.push_back(mode);
    }
    return {spec, std::move(modes)};
}

ModeState state_from_initial(double q0, double p0, const Mode& mode) {
    const double v = p0 / (mode.mass * mode.omega);  // dq/dt / omega
    ModeState s;
    s.q = q0;
    s.p = p0;
    s.amplitude = std::hypot(q0, v);
    s.phase = (s.amplitude == 0.0) ? 0.0 : std::atan2(-v, q0);
    return s;
}

ModeState state_from_phase(double amplitude, double phase, const Mode& mode) {
    ModeState s;
    s.amplitude = amplitude;
    s.phase = phase;
    s.q = amplitude * std::cos(phase);
    s.p = -mode.mass * mode.omega * amplitude * std::sin(phase);
    return s;
}

ModeState oscillator_evolve(const ModeState& state0, const Mode& mode, double t) {
    if (!std::isfinite(t)) throw std::invalid_argument("oscillator_evolve: non-finite time");
    if (t == 0.0) return state0;
    ModeState s = state0;
    const double arg = mode.omega * t + state0.phase;
    s.q = state0.amplitude * std::cos(arg);
    s.p = -mode.mass * mode.omega * state0.amplitude * std::sin(arg);
    return s;
}

SecondSolutionAmplitudes second_solution_amplitudes(const ModeState& state0,
                                                    const Mode& mode, double t) {
    const double B = state0.amplitude;
    const double phi = state0.phase;
    const double wt = mode.omega * t;
    SecondSolutionAmplitudes a;
    a.q_prime = B * (std::sin(wt + phi) - std::sin(phi));
    a.q_double_prime = B * (std::cos(phi) - std::cos(wt + phi)) - wt * B * std::sin(phi);
    return a;
}

SynthesizedField synthesize_first_solution(const ModeSet& modes,
                                           const std::vector<ModeState>& states,
                                           const GridSpec& grid, double t) {
    check_cavity_grid(grid, modes.spec());
    check_states(modes, states);

    const int nz = grid.points(2);
    SynthesizedField out{VectorFieldPair(grid, t), VectorField(grid), VectorField(grid)};

    for (int iz = 0; iz < nz; ++iz) {
        const double frac = static_cast<double>(iz) / (nz - 1);
        const std::size_t idx = grid.index(0, 0, iz);
        double u1x = 0.0, u2y = 0.0, d1x = 0.0, d2y = 0.0;
        for (std::size_t i = 0; i < modes.size(); ++i) {
            const Mode& mode = modes[i];
            const ModeState now = oscillator_evolve(states[i], mode, t);
            const double qdot = now.p / mode.mass;
            const double qddot = -mode.omega * mode.omega * now.q;
            const double s = mode.amplitude * mode_sin(mode.index, frac);
            const double c = mode.amplitude * mode_cos(mode.index, frac);
            u1x += s * now.q;
            u2y += c * qdot / mode.k;
            d1x += s * qdot;
            d2y += c * qddot / mode.k;
        }
        out.fields.u1[idx] = {u1x, 0.0, 0.0};
        out.fields.u2[idx] = {0.0, u2y, 0.0};
        out.du1_dt.values[idx] = {d1x, 0.0, 0.0};
        out.du2_dt.values[idx] = {0.0, d2y, 0.0};
    }
    return out;
}

SynthesizedField synthesize_second_solution(const ModeSet& modes,
                                            const std::vector<ModeState>& states,
                                            const GridSpec& grid, double t) {
    check_cavity_grid(grid, modes.spec());
    check_states(modes, states);

    const int nz = grid.points(2);
    SynthesizedField out{VectorFieldPair(grid, t), VectorField(grid), VectorField(grid)};

    for (int iz = 0; iz < nz; ++iz) {
        const double frac = static_cast<double>(iz) / (nz - 1);
        const std::size_t idx = grid.index(0, 0, iz);
        double u1x = 0.0, u2y = 0.0, d1x = 0.0, d2y = 0.0;
        for (std::size_t i = 0; i < modes.size(); ++i) {
            const Mode& mode = modes[i];
            const ModeState now = oscillator_evolve(states[i], mode, t);
            const auto amp = second_solution_amplitudes(states[i], mode, t);
            const double s = mode.amplitude * mode_sin(mode.index, frac);
            const double c = mode.amplitude * mode_cos(mode.index, frac);
            u1x += s * amp.q_double_prime;
            u2y -= c * amp.q_prime;
            d1x += s * mode.omega * amp.q_prime;  // d(q'')/dt = omega q'
            d2y -= c * mode.omega * now.q;        // d(q')/dt  = omega q
        }
        out.fields.u1[idx] = {u1x, 0.0, 0.0};
        out.fields.u2[idx] = {0.0, u2y, 0.0};
        out.du1_dt.values[idx] = {d1x, 0.0, 0.0};
        out.du2_dt.values[idx] = {0.0, d2y, 0.0};
    }
    return out;
}

double field_energy(const VectorFieldPair& fields, const CavitySpec& spec) {
    const GridSpec& g = fields.grid;
    if (g.active(0) || g.active(1) || !g.active(2))
        throw std::invalid_argument("field_energy: grid must be a 1D z-line");
    const double area = spec.volume / spec.length;  // transverse cross-section
    double acc = 0.0;
    for (int iz = 0; iz < g.points(2); ++iz) {
        const std::size_t idx = g.index(0, 0, iz);
        acc += g.quad_weight(0, 0, iz) * (fields.u1[idx].norm2() + fields.u2[idx].norm2());
    }
    return 0.5 * area * acc;
}

double modal_energy(const std::vector<ModeState>& states, const ModeSet& modes) {
    check_states(modes, states);
    double acc = 0.0;
    for (std::size_t i = 0; i < modes.size(); ++i) {
        const Mode& m = modes[i];
        acc += m.mass * m.omega * m.omega * states[i].q * states[i].q +
               states[i].p * states[i].p / m.mass;
    }
    return 0.5 * acc;
}

bool resolves_modes(const GridSpec& grid, const ModeSet& modes,
                    double min_points_per_wavelength) {
    if (modes.size() == 0 || !grid.active(2)) return false;
    double k_max = 0.0;
    for (const Mode& m : modes) k_max = std::max(k_max, m.k);
    const double shortest_wavelength = 2.0 * kPi / k_max;
    return shortest_wavelength / grid.spacing(2) >= min_points_per_wavelength;
}

std::complex<double> complex_oscillator(std::complex<double> c1, std::complex<double> c2,
                                        double omega, double t) {
    const std::complex<double> iwt(0.0, omega * t);
    return c1 * std::exp(iwt) + c2 * std::exp(-iwt);
}

}  // namespace phonoscope
