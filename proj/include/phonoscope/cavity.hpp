#pragma once

#include <complex>
#include <vector>

#include "phonoscope/grid.hpp"

namespace phonoscope {

/// Rectangular cavity: length along z, total volume, sound speed, and the
/// number of retained standing-wave modes.
struct CavitySpec {
    double length = 0.0;
    double volume = 0.0;
    double sound_speed = 1.0;
    int mode_count = 0;
};

/// Per-mode derived data: k = alpha*pi/L, omega = alpha*pi*c/L, the mass
/// parameter, and the field amplitude A = sqrt(2 omega^2 m / V).
struct Mode {
    int index = 0;  // alpha, 1-based
    double k = 0.0;
    double omega = 0.0;
    double mass = 1.0;
    double amplitude = 0.0;
};

class ModeSet {
public:
    ModeSet() = default;
    ModeSet(CavitySpec spec, std::vector<Mode> modes)
        : spec_(spec), modes_(std::move(modes)) {}

    [[nodiscard]] const CavitySpec& spec() const { return spec_; }
    [[nodiscard]] std::size_t size() const { return modes_.size(); }
    [[nodiscard]] const Mode& operator[](std::size_t i) const { return modes_[i]; }
    [[nodiscard]] auto begin() const { return modes_.begin(); }
    [[nodiscard]] auto end() const { return modes_.end(); }

private:
    CavitySpec spec_;
    std::vector<Mode> modes_;
};

/// Canonical pair of one modal oscillator plus the (B, phi) constants of its
/// trajectory q(t) = B cos(omega t + phi), p(t) = m dq/dt.
struct ModeState {
    double q = 0.0;
    double p = 0.0;
    double amplitude = 0.0;  // B
    double phase = 0.0;      // phi
};

/// A synthesized field pair together with its analytic time derivatives,
/// ready for residual checking without finite differencing in time.
struct SynthesizedField {
    VectorFieldPair fields;
    VectorField du1_dt;
    VectorField du2_dt;
};

/// Running integrals of the modal amplitude used by the second solution:
///   q'(t)  = omega * integral_0^t q
///   q''(t) = omega * integral_0^t q'
struct SecondSolutionAmplitudes {
    double q_prime = 0.0;
    double q_double_prime = 0.0;
};

/// Builds the mode spectrum. `masses` may be empty (all 1), hold a single
/// value (broadcast), or one value per mode.
ModeSet mode_spectrum(const CavitySpec& spec, const std::vector<double>& masses = {});

ModeState state_from_initial(double q0, double p0, const Mode& mode);
ModeState state_from_phase(double amplitude, double phase, const Mode& mode);

/// Closed-form free evolution to absolute time t (no integrator).
ModeState oscillator_evolve(const ModeState& state0, const Mode& mode, double t);

SecondSolutionAmplitudes second_solution_amplitudes(const ModeState& state0,
                                                    const Mode& mode, double t);

/// Standing-wave solution: U1 = sum A q sin(kz) e_x,
/// U2 = sum A (dq/dt)/k cos(kz) e_y. Grid must be a 1D z-line over [0, L].
SynthesizedField synthesize_first_solution(const ModeSet& modes,
                                           const std::vector<ModeState>& states,
                                           const GridSpec& grid, double t);

/// Integral-form solution: U1 = sum A q'' sin(kz) e_x,
/// U2 = -sum A q' cos(kz) e_y with q', q'' as above.
SynthesizedField synthesize_second_solution(const ModeSet& modes,
                                            const std::vector<ModeState>& states,
                                            const GridSpec& grid, double t);

/// Field-route Hamiltonian (1/2) integral (|U1|^2 + |U2|^2) dV over the
/// 1D grid with transverse area V/L.
double field_energy(const VectorFieldPair& fields, const CavitySpec& spec);

/// Modal-route Hamiltonian (1/2) sum [m omega^2 q^2 + p^2/m].
double modal_energy(const std::vector<ModeState>& states, const ModeSet& modes);

/// True when the grid resolves the shortest retained wavelength with at
/// least `min_points_per_wavelength` samples.
bool resolves_modes(const GridSpec& grid, const ModeSet& modes,
                    double min_points_per_wavelength = 8.0);

/// General complex oscillator solution C1 e^{i omega t} + C2 e^{-i omega t}.
std::complex<double> complex_oscillator(std::complex<double> c1, std::complex<double> c2,
                                        double omega, double t);

}  // namespace phonoscope
