#pragma once

#include <boost/rational.hpp>
#include <functional>
#include <optional>
#include <vector>

#include "phonoscope/cavity.hpp"
#include "phonoscope/pairing.hpp"

namespace phonoscope {

using Rational = boost::rational<long long>;

/// Regularized energy delta: gaussian or lorentzian of width sigma,
/// normalized to unit integral.
struct BroadenedDelta {
    enum class Kind { gaussian, lorentzian };
    Kind kind = Kind::gaussian;
    double sigma = 0.01;

    double operator()(double x) const;
};

/// Mean phonon number per mode: a fixed value or thermal Bose-Einstein
/// occupation at temperature T (k_B = 1).
struct OccupationModel {
    static OccupationModel fixed(double n);
    static OccupationModel thermal(double temperature);

    [[nodiscard]] double occupancy(double homega) const;

    bool is_thermal = false;
    double n_fixed = 0.0;
    double temperature = 0.0;
};

enum class Branch { emission, absorption };

/// One momentum-and-energy-conserving scattering channel with its
/// golden-rule rate.
struct ScatteringChannel {
    int l = 0, m = 0, j = 0;   // grid indices (1-based like the grids)
    long b_index = 0;          // b = 2 pi b_index
    Branch branch = Branch::emission;
    double k_l = 0.0, k_m = 0.0, q = 0.0, b = 0.0;
    double e_l = 0.0, e_m = 0.0, homega = 0.0;
    double rate = 0.0;
};

/// A k-grid that optionally carries exact representations k = pi * (p/q),
/// enabling exact-rational momentum matching.
struct KGrid {
    std::vector<double> values;
    std::vector<Rational> over_pi;  // empty when no exact form is known

    [[nodiscard]] bool has_exact() const {
        return !over_pi.empty() && over_pi.size() == values.size();
    }
    [[nodiscard]] std::size_t size() const { return values.size(); }
};

struct ChannelQuery {
    double m2 = 1.0;                     // |M|^2, constant
    std::function<double(double)> m2_of_q;  // optional per-q override
    double momentum_tol = 1e-9;          // 0 requests exact-rational matching
    double energy_tol = 1e-6;
    int b_max = 1;
    double hbar = 1.0;
    std::size_t tuple_cap = 10'000'000;
    int workers = 1;
};

/// W = (2 pi / hbar) |M|^2 delta(E_l - E_m -/+ hbar omega) [N + 1/2 +/- 1/2];
/// upper signs emission, lower signs absorption.
double scattering_rate(double m2, double e_l, double e_m, double omega_q, double n_q,
                       Branch branch, const BroadenedDelta& delta, double hbar = 1.0);

/// Brute-force search over (l, m, j, b, branch) tuples keeping channels that
/// satisfy quasiimpulse conservation k_l - k_m -/+ q_j = 2 pi b within
/// momentum_tol (exact rationals when momentum_tol = 0 and both grids carry
/// exact forms) and energy conservation within energy_tol.
std::vector<ScatteringChannel> enumerate_channels(const KGrid& lattice_k, const KGrid& phonon_k,
                                                  const BandModel& band,
                                                  const std::function<double(double)>& omega_of_q,
                                                  const BroadenedDelta& delta,
                                                  const OccupationModel& occupation,
                                                  const ChannelQuery& query);

/// Lattice k-grid 2 pi n / N' with exact forms attached.
KGrid lattice_kgrid_exact(int atom_count);

/// Cavity k-grid expressed in lattice units: k_alpha = alpha pi a / L.
std::vector<double> cavity_kgrid(const CavitySpec& spec, int mode_count, double lattice_constant);

/// Exact cavity k-grid for rational L/a: k_alpha / pi = alpha / (L/a).
KGrid cavity_kgrid_exact(const Rational& length_over_a, int mode_count);

/// Photons per second at the given power and frequency: P / (h f), SI.
double photon_flux(double power_watts, double frequency_hz);

}  // namespace phonoscope
