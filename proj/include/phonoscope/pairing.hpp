#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace phonoscope {

/// Toy electron dispersion, measured relative to the Fermi energy.
struct BandModel {
    enum class Kind { tightbinding, parabolic, table };

    Kind kind = Kind::tightbinding;
    double hopping = 1.0;    // t
    double mu = 0.0;         // chemical potential
    double eff_mass = 1.0;   // m* (parabolic)
    std::vector<std::pair<double, double>> table;  // (k, eps), exact lookup only

    /// Parses "tightbinding:t=1,mu=0", "parabolic:mstar=1,mu=0" or "table:<csv path>".
    static BandModel parse(const std::string& text);
};

/// eps(k): tightbinding -2 t cos(k) - mu; parabolic k^2/(2 m*) - mu;
/// table: exact grid lookup (k canonicalized to [0, 2 pi)), no interpolation.
double band_energy(double k, const BandModel& band);

/// Thrown when the interaction denominator sits inside the pole guard.
struct PoleError : std::domain_error {
    double delta_eps;
    double homega;
    PoleError(double de, double hw)
        : std::domain_error("effective_interaction: |delta_eps| at the phonon-energy pole"),
          delta_eps(de), homega(hw) {}
};

/// Virtual-phonon-exchange coefficient
///   V_eff = hbar omega |M|^2 / [(eps_k - eps_kq)^2 - (hbar omega)^2],
/// negative (attractive) exactly when |delta eps| < hbar omega.
double effective_interaction(double eps_k, double eps_kq, double omega_q, double m2,
                             double hbar = 1.0, double pole_guard = 1e-6);

struct InteractionEntry {
    double k = 0.0;
    double k_prime = 0.0;  // k + q bookkeeping
    double q = 0.0;
    double delta_eps = 0.0;
    double v_eff = 0.0;
    bool attractive = false;
    bool pole = false;
    int spin_a = 1;  // carried labels; the coefficient is spin-independent
    int spin_b = 1;
};

struct AttractiveScan {
    std::vector<InteractionEntry> entries;  // sorted by v_eff ascending
    std::size_t scanned = 0;
    std::size_t attractive_count = 0;       // over all scanned pairs
    double attractive_fraction = 0.0;
    double min_v_eff = 0.0;
    std::size_t pole_hits = 0;
};

/// Scans all (k, q) pairs, keeping the significant window |delta eps| <=
/// rho * hbar omega_q. Pole-guard hits are flagged entries, never fatal.
AttractiveScan attractive_channels(const BandModel& band, const std::vector<double>& k_grid,
                                   const std::vector<double>& q_grid,
                                   const std::function<double(double)>& omega_of_q,
                                   const std::function<double(double)>& m2_of_q, double rho,
                                   double hbar = 1.0, double pole_guard = 1e-6,
                                   int workers = 1);

}  // namespace phonoscope
