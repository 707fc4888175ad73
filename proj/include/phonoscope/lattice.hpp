#pragma once

#include <Eigen/Dense>
#include <vector>

namespace phonoscope {

/// 1D monatomic chain: N' atoms of mass m coupled by nearest-neighbour
/// springs. `force_row` optionally replaces the single spring constant with
/// couplings by neighbour distance 1..d (force constants, same units).
struct ChainSpec {
    int atom_count = 0;
    double mass = 1.0;
    double spring = 1.0;
    bool periodic = true;
    std::vector<double> force_row;  // empty means {spring}
};

/// One normal mode: wavevector label (lattice-constant units), frequency,
/// and the orthonormal polarization vector over atom sites.
struct NormalMode {
    double k = 0.0;
    double omega = 0.0;
    Eigen::VectorXcd polarization;
};

/// Dynamical matrix D with row sums zero (acoustic sum rule); positive
/// semidefinite so that omega^2 = eigenvalue >= 0.
Eigen::MatrixXd dynamical_matrix(const ChainSpec& spec);

/// Eigen-decomposition of the chain. Periodic chains are labeled by the
/// k-grid k_n = 2 pi n / N' (sorted by k); open chains by standing-wave
/// labels k_j = pi j / N'.
std::vector<NormalMode> normal_modes(const ChainSpec& spec);

/// The discrete lattice k-grid: exactly N' values 2 pi n / N', n = 1..N'.
std::vector<double> lattice_kgrid(int atom_count);

}  // namespace phonoscope
