#include "phonoscope/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace phonoscope {

namespace {

constexpr double kPi = std::numbers::pi;

void check_spec(const ChainSpec& spec) {
    if (spec.atom_count < 3) throw std::invalid_argument("ChainSpec: need at least 3 atoms");
    if (spec.mass <= 0.0) throw std::invalid_argument("ChainSpec: mass must be positive");
    if (spec.force_row.empty()) {
        if (spec.spring <= 0.0) throw std::invalid_argument("ChainSpec: spring must be positive");
    } else {
        for (double a : spec.force_row)
            if (a < 0.0) throw std::invalid_argument("ChainSpec: force row entries must be >= 0");
        if (static_cast<int>(spec.force_row.size()) >= spec.atom_count)
            throw std::invalid_argument("ChainSpec: force row longer than the chain");
    }
}

std::vector<double> effective_row(const ChainSpec& spec) {
    if (!spec.force_row.empty()) return spec.force_row;
    return {spec.spring};
}

}  // namespace

Eigen::MatrixXd dynamical_matrix(const ChainSpec& spec) {
    check_spec(spec);
    const int n = spec.atom_count;
    const std::vector<double> row = effective_row(spec);
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);

    for (int i = 0; i < n; ++i) {
        for (int dist = 1; dist <= static_cast<int>(row.size()); ++dist) {
            const double coupling = row[dist - 1] / spec.mass;
            if (coupling == 0.0) continue;
            for (int sign : {-1, +1}) {
                int j = i + sign * dist;
                if (spec.periodic) {
                    j = ((j % n) + n) % n;
                } else if (j < 0 || j >= n) {
                    continue;
                }
                d(i, j) -= coupling;
                d(i, i) += coupling;  // row sum stays exactly zero
            }
        }
    }
    return d;
}

std::vector<double> lattice_kgrid(int atom_count) {
    if (atom_count < 1) throw std::invalid_argument("lattice_kgrid: atom count must be >= 1");
    std::vector<double> ks;
    ks.reserve(atom_count);
    for (int n = 1; n <= atom_count; ++n) ks.push_back(2.0 * kPi * n / atom_count);
    return ks;
}

std::vector<NormalMode> normal_modes(const ChainSpec& spec) {
    const Eigen::MatrixXd d = dynamical_matrix(spec);
    const int n = spec.atom_count;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(d);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("normal_modes: eigensolver failed");
    const Eigen::VectorXd lambda = solver.eigenvalues();  // ascending

    std::vector<NormalMode> modes(n);

    if (spec.periodic) {
        // Plane waves diagonalize any circulant dynamical matrix; use their
        // Rayleigh quotients to attach each solver eigenvalue to a k label.
        const std::vector<double> kgrid = lattice_kgrid(n);
        std::vector<double> rayleigh(n);
        std::vector<Eigen::VectorXcd> waves(n);
        for (int idx = 0; idx < n; ++idx) {
            Eigen::VectorXcd v(n);
            for (int site = 0; site < n; ++site) {
                const double arg = kgrid[idx] * site;
                v(site) = std::complex<double>(std::cos(arg), std::sin(arg));
            }
            v /= std::sqrt(static_cast<double>(n));
            waves[idx] = v;
            rayleigh[idx] = (v.adjoint() * d * v)(0, 0).real();
        }

        // Stable pairing: sort k labels by Rayleigh value (ties keep k order)
        // and walk the ascending solver spectrum in lockstep. The Rayleigh
        // values are the exact circulant eigenvalues (the k = 2 pi row-sum
        // mode is exactly zero), so they carry omega; the solver spectrum
        // cross-checks them.
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return rayleigh[a] < rayleigh[b]; });
        for (int pos = 0; pos < n; ++pos) {
            const int idx = order[pos];
            if (std::abs(rayleigh[idx] - lambda(pos)) > 1e-8 * std::max(1.0, std::abs(lambda(pos))))
                throw std::runtime_error("normal_modes: eigensolver disagrees with plane waves");
            modes[idx].k = kgrid[idx];
            modes[idx].omega = std::sqrt(std::max(rayleigh[idx], 0.0));
            modes[idx].polarization = waves[idx];
        }
    } else {
        // Open chain: ascending spectrum with standing-wave labels.
        for (int j = 0; j < n; ++j) {
            modes[j].k = kPi * j / n;
            modes[j].omega = std::sqrt(std::max(lambda(j), 0.0));
            modes[j].polarization = solver.eigenvectors().col(j).cast<std::complex<double>>();
        }
    }
    return modes;
}

}  // namespace phonoscope
