#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "phonoscope/cavity.hpp"
#include "phonoscope/grid.hpp"

namespace phonoscope {

using Matrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Truncated number-basis parameters: occupation runs 0..n_max per mode
/// (basis dimension n_max + 1). Multimode tensor products are capped at
/// `dimension_cap` total dimension.
struct FockSpec {
    int n_max = 1;
    double hbar = 1.0;
    int dimension_cap = 4096;
};

/// Dense annihilation/creation pair on the truncated basis.
/// a|n> = sqrt(n)|n-1>, a_dag is the conjugate transpose.
struct LadderPair {
    Matrix a;
    Matrix a_dag;
};

/// Hermitian position/momentum pair built from a ladder pair.
struct QPPair {
    Matrix q;
    Matrix p;
};

struct OperatorSnapshot {
    Matrix matrix;
    std::string label;
    double time = 0.0;
};

/// Matrix-valued field samples at one (z, t).
struct FieldOperators {
    Matrix u1;  // x-component of the first field
    Matrix u2;  // y-component of the second field
};

/// Max Frobenius norms of the two coupled-equation residual operators over
/// a grid, restricted to the faithful (occ <= n_max - 1) block.
struct OperatorResidual {
    double r1_max = 0.0;
    double r2_max = 0.0;
};

LadderPair build_ladder(const FockSpec& spec);

/// q = sqrt(hbar/(2 m omega)) (a_dag + a), p = i sqrt(hbar m omega / 2) (a_dag - a).
QPPair position_momentum_ops(const LadderPair& ladder, double mass, double omega,
                             double hbar = 1.0);

/// Free Heisenberg evolution: a(t) = e^{-i omega t} a, a_dag(t) = e^{+i omega t} a_dag.
LadderPair heisenberg_evolve(const LadderPair& ladder, double omega, double t);

/// Field operators at (z, t):
///   U1 =   sum_alpha sqrt(hbar omega_alpha / V) (a_dag_alpha(t) + a_alpha(t)) sin(k_alpha z)
///   U2 = i sum_alpha sqrt(hbar omega_alpha / V) (a_dag_alpha(t) - a_alpha(t)) cos(k_alpha z)
/// Multimode sets act on the tensor-product space.
FieldOperators field_operators(const ModeSet& modes, const FockSpec& spec, double z, double t);

/// Evaluates curl U1 + dU2/dt and curl U2 - dU1/dt as matrix-valued fields
/// over a 1D z-grid (spatial derivative analytic on the mode profiles, time
/// derivative from the Heisenberg phases).
OperatorResidual operator_field_equation_residual(const ModeSet& modes, const FockSpec& spec,
                                                  const GridSpec& grid, double t);

/// Embeds a single-mode operator as identity (x) ... (x) op (x) ... (x) identity.
Matrix embed_mode_operator(const Matrix& op, int mode_index, int mode_count);

/// Kronecker product, row-major convention (first factor is the slow index).
Matrix kron(const Matrix& a, const Matrix& b);

/// Normalized coherent state truncated to the basis, a-eigenstate up to
/// truncation error: |gamma|^2 should stay well below n_max.
CVector coherent_state(std::complex<double> gamma, int n_max);

/// Indices of the faithful block: per-mode occupations all <= n_max - 1.
std::vector<int> faithful_block(int n_max, int mode_count);

}  // namespace phonoscope
