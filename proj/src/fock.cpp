#include "phonoscope/fock.hpp"

#include <cmath>
#include <stdexcept>

namespace phonoscope {

using namespace std::complex_literals;

namespace {

void check_spec(const FockSpec& spec) {
    if (spec.n_max < 1) throw std::invalid_argument("FockSpec: n_max must be >= 1");
    if (spec.hbar <= 0.0) throw std::invalid_argument("FockSpec: hbar must be positive");
}

long tensor_dimension(int dim, int mode_count) {
    long total = 1;
    for (int i = 0; i < mode_count; ++i) {
        if (total > (1L << 40)) return total;  // already beyond any sane cap
        total *= dim;
    }
    return total;
}

}  // namespace

LadderPair build_ladder(const FockSpec& spec) {
    check_spec(spec);
    const int dim = spec.n_max + 1;
    Matrix a = Matrix::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return {a, a.adjoint()};
}

QPPair position_momentum_ops(const LadderPair& ladder, double mass, double omega,
                             double hbar) {
    if (mass <= 0.0 || omega <= 0.0 || hbar <= 0.0)
        throw std::invalid_argument("position_momentum_ops: mass, omega, hbar must be positive");
    const double cq = std::sqrt(hbar / (2.0 * mass * omega));
    const double cp = std::sqrt(hbar * mass * omega / 2.0);
    QPPair out;
    out.q = cq * (ladder.a_dag + ladder.a);
    out.p = 1i * cp * (ladder.a_dag - ladder.a);
    return out;
}

LadderPair heisenberg_evolve(const LadderPair& ladder, double omega, double t) {
    if (!std::isfinite(t)) throw std::invalid_argument("heisenberg_evolve: non-finite time");
    const std::complex<double> phase = std::exp(-1i * omega * t);
    return {phase * ladder.a, std::conj(phase) * ladder.a_dag};
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Matrix embed_mode_operator(const Matrix& op, int mode_index, int mode_count) {
    if (mode_index < 0 || mode_index >= mode_count)
        throw std::invalid_argument("embed_mode_operator: mode index out of range");
    Matrix out = Matrix::Identity(1, 1);
    for (int i = 0; i < mode_count; ++i) {
        if (i == mode_index)
            out = kron(out, op);
        else
            out = kron(out, Matrix::Identity(op.rows(), op.cols()));
    }
    return out;
}

namespace {

struct ModeOperators {
    std::vector<Matrix> a;      // evolved annihilators, embedded
    std::vector<Matrix> a_dag;  // evolved creators, embedded
};

ModeOperators evolved_mode_operators(const ModeSet& modes, const FockSpec& spec, double t) {
    check_spec(spec);
    const int count = static_cast<int>(modes.size());
    if (count < 1) throw std::invalid_argument("field_operators: empty mode set");
    const int dim = spec.n_max + 1;
    if (tensor_dimension(dim, count) > spec.dimension_cap)
        throw std::invalid_argument("field_operators: tensor dimension exceeds cap");

    const LadderPair base = build_ladder(spec);
    ModeOperators ops;
    for (int i = 0; i < count; ++i) {
        const LadderPair evolved = heisenberg_evolve(base, modes[i].omega, t);
        ops.a.push_back(embed_mode_operator(evolved.a, i, count));
        ops.a_dag.push_back(embed_mode_operator(evolved.a_dag, i, count));
    }
    return ops;
}

}  // namespace

FieldOperators field_operators(const ModeSet& modes, const FockSpec& spec, double z, double t) {
    const double L = modes.spec().length;
    if (z < 0.0 || z > L * (1.0 + 1e-12))
        throw std::invalid_argument("field_operators: z outside [0, L]");

    const ModeOperators ops = evolved_mode_operators(modes, spec, t);
    const double V = modes.spec().volume;
    const Eigen::Index dim = ops.a[0].rows();

    FieldOperators out{Matrix::Zero(dim, dim), Matrix::Zero(dim, dim)};
    for (std::size_t i = 0; i < modes.size(); ++i) {
        const Mode& m = modes[i];
        const double c = std::sqrt(spec.hbar * m.omega / V);
        out.u1 += c * std::sin(m.k * z) * (ops.a_dag[i] + ops.a[i]);
        out.u2 += 1i * c * std::cos(m.k * z) * (ops.a_dag[i] - ops.a[i]);
    }
    return out;
}

std::vector<int> faithful_block(int n_max, int mode_count) {
    const int dim = n_max + 1;
    const long total = tensor_dimension(dim, mode_count);
    std::vector<int> keep;
    for (long idx = 0; idx < total; ++idx) {
        long rest = idx;
        bool ok = true;
        for (int m = 0; m < mode_count; ++m) {
            const int occ = static_cast<int>(rest % dim);
            rest /= dim;
            if (occ > n_max - 1) { ok = false; break; }
        }
        if (ok) keep.push_back(static_cast<int>(idx));
    }
    return keep;
}

namespace {

double block_frobenius(const Matrix& m, const std::vector<int>& keep) {
    double acc = 0.0;
    for (int r : keep)
        for (int c : keep) acc += std::norm(m(r, c));
    return std::sqrt(acc);
}

}  // namespace

OperatorResidual operator_field_equation_residual(const ModeSet& modes, const FockSpec& spec,
                                                  const GridSpec& grid, double t) {
    if (grid.active(0) || grid.active(1) || !grid.active(2))
        throw std::invalid_argument("operator_field_equation_residual: grid must be a 1D z-line");

    const ModeOperators ops = evolved_mode_operators(modes, spec, t);
    const double V = modes.spec().volume;
    const Eigen::Index dim = ops.a[0].rows();
    const std::vector<int> keep = faithful_block(spec.n_max, static_cast<int>(modes.size()));

    OperatorResidual out;
    for (int iz = 0; iz < grid.points(2); ++iz) {
        const double z = grid.point(0, 0, iz).z;
        Matrix r1 = Matrix::Zero(dim, dim);
        Matrix r2 = Matrix::Zero(dim, dim);
        for (std::size_t i = 0; i < modes.size(); ++i) {
            const Mode& m = modes[i];
            const double c = std::sqrt(spec.hbar * m.omega / V);
            const Matrix plus = ops.a_dag[i] + ops.a[i];    // a_dag(t) + a(t)
            const Matrix minus = ops.a_dag[i] - ops.a[i];   // a_dag(t) - a(t)
            // d/dt a(t) = -i omega a(t); d/dt a_dag(t) = +i omega a_dag(t)
            const Matrix dplus_dt = 1i * m.omega * minus;
            const Matrix dminus_dt = 1i * m.omega * plus;

            // curl U1 has only a y-component: d/dz of the sin profile.
            r1 += c * m.k * std::cos(m.k * z) * plus          // (curl U1)_y
                  + 1i * c * std::cos(m.k * z) * dminus_dt;   // (dU2/dt)_y
            // curl U2 has only an x-component: -d/dz of the cos profile.
            r2 += 1i * c * m.k * std::sin(m.k * z) * minus    // (curl U2)_x
                  - c * std::sin(m.k * z) * dplus_dt;         // -(dU1/dt)_x
        }
        out.r1_max = std::max(out.r1_max, block_frobenius(r1, keep));
        out.r2_max = std::max(out.r2_max, block_frobenius(r2, keep));
    }
    return out;
}

CVector coherent_state(std::complex<double> gamma, int n_max) {
    if (n_max < 1) throw std::invalid_argument("coherent_state: n_max must be >= 1");
    CVector v(n_max + 1);
    std::complex<double> term = 1.0;  // gamma^n / sqrt(n!)
    v(0) = term;
    for (int n = 1; n <= n_max; ++n) {
        term *= gamma / std::sqrt(static_cast<double>(n));
        v(n) = term;
    }
    v.normalize();
    return v;
}

}  // namespace phonoscope
