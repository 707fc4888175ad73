#include "phonoscope/kinetics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include "phonoscope/parallel.hpp"

namespace phonoscope {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kPlanckSI = 6.62607015e-34;  // J s, exact

}  // namespace

double BroadenedDelta::operator()(double x) const {
    if (sigma <= 0.0) throw std::invalid_argument("BroadenedDelta: sigma must be positive");
    switch (kind) {
        case Kind::gaussian: {
            const double u = x / sigma;
            return std::exp(-0.5 * u * u) / (sigma * std::sqrt(kTwoPi));
        }
        case Kind::lorentzian:
            return (sigma / kPi) / (x * x + sigma * sigma);
    }
    throw std::logic_error("BroadenedDelta: unreachable");
}

OccupationModel OccupationModel::fixed(double n) {
    if (n < 0.0) throw std::invalid_argument("OccupationModel: occupation must be >= 0");
    OccupationModel m;
    m.n_fixed = n;
    return m;
}

OccupationModel OccupationModel::thermal(double temperature) {
    if (temperature <= 0.0)
        throw std::invalid_argument("OccupationModel: temperature must be positive");
    OccupationModel m;
    m.is_thermal = true;
    m.temperature = temperature;
    return m;
}

double OccupationModel::occupancy(double homega) const {
    if (!is_thermal) return n_fixed;
    return 1.0 / std::expm1(homega / temperature);
}

double scattering_rate(double m2, double e_l, double e_m, double omega_q, double n_q,
                       Branch branch, const BroadenedDelta& delta, double hbar) {
    if (n_q < 0.0) throw std::invalid_argument("scattering_rate: occupation must be >= 0");
    const double homega = hbar * omega_q;
    const double arg = branch == Branch::emission ? e_l - e_m - homega : e_l - e_m + homega;
    const double occupation = branch == Branch::emission ? n_q + 1.0 : n_q;
    return (kTwoPi / hbar) * m2 * delta(arg) * occupation;
}

KGrid lattice_kgrid_exact(int atom_count) {
    if (atom_count < 1) throw std::invalid_argument("lattice_kgrid_exact: atom count must be >= 1");
    KGrid grid;
    for (int n = 1; n <= atom_count; ++n) {
        grid.over_pi.emplace_back(2LL * n, static_cast<long long>(atom_count));
        grid.values.push_back(kTwoPi * n / atom_count);
    }
    return grid;
}

std::vector<double> cavity_kgrid(const CavitySpec& spec, int mode_count,
                                 double lattice_constant) {
    if (lattice_constant <= 0.0 || spec.length <= 0.0)
        throw std::invalid_argument("cavity_kgrid: lattice constant and L must be positive");
    if (mode_count < 1) throw std::invalid_argument("cavity_kgrid: mode count must be >= 1");
    std::vector<double> ks;
    for (int alpha = 1; alpha <= mode_count; ++alpha)
        ks.push_back(alpha * kPi * lattice_constant / spec.length);
    return ks;
}

KGrid cavity_kgrid_exact(const Rational& length_over_a, int mode_count) {
    if (length_over_a <= Rational(0))
        throw std::invalid_argument("cavity_kgrid_exact: L/a must be positive");
    if (mode_count < 1) throw std::invalid_argument("cavity_kgrid_exact: mode count must be >= 1");
    KGrid grid;
    for (int alpha = 1; alpha <= mode_count; ++alpha) {
        const Rational over_pi = Rational(alpha) / length_over_a;
        grid.over_pi.push_back(over_pi);
        grid.values.push_back(kPi * boost::rational_cast<double>(over_pi));
    }
    return grid;
}

double photon_flux(double power_watts, double frequency_hz) {
    if (power_watts <= 0.0 || frequency_hz <= 0.0)
        throw std::invalid_argument("photon_flux: power and frequency must be positive");
    return power_watts / (kPlanckSI * frequency_hz);
}

std::vector<ScatteringChannel> enumerate_channels(const KGrid& lattice_k, const KGrid& phonon_k,
                                                  const BandModel& band,
                                                  const std::function<double(double)>& omega_of_q,
                                                  const BroadenedDelta& delta,
                                                  const OccupationModel& occupation,
                                                  const ChannelQuery& query) {
    if (query.b_max < 0) throw std::invalid_argument("enumerate_channels: b_max must be >= 0");
    if (query.momentum_tol < 0.0)
        throw std::invalid_argument("enumerate_channels: momentum_tol must be >= 0");
    if (query.momentum_tol == 0.0 && !(lattice_k.has_exact() && phonon_k.has_exact()))
        throw std::invalid_argument(
            "enumerate_channels: exact matching (momentum_tol = 0) needs exact k-grids");

    const std::size_t nl = lattice_k.size();
    const std::size_t nj = phonon_k.size();
    const std::size_t tuples = nl * nl * nj * (2 * query.b_max + 1) * 2;
    if (tuples > query.tuple_cap)
        throw std::invalid_argument("enumerate_channels: tuple count exceeds cap");
    if (nl == 0 || nj == 0) return {};

    const bool exact = query.momentum_tol == 0.0;

    const auto locals = run_chunked<std::vector<ScatteringChannel>>(
        nl, resolve_workers(query.workers),
        [&](std::size_t begin, std::size_t end, int) {
            std::vector<ScatteringChannel> found;
            for (std::size_t li = begin; li < end; ++li) {
                const double e_l = band_energy(lattice_k.values[li], band);
                for (std::size_t mi = 0; mi < nl; ++mi) {
                    const double e_m = band_energy(lattice_k.values[mi], band);
                    for (std::size_t ji = 0; ji < nj; ++ji) {
                        const double q = phonon_k.values[ji];
                        const double homega = query.hbar * omega_of_q(q);
                        for (Branch branch : {Branch::emission, Branch::absorption}) {
                            const double sign = branch == Branch::emission ? 1.0 : -1.0;
                            const double denergy = e_l - e_m - sign * homega;
                            if (std::abs(denergy) > query.energy_tol) continue;
                            for (long b = -query.b_max; b <= query.b_max; ++b) {
                                bool matched;
                                if (exact) {
                                    const Rational lhs = lattice_k.over_pi[li] -
                                                         lattice_k.over_pi[mi] -
                                                         (branch == Branch::emission
                                                              ? phonon_k.over_pi[ji]
                                                              : -phonon_k.over_pi[ji]);
                                    matched = lhs == Rational(2 * b);
                                } else {
                                    const double lhs = lattice_k.values[li] -
                                                       lattice_k.values[mi] -
                                                       sign * phonon_k.values[ji];
                                    matched = std::abs(lhs - kTwoPi * b) <= query.momentum_tol;
                                }
                                if (!matched) continue;

                                ScatteringChannel ch;
                                ch.l = static_cast<int>(li) + 1;
                                ch.m = static_cast<int>(mi) + 1;
                                ch.j = static_cast<int>(ji) + 1;
                                ch.b_index = b;
                                ch.branch = branch;
                                ch.k_l = lattice_k.values[li];
                                ch.k_m = lattice_k.values[mi];
                                ch.q = q;
                                ch.b = kTwoPi * b;
                                ch.e_l = e_l;
                                ch.e_m = e_m;
                                ch.homega = homega;
                                const double m2 =
                                    query.m2_of_q ? query.m2_of_q(q) : query.m2;
                                ch.rate = scattering_rate(m2, e_l, e_m, omega_of_q(q),
                                                          occupation.occupancy(homega), branch,
                                                          delta, query.hbar);
                                found.push_back(ch);
                            }
                        }
                    }
                }
            }
            return found;
        });

    std::vector<ScatteringChannel> channels;
    for (const auto& part : locals)
        channels.insert(channels.end(), part.begin(), part.end());

    std::sort(channels.begin(), channels.end(),
              [](const ScatteringChannel& a, const ScatteringChannel& b) {
                  return std::tie(a.l, a.m, a.j, a.b_index, a.branch) <
                         std::tie(b.l, b.m, b.j, b.b_index, b.branch);
              });
    return channels;
}

}  // namespace phonoscope
