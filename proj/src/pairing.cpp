#include "phonoscope/pairing.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "phonoscope/parallel.hpp"

namespace phonoscope {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double parse_value(const std::string& item, const std::string& key) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || item.substr(0, eq) != key) return NAN;
    return std::stod(item.substr(eq + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

}  // namespace

BandModel BandModel::parse(const std::string& text) {
    const auto colon = text.find(':');
    const std::string kind = text.substr(0, colon);
    const std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);

    BandModel band;
    if (kind == "tightbinding") {
        band.kind = Kind::tightbinding;
        for (const auto& item : split(rest, ',')) {
            if (double v = parse_value(item, "t"); !std::isnan(v)) band.hopping = v;
            else if (double u = parse_value(item, "mu"); !std::isnan(u)) band.mu = u;
            else throw std::invalid_argument("BandModel: unknown tightbinding parameter '" + item + "'");
        }
    } else if (kind == "parabolic") {
        band.kind = Kind::parabolic;
        for (const auto& item : split(rest, ',')) {
            if (double v = parse_value(item, "mstar"); !std::isnan(v)) band.eff_mass = v;
            else if (double u = parse_value(item, "mu"); !std::isnan(u)) band.mu = u;
            else throw std::invalid_argument("BandModel: unknown parabolic parameter '" + item + "'");
        }
        if (band.eff_mass <= 0.0) throw std::invalid_argument("BandModel: mstar must be positive");
    } else if (kind == "table") {
        band.kind = Kind::table;
        std::ifstream in(rest);
        if (!in) throw std::invalid_argument("BandModel: cannot open table file '" + rest + "'");
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#' || line.rfind("k,", 0) == 0) continue;
            const auto cols = split(line, ',');
            if (cols.size() < 2) throw std::invalid_argument("BandModel: bad table row '" + line + "'");
            band.table.emplace_back(std::stod(cols[0]), std::stod(cols[1]));
        }
        if (band.table.empty()) throw std::invalid_argument("BandModel: empty table");
    } else {
        throw std::invalid_argument("BandModel: unknown kind '" + kind + "'");
    }
    return band;
}

double band_energy(double k, const BandModel& band) {
    switch (band.kind) {
        case BandModel::Kind::tightbinding:
            return -2.0 * band.hopping * std::cos(k) - band.mu;
        case BandModel::Kind::parabolic:
            return k * k / (2.0 * band.eff_mass) - band.mu;
        case BandModel::Kind::table: {
            double kc = std::fmod(k, kTwoPi);
            if (kc < 0.0) kc += kTwoPi;
            for (const auto& [kt, eps] : band.table) {
                if (std::abs(kc - kt) <= 1e-9) return eps;
            }
            throw std::out_of_range("band_energy: k not on the table grid (no interpolation)");
        }
    }
    throw std::logic_error("band_energy: unreachable");
}

double effective_interaction(double eps_k, double eps_kq, double omega_q, double m2,
                             double hbar, double pole_guard) {
    const double delta = eps_k - eps_kq;
    const double homega = hbar * omega_q;
    const double denom = delta * delta - homega * homega;
    if (std::abs(denom) < pole_guard * homega * homega)
        throw PoleError(delta, homega);
    return hbar * omega_q * m2 / denom;
}

AttractiveScan attractive_channels(const BandModel& band, const std::vector<double>& k_grid,
                                   const std::vector<double>& q_grid,
                                   const std::function<double(double)>& omega_of_q,
                                   const std::function<double(double)>& m2_of_q, double rho,
                                   double hbar, double pole_guard, int workers) {
    if (rho <= 0.0 || rho >= 1.0)
        throw std::invalid_argument("attractive_channels: rho must lie in (0, 1)");
    if (k_grid.empty() || q_grid.empty())
        throw std::invalid_argument("attractive_channels: empty grid");

    struct Local {
        std::vector<InteractionEntry> entries;
        std::size_t attractive = 0;
        std::size_t poles = 0;
    };

    const auto locals = run_chunked<Local>(
        k_grid.size(), resolve_workers(workers),
        [&](std::size_t begin, std::size_t end, int) {
            Local loc;
            for (std::size_t i = begin; i < end; ++i) {
                const double k = k_grid[i];
                const double eps_k = band_energy(k, band);
                for (double q : q_grid) {
                    const double eps_kq = band_energy(k + q, band);
                    const double delta = eps_k - eps_kq;
                    const double homega = hbar * omega_of_q(q);
                    if (std::abs(delta) < homega) ++loc.attractive;

                    if (std::abs(delta) > rho * homega) continue;
                    InteractionEntry e;
                    e.k = k;
                    e.k_prime = k + q;
                    e.q = q;
                    e.delta_eps = delta;
                    try {
                        e.v_eff = effective_interaction(eps_k, eps_kq, omega_of_q(q),
                                                        m2_of_q(q), hbar, pole_guard);
                        e.attractive = e.v_eff < 0.0;
                    } catch (const PoleError&) {
                        e.pole = true;
                        e.v_eff = 0.0;
                        ++loc.poles;
                    }
                    loc.entries.push_back(e);
                }
            }
            return loc;
        });

    AttractiveScan scan;
    scan.scanned = k_grid.size() * q_grid.size();
    for (const Local& loc : locals) {
        scan.entries.insert(scan.entries.end(), loc.entries.begin(), loc.entries.end());
        scan.attractive_count += loc.attractive;
        scan.pole_hits += loc.poles;
    }
    std::stable_sort(scan.entries.begin(), scan.entries.end(),
                     [](const InteractionEntry& a, const InteractionEntry& b) {
                         return a.v_eff < b.v_eff;
                     });
    scan.attractive_fraction =
        static_cast<double>(scan.attractive_count) / static_cast<double>(scan.scanned);
    scan.min_v_eff = 0.0;
    for (const auto& e : scan.entries)
        if (!e.pole) { scan.min_v_eff = e.v_eff; break; }  // sorted ascending
    return scan;
}

}  // namespace phonoscope
