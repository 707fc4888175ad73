// phonoscope: cavity acoustic-field toolkit.
//
// Subcommands expose the library modules one by one: classical cavity modes
// and field synthesis, dual-rotation invariants, truncated Fock-space
// quantization, chain lattice dispersion, golden-rule scattering channels,
// phonon-mediated pairing coefficients, and a self-verification suite.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include "phonoscope/cavity.hpp"
#include "phonoscope/config.hpp"
#include "phonoscope/duality.hpp"
#include "phonoscope/fock.hpp"
#include "phonoscope/io.hpp"
#include "phonoscope/kinetics.hpp"
#include "phonoscope/lattice.hpp"
#include "phonoscope/pairing.hpp"
#include "phonoscope/parallel.hpp"
#include "phonoscope/verify.hpp"

namespace {

using namespace phonoscope;

constexpr const char* kVersion = "phonoscope 1.0.0";

// Writes `payload` to a file or to stdout when destination is "-".
void emit(const std::string& destination, const std::string& payload) {
    if (destination == "-") {
        std::cout << payload;
        return;
    }
    std::ofstream out(destination, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + destination);
    out << payload;
}

struct CavityOptions {
    std::string config_path;
    double length = std::numbers::pi;
    double volume = 2.0;
    double sound_speed = 1.0;
    int mode_count = 1;

    // Flag-provided values override the config file; the config file
    // overrides the defaults above.
    void resolve(const CLI::App& cmd) {
        if (config_path.empty()) return;
        const Config cfg = Config::load(config_path);
        if (cmd.count("--L") == 0) length = cfg.get_double("cavity.L", length);
        if (cmd.count("--V") == 0) volume = cfg.get_double("cavity.V", volume);
        if (cmd.count("--c") == 0) sound_speed = cfg.get_double("cavity.c", sound_speed);
        if (cmd.count("--M") == 0) mode_count = cfg.get_int("cavity.modes", mode_count);
    }

    [[nodiscard]] CavitySpec spec() const {
        return {length, volume, sound_speed, mode_count};
    }

    // Per-mode masses and initial states from the config file: either
    // mode.N.{q0,p0} or mode.N.{B,phi}; mass from mode.N.m. Missing modes
    // rest at the origin.
    [[nodiscard]] std::vector<double> masses() const {
        std::vector<double> out(mode_count, 1.0);
        if (config_path.empty()) return out;
        const Config cfg = Config::load(config_path);
        for (int alpha = 1; alpha <= mode_count; ++alpha)
            out[alpha - 1] = cfg.get_double("mode." + std::to_string(alpha) + ".m", 1.0);
        return out;
    }

    [[nodiscard]] std::vector<ModeState> states(const ModeSet& modes) const {
        std::vector<ModeState> out;
        Config cfg;
        if (!config_path.empty()) cfg = Config::load(config_path);
        for (int alpha = 1; alpha <= mode_count; ++alpha) {
            const std::string prefix = "mode." + std::to_string(alpha) + ".";
            const Mode& mode = modes[alpha - 1];
            if (cfg.has(prefix + "B") || cfg.has(prefix + "phi")) {
                out.push_back(state_from_phase(cfg.get_double(prefix + "B", 0.0),
                                               cfg.get_double(prefix + "phi", 0.0), mode));
            } else {
                out.push_back(state_from_initial(cfg.get_double(prefix + "q0", 0.0),
                                                 cfg.get_double(prefix + "p0", 0.0), mode));
            }
        }
        return out;
    }
};

void add_cavity_flags(CLI::App* cmd, CavityOptions& opt) {
    cmd->add_option("--config", opt.config_path, "run configuration file");
    cmd->add_option("--L", opt.length, "cavity length along z");
    cmd->add_option("--V", opt.volume, "cavity volume");
    cmd->add_option("--c", opt.sound_speed, "sound speed");
    cmd->add_option("--M", opt.mode_count, "number of retained modes");
}

std::function<double(double)> parse_omega_spec(const std::string& text) {
    const auto colon = text.find(':');
    const std::string kind = text.substr(0, colon);
    const double value = colon == std::string::npos ? 0.0 : std::stod(text.substr(colon + 1));
    if (kind == "const") return [value](double) { return value; };
    if (kind == "sine") return [value](double q) { return value * std::abs(std::sin(q / 2.0)); };
    throw std::runtime_error("unknown phonon dispersion '" + text + "' (use const:W or sine:W)");
}

// Accepts "8/3" as an exact rational, plain numbers as floating values.
bool parse_rational(const std::string& text, Rational& out) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return false;
    const long long num = std::stoll(text.substr(0, slash));
    const long long den = std::stoll(text.substr(slash + 1));
    if (den == 0) throw std::runtime_error("rational with zero denominator: " + text);
    out = Rational(num, den);
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cavity acoustic-field simulator and verification toolkit"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string out_path = "-";
    std::string format = "csv";
    int workers = 0;  // 0: fall back to PHONOSCOPE_WORKERS, then 1
    app.add_option("--out", out_path, "output destination ('-' for stdout)")->capture_default_str();
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--workers", workers, "worker threads for scans");

    // --- modes ---------------------------------------------------------
    CavityOptions modes_opt;
    CLI::App* modes_cmd = app.add_subcommand("modes", "cavity mode spectrum");
    add_cavity_flags(modes_cmd, modes_opt);

    // --- evolve --------------------------------------------------------
    CavityOptions evolve_opt;
    double evolve_t0 = 0.0, evolve_t1 = 10.0;
    int evolve_steps = 100;
    CLI::App* evolve_cmd = app.add_subcommand("evolve", "modal oscillator evolution");
    add_cavity_flags(evolve_cmd, evolve_opt);
    evolve_cmd->add_option("--t0", evolve_t0, "start time")->capture_default_str();
    evolve_cmd->add_option("--t1", evolve_t1, "end time")->capture_default_str();
    evolve_cmd->add_option("--steps", evolve_steps, "number of samples")->capture_default_str();

    // --- fields --------------------------------------------------------
    CavityOptions fields_opt;
    double fields_t = 0.0;
    int fields_points = 101;
    std::string fields_solution = "first";
    std::string fields_binary;
    CLI::App* fields_cmd = app.add_subcommand("fields", "synthesize a field snapshot");
    add_cavity_flags(fields_cmd, fields_opt);
    fields_cmd->add_option("--t", fields_t, "snapshot time")->capture_default_str();
    fields_cmd->add_option("--points", fields_points, "grid points")->capture_default_str();
    fields_cmd->add_option("--solution", fields_solution, "first or second cavity solution")
        ->check(CLI::IsMember({"first", "second"}))
        ->capture_default_str();
    fields_cmd->add_option("--binary", fields_binary,
                           "write PREFIX.json + PREFIX.bin instead of CSV");

    // --- invariants ----------------------------------------------------
    CavityOptions inv_opt;
    double inv_t = 0.0, inv_theta = 0.0;
    int inv_points = 101;
    bool inv_rotated = false;
    std::string inv_summary = "-";
    CLI::App* inv_cmd = app.add_subcommand("invariants", "dual-rotation invariant maps");
    add_cavity_flags(inv_cmd, inv_opt);
    inv_cmd->add_option("--t", inv_t, "snapshot time")->capture_default_str();
    inv_cmd->add_option("--points", inv_points, "grid points")->capture_default_str();
    inv_cmd->add_option("--theta", inv_theta, "dual angle (radians)")
        ->capture_default_str();
    inv_cmd->add_flag("--rotated", inv_rotated,
                      "emit the theta-rotated invariants instead of I1, I2");
    inv_cmd->add_option("--summary", inv_summary, "integrated-pair destination")
        ->capture_default_str();

    // --- quantize ------------------------------------------------------
    CavityOptions quant_opt;
    quant_opt.mode_count = 1;
    int quant_nmax = 8;
    double quant_t = 0.0, quant_z = -1.0;
    std::string quant_scan;
    std::string quant_gamma = "1,0";
    int quant_samples = 64;
    CLI::App* quant_cmd = app.add_subcommand("quantize", "Fock-space operators and scans");
    add_cavity_flags(quant_cmd, quant_opt);
    quant_cmd->add_option("--nmax", quant_nmax, "occupation truncation")->capture_default_str();
    quant_cmd->add_option("--t", quant_t, "operator time")->capture_default_str();
    quant_cmd->add_option("--z", quant_z, "field-operator position (default L/2)");
    quant_cmd->add_option("--scan", quant_scan, "coherent expectation scan over 'z' or 't'")
        ->check(CLI::IsMember({"z", "t"}));
    quant_cmd->add_option("--gamma", quant_gamma, "coherent amplitude 're,im'")
        ->capture_default_str();
    quant_cmd->add_option("--samples", quant_samples, "scan sample count")->capture_default_str();

    // --- dispersion ----------------------------------------------------
    int disp_n = 16;
    double disp_mass = 1.0, disp_spring = 1.0;
    bool disp_open = false;
    std::string disp_force_row;
    CLI::App* disp_cmd = app.add_subcommand("dispersion", "chain lattice normal modes");
    disp_cmd->add_option("--n", disp_n, "atom count")->capture_default_str();
    disp_cmd->add_option("--mass", disp_mass, "atomic mass")->capture_default_str();
    disp_cmd->add_option("--spring", disp_spring, "nearest-neighbour force constant")
        ->capture_default_str();
    disp_cmd->add_flag("--open", disp_open, "open (non-periodic) chain");
    disp_cmd->add_option("--force-row", disp_force_row,
                         "CSV of couplings by neighbour distance");

    // --- scatter -------------------------------------------------------
    int scat_n = 16, scat_modes = 0, scat_bmax = 1;
    std::string scat_cavity_length = "8/2";
    double scat_a = 1.0, scat_sigma = 0.0, scat_energy_tol = 1e-6, scat_momentum_tol = -1.0;
    double scat_m2 = 1.0;
    std::string scat_band = "tightbinding:t=1,mu=0";
    std::string scat_omega = "sine:0.5";
    std::string scat_delta = "gaussian";
    std::string scat_occ = "1.0";
    std::string scat_summary = "-";
    CLI::App* scat_cmd = app.add_subcommand("scatter", "scattering channel enumeration");
    scat_cmd->add_option("--lattice-n", scat_n, "lattice atom count")->capture_default_str();
    scat_cmd->add_option("--cavity-L", scat_cavity_length,
                         "cavity length over lattice constant; 'p/q' engages exact matching")
        ->capture_default_str();
    scat_cmd->add_option("--cavity-modes", scat_modes,
                         "cavity modes in the phonon grid (default: lattice-n)");
    scat_cmd->add_option("--lattice-a", scat_a, "lattice constant")->capture_default_str();
    scat_cmd->add_option("--band", scat_band, "electron band spec")->capture_default_str();
    scat_cmd->add_option("--omega-q", scat_omega, "phonon dispersion, const:W or sine:W")
        ->capture_default_str();
    scat_cmd->add_option("--sigma", scat_sigma, "delta width (default 0.01 max homega)");
    scat_cmd->add_option("--delta", scat_delta, "delta kind")
        ->check(CLI::IsMember({"gaussian", "lorentzian"}))
        ->capture_default_str();
    scat_cmd->add_option("--bmax", scat_bmax, "largest |b| / 2 pi")->capture_default_str();
    scat_cmd->add_option("--energy-tol", scat_energy_tol, "energy window")->capture_default_str();
    scat_cmd->add_option("--momentum-tol", scat_momentum_tol,
                         "momentum window (default 1e-9; 0 = exact)");
    scat_cmd->add_option("--m2", scat_m2, "|M|^2 coupling")->capture_default_str();
    scat_cmd->add_option("--occupation", scat_occ, "N_q value or thermal:T")
        ->capture_default_str();
    scat_cmd->add_option("--summary", scat_summary, "summary JSON destination")
        ->capture_default_str();

    // --- pairing -------------------------------------------------------
    int pair_nk = 64;
    double pair_omega = 0.5, pair_m2 = 1.0, pair_rho = 0.5, pair_guard = 1e-6;
    std::string pair_band = "tightbinding:t=1,mu=0";
    std::string pair_summary = "-";
    CLI::App* pair_cmd = app.add_subcommand("pairing", "phonon-mediated interaction scan");
    pair_cmd->add_option("--band", pair_band, "electron band spec")->capture_default_str();
    pair_cmd->add_option("--nk", pair_nk, "k-grid size")->capture_default_str();
    pair_cmd->add_option("--omega", pair_omega, "phonon frequency")->capture_default_str();
    pair_cmd->add_option("--m2", pair_m2, "|M|^2 coupling")->capture_default_str();
    pair_cmd->add_option("--rho", pair_rho, "significance ratio in (0,1)")->capture_default_str();
    pair_cmd->add_option("--pole-guard", pair_guard, "pole guard fraction")->capture_default_str();
    pair_cmd->add_option("--summary", pair_summary, "summary JSON destination")
        ->capture_default_str();

    // --- flux ----------------------------------------------------------
    double flux_power = 0.0, flux_freq = 0.0;
    CLI::App* flux_cmd = app.add_subcommand("flux", "photon flux P / (h f)");
    flux_cmd->add_option("--power", flux_power, "power in watts")->required();
    flux_cmd->add_option("--freq", flux_freq, "frequency in hertz")->required();

    // --- verify --------------------------------------------------------
    bool verify_quick = false;
    std::uint64_t verify_seed = 12345;
    std::string verify_dir = ".";
    CLI::App* verify_cmd = app.add_subcommand("verify", "run the invariant suite");
    verify_cmd->add_flag("--quick", verify_quick, "smaller grids and fewer trials");
    verify_cmd->add_option("--seed", verify_seed, "random seed")->capture_default_str();
    verify_cmd->add_option("--report-dir", verify_dir, "directory for verify_report.csv")
        ->capture_default_str();

    // Global --out/--format/--workers may appear after the subcommand name.
    for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit 0, usage errors exit 2
    }

    try {
        const bool json = format == "json";

        if (*modes_cmd) {
            modes_opt.resolve(*modes_cmd);
            const ModeSet modes = mode_spectrum(modes_opt.spec(), modes_opt.masses());
            if (json) {
                emit(out_path, modes_json(modes));
            } else {
                std::ostringstream csv;
                write_modes_csv(csv, modes);
                emit(out_path, csv.str());
            }
        } else if (*evolve_cmd) {
            evolve_opt.resolve(*evolve_cmd);
            const ModeSet modes = mode_spectrum(evolve_opt.spec(), evolve_opt.masses());
            const std::vector<ModeState> states = evolve_opt.states(modes);
            if (evolve_steps < 1) throw std::runtime_error("--steps must be >= 1");
            std::vector<double> times;
            for (int i = 0; i <= evolve_steps; ++i)
                times.push_back(evolve_t0 + (evolve_t1 - evolve_t0) * i / evolve_steps);
            if (json) {
                emit(out_path, evolution_json(modes, states, times));
            } else {
                std::ostringstream csv;
                write_evolution_csv(csv, modes, states, times);
                emit(out_path, csv.str());
            }
        } else if (*fields_cmd) {
            fields_opt.resolve(*fields_cmd);
            const ModeSet modes = mode_spectrum(fields_opt.spec(), fields_opt.masses());
            const std::vector<ModeState> states = fields_opt.states(modes);
            const GridSpec grid = GridSpec::line_z(fields_opt.length, fields_points);
            const SynthesizedField s =
                fields_solution == "second"
                    ? synthesize_second_solution(modes, states, grid, fields_t)
                    : synthesize_first_solution(modes, states, grid, fields_t);
            if (!resolves_modes(grid, modes))
                std::cerr << "warning: grid has fewer than 8 points per shortest wavelength\n";
            if (!fields_binary.empty()) {
                write_field_binary(fields_binary + ".json", fields_binary + ".bin", s.fields);
            } else if (json) {
                emit(out_path, field_json(s.fields));
            } else {
                std::ostringstream csv;
                write_field_csv(csv, s.fields);
                emit(out_path, csv.str());
            }
        } else if (*inv_cmd) {
            inv_opt.resolve(*inv_cmd);
            const ModeSet modes = mode_spectrum(inv_opt.spec(), inv_opt.masses());
            const std::vector<ModeState> states = inv_opt.states(modes);
            const GridSpec grid = GridSpec::line_z(inv_opt.length, inv_points);
            SynthesizedField s = synthesize_first_solution(modes, states, grid, inv_t);
            VectorFieldPair fields = inv_theta != 0.0 && !inv_rotated
                                         ? dual_rotate(s.fields, DualAngle(inv_theta))
                                         : s.fields;
            const InvariantResult result = inv_rotated
                                               ? rotated_invariants(fields, DualAngle(inv_theta))
                                               : invariants(fields);
            if (json) {
                emit(out_path, invariants_json(result));
            } else {
                std::ostringstream csv;
                write_invariants_csv(csv, result);
                emit(out_path, csv.str());
                std::ostringstream summary;
                summary << "{\"I1\": " << format_double(result.integrated.i1)
                        << ", \"I2\": " << format_double(result.integrated.i2) << "}\n";
                emit(inv_summary, summary.str());
            }
        } else if (*quant_cmd) {
            quant_opt.resolve(*quant_cmd);
            const ModeSet modes = mode_spectrum(quant_opt.spec(), quant_opt.masses());
            const FockSpec spec{quant_nmax};
            const double z = quant_z < 0.0 ? quant_opt.length / 2.0 : quant_z;
            if (quant_scan.empty()) {
                // Operator snapshots at (z, t): ladder pair of the first mode
                // plus both field operators.
                const LadderPair ladder =
                    heisenberg_evolve(build_ladder(spec), modes[0].omega, quant_t);
                const QPPair qp =
                    position_momentum_ops(ladder, modes[0].mass, modes[0].omega, spec.hbar);
                const FieldOperators ops = field_operators(modes, spec, z, quant_t);
                std::ostringstream payload;
                payload << "[\n"
                        << operator_snapshot_json({ladder.a, "a[1]", quant_t}) << ",\n"
                        << operator_snapshot_json({ladder.a_dag, "a_dag[1]", quant_t}) << ",\n"
                        << operator_snapshot_json({qp.q, "q[1]", quant_t}) << ",\n"
                        << operator_snapshot_json({qp.p, "p[1]", quant_t}) << ",\n"
                        << operator_snapshot_json({ops.u1, "U1", quant_t}) << ",\n"
                        << operator_snapshot_json({ops.u2, "U2", quant_t}) << "\n]\n";
                emit(out_path, payload.str());
            } else {
                // Coherent-state expectation scan of U1 along z or t.
                double re = 1.0, im = 0.0;
                const auto comma = quant_gamma.find(',');
                if (comma == std::string::npos)
                    throw std::runtime_error("--gamma expects 're,im'");
                re = std::stod(quant_gamma.substr(0, comma));
                im = std::stod(quant_gamma.substr(comma + 1));
                CVector state = coherent_state(std::complex<double>(re, im), quant_nmax);
                // Multimode scans use the same coherent amplitude in each mode.
                for (std::size_t m = 1; m < modes.size(); ++m) {
                    const Matrix product = kron(Matrix(state), Matrix(coherent_state(
                                                                   {re, im}, quant_nmax)));
                    state = product.col(0);
                }
                std::vector<std::pair<double, double>> scan_rows;
                for (int i = 0; i < quant_samples; ++i) {
                    const double x = quant_scan == "z"
                                         ? quant_opt.length * i / (quant_samples - 1)
                                         : 10.0 * i / (quant_samples - 1);
                    const FieldOperators ops = quant_scan == "z"
                                                   ? field_operators(modes, spec, x, quant_t)
                                                   : field_operators(modes, spec, z, x);
                    const std::complex<double> ev = state.adjoint() * ops.u1 * state;
                    scan_rows.emplace_back(x, ev.real());
                }
                std::ostringstream payload;
                if (json) {
                    payload << "{\"axis\": \"" << quant_scan << "\", \"expectation_U1\": [";
                    for (std::size_t i = 0; i < scan_rows.size(); ++i)
                        payload << (i ? ", " : "") << "[" << format_double(scan_rows[i].first)
                                << ", " << format_double(scan_rows[i].second) << "]";
                    payload << "]}\n";
                } else {
                    payload << (quant_scan == "z" ? "z" : "t") << ",expectation_U1\n";
                    for (const auto& [x, v] : scan_rows)
                        payload << format_double(x) << ',' << format_double(v) << '\n';
                }
                emit(out_path, payload.str());
            }
        } else if (*disp_cmd) {
            ChainSpec spec{disp_n, disp_mass, disp_spring, !disp_open};
            if (!disp_force_row.empty()) spec.force_row = read_force_row_csv(disp_force_row);
            const auto modes = normal_modes(spec);
            if (json) {
                emit(out_path, dispersion_json(modes));
            } else {
                std::ostringstream csv;
                write_dispersion_csv(csv, modes);
                emit(out_path, csv.str());
            }
        } else if (*scat_cmd) {
            const KGrid lattice = lattice_kgrid_exact(scat_n);
            const int cavity_modes = scat_modes > 0 ? scat_modes : scat_n;

            KGrid phonons;
            Rational ratio;
            bool exact = false;
            if (parse_rational(scat_cavity_length, ratio)) {
                // A 'p/q' value is the exact ratio L/a in lattice units.
                phonons = cavity_kgrid_exact(ratio, cavity_modes);
                exact = true;
            } else {
                const double length = std::stod(scat_cavity_length);
                const CavitySpec cavity{length, 1.0, 1.0, cavity_modes};
                phonons.values = cavity_kgrid(cavity, cavity_modes, scat_a);
            }

            const BandModel band = BandModel::parse(scat_band);
            const auto omega_q = parse_omega_spec(scat_omega);
            double max_homega = 0.0;
            for (double q : phonons.values) max_homega = std::max(max_homega, omega_q(q));
            const double sigma = scat_sigma > 0.0
                                     ? scat_sigma
                                     : std::max(0.01 * max_homega, 1e-6);
            const BroadenedDelta delta{scat_delta == "lorentzian"
                                           ? BroadenedDelta::Kind::lorentzian
                                           : BroadenedDelta::Kind::gaussian,
                                       sigma};
            OccupationModel occupation = OccupationModel::fixed(1.0);
            if (scat_occ.rfind("thermal:", 0) == 0)
                occupation = OccupationModel::thermal(std::stod(scat_occ.substr(8)));
            else
                occupation = OccupationModel::fixed(std::stod(scat_occ));

            ChannelQuery query;
            query.m2 = scat_m2;
            query.energy_tol = scat_energy_tol;
            query.b_max = scat_bmax;
            query.workers = resolve_workers(workers);
            query.momentum_tol = scat_momentum_tol >= 0.0 ? scat_momentum_tol
                                 : exact                  ? 0.0
                                                          : 1e-9;
            const auto channels =
                enumerate_channels(lattice, phonons, band, omega_q, delta, occupation, query);
            if (json) {
                emit(out_path, channels_json(channels));
            } else {
                std::ostringstream csv;
                write_channels_csv(csv, channels);
                emit(out_path, csv.str());
                emit(scat_summary, channel_summary_json(channels) + "\n");
            }
        } else if (*pair_cmd) {
            const BandModel band = BandModel::parse(pair_band);
            const std::vector<double> ks = lattice_kgrid(pair_nk);
            const AttractiveScan scan = attractive_channels(
                band, ks, ks, [&](double) { return pair_omega; },
                [&](double) { return pair_m2; }, pair_rho, 1.0, pair_guard,
                resolve_workers(workers));
            if (json) {
                emit(out_path, pairs_json(scan));
            } else {
                std::ostringstream csv;
                write_pairs_csv(csv, scan);
                emit(out_path, csv.str());
                std::ostringstream summary;
                summary << "{\"scanned\": " << scan.scanned
                        << ", \"attractive_fraction\": "
                        << format_double(scan.attractive_fraction)
                        << ", \"min_v_eff\": " << format_double(scan.min_v_eff)
                        << ", \"pole_hits\": " << scan.pole_hits << "}\n";
                emit(pair_summary, summary.str());
            }
        } else if (*flux_cmd) {
            const double flux = photon_flux(flux_power, flux_freq);
            std::ostringstream payload;
            if (json)
                payload << "{\"photons_per_second\": " << format_double(flux) << "}\n";
            else
                payload << format_double(flux) << "\n";
            emit(out_path, payload.str());
        } else if (*verify_cmd) {
            VerifyOptions options;
            options.quick = verify_quick;
            options.seed = verify_seed;
            options.workers = resolve_workers(workers);
            const auto results = run_verification(options);

            std::size_t failures = 0;
            for (const CheckResult& r : results) {
                if (!r.pass) ++failures;
                std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  measured "
                          << format_double(r.measured) << " vs threshold "
                          << format_double(r.threshold)
                          << (r.detail.empty() ? "" : "  (" + r.detail + ")") << "\n";
            }
            std::cout << (failures == 0 ? "all checks passed" : "checks FAILED") << " ("
                      << results.size() - failures << "/" << results.size() << ")\n";

            std::filesystem::create_directories(verify_dir);
            const auto report_path = std::filesystem::path(verify_dir) / "verify_report.csv";
            std::ofstream report(report_path, std::ios::binary);
            if (!report) throw std::runtime_error("cannot write " + report_path.string());
            report << verify_report_csv(results);

            // --out receives the machine-readable report as well.
            if (out_path != "-") {
                if (json) {
                    std::ostringstream payload;
                    payload << "[\n";
                    for (std::size_t i = 0; i < results.size(); ++i)
                        payload << (i ? ",\n" : "") << "  {\"check\": \"" << results[i].name
                                << "\", \"pass\": " << (results[i].pass ? "true" : "false")
                                << ", \"measured\": " << format_double(results[i].measured)
                                << ", \"threshold\": " << format_double(results[i].threshold)
                                << "}";
                    payload << "\n]\n";
                    emit(out_path, payload.str());
                } else {
                    emit(out_path, verify_report_csv(results));
                }
            }
            return failures == 0 ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
