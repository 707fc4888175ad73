#include "phonoscope/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace phonoscope {

using nlohmann::json;

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

json grid_json(const GridSpec& g) {
    return json{{"extent", {g.extent(0), g.extent(1), g.extent(2)}},
                {"points", {g.points(0), g.points(1), g.points(2)}},
                {"spacing", {g.spacing(0), g.spacing(1), g.spacing(2)}}};
}

const char* branch_name(Branch b) {
    return b == Branch::emission ? "emission" : "absorption";
}

}  // namespace

void write_field_csv(std::ostream& out, const VectorFieldPair& fields) {
    out << "x,y,z,U1x,U1y,U1z,U2x,U2y,U2z\n";
    const GridSpec& g = fields.grid;
    for (int ix = 0; ix < g.points(0); ++ix)
        for (int iy = 0; iy < g.points(1); ++iy)
            for (int iz = 0; iz < g.points(2); ++iz) {
                const Vec3 r = g.point(ix, iy, iz);
                const std::size_t i = g.index(ix, iy, iz);
                const Vec3& a = fields.u1[i];
                const Vec3& b = fields.u2[i];
                out << format_double(r.x) << ',' << format_double(r.y) << ','
                    << format_double(r.z) << ',' << format_double(a.x) << ','
                    << format_double(a.y) << ',' << format_double(a.z) << ','
                    << format_double(b.x) << ',' << format_double(b.y) << ','
                    << format_double(b.z) << '\n';
            }
}

void write_invariants_csv(std::ostream& out, const InvariantResult& result) {
    out << "x,y,z,I1,I2\n";
    const GridSpec& g = result.grid;
    for (int ix = 0; ix < g.points(0); ++ix)
        for (int iy = 0; iy < g.points(1); ++iy)
            for (int iz = 0; iz < g.points(2); ++iz) {
                const Vec3 r = g.point(ix, iy, iz);
                const std::size_t i = g.index(ix, iy, iz);
                out << format_double(r.x) << ',' << format_double(r.y) << ','
                    << format_double(r.z) << ',' << format_double(result.i1[i]) << ','
                    << format_double(result.i2[i]) << '\n';
            }
}

void write_modes_csv(std::ostream& out, const ModeSet& modes) {
    out << "alpha,k,omega,mass,amplitude\n";
    for (const Mode& m : modes)
        out << m.index << ',' << format_double(m.k) << ',' << format_double(m.omega) << ','
            << format_double(m.mass) << ',' << format_double(m.amplitude) << '\n';
}

void write_evolution_csv(std::ostream& out, const ModeSet& modes,
                         const std::vector<ModeState>& states,
                         const std::vector<double>& times) {
    out << "t,alpha,q,p,energy\n";
    for (double t : times)
        for (std::size_t i = 0; i < modes.size(); ++i) {
            const Mode& m = modes[i];
            const ModeState s = oscillator_evolve(states[i], m, t);
            const double energy =
                0.5 * (m.mass * m.omega * m.omega * s.q * s.q + s.p * s.p / m.mass);
            out << format_double(t) << ',' << m.index << ',' << format_double(s.q) << ','
                << format_double(s.p) << ',' << format_double(energy) << '\n';
        }
}

void write_dispersion_csv(std::ostream& out, const std::vector<NormalMode>& modes) {
    out << "k,omega\n";
    for (const NormalMode& m : modes)
        out << format_double(m.k) << ',' << format_double(m.omega) << '\n';
}

void write_channels_csv(std::ostream& out, const std::vector<ScatteringChannel>& channels) {
    out << "l,m,j,b_index,branch,k_l,k_m,q,b,E_l,E_m,homega,rate\n";
    for (const ScatteringChannel& c : channels)
        out << c.l << ',' << c.m << ',' << c.j << ',' << c.b_index << ',' << branch_name(c.branch)
            << ',' << format_double(c.k_l) << ',' << format_double(c.k_m) << ','
            << format_double(c.q) << ',' << format_double(c.b) << ',' << format_double(c.e_l)
            << ',' << format_double(c.e_m) << ',' << format_double(c.homega) << ','
            << format_double(c.rate) << '\n';
}

void write_pairs_csv(std::ostream& out, const AttractiveScan& scan) {
    out << "k,kprime,q,delta_eps,v_eff,attractive,pole_flag\n";
    for (const InteractionEntry& e : scan.entries)
        out << format_double(e.k) << ',' << format_double(e.k_prime) << ','
            << format_double(e.q) << ',' << format_double(e.delta_eps) << ','
            << format_double(e.v_eff) << ',' << (e.attractive ? 1 : 0) << ','
            << (e.pole ? 1 : 0) << '\n';
}

std::string field_json(const VectorFieldPair& fields) {
    json j;
    j["grid"] = grid_json(fields.grid);
    j["time"] = fields.time;
    json rows = json::array();
    const GridSpec& g = fields.grid;
    for (int ix = 0; ix < g.points(0); ++ix)
        for (int iy = 0; iy < g.points(1); ++iy)
            for (int iz = 0; iz < g.points(2); ++iz) {
                const Vec3 r = g.point(ix, iy, iz);
                const std::size_t i = g.index(ix, iy, iz);
                rows.push_back({r.x, r.y, r.z, fields.u1[i].x, fields.u1[i].y, fields.u1[i].z,
                                fields.u2[i].x, fields.u2[i].y, fields.u2[i].z});
            }
    j["columns"] = {"x", "y", "z", "U1x", "U1y", "U1z", "U2x", "U2y", "U2z"};
    j["data"] = std::move(rows);
    return j.dump(2);
}

std::string invariants_json(const InvariantResult& result) {
    json j;
    j["grid"] = grid_json(result.grid);
    j["integrated"] = {{"I1", result.integrated.i1}, {"I2", result.integrated.i2}};
    j["I1"] = result.i1;
    j["I2"] = result.i2;
    return j.dump(2);
}

std::string modes_json(const ModeSet& modes) {
    json arr = json::array();
    for (const Mode& m : modes)
        arr.push_back({{"alpha", m.index},
                       {"k", m.k},
                       {"omega", m.omega},
                       {"mass", m.mass},
                       {"amplitude", m.amplitude}});
    json j;
    j["cavity"] = {{"L", modes.spec().length},
                   {"V", modes.spec().volume},
                   {"c", modes.spec().sound_speed},
                   {"modes", modes.spec().mode_count}};
    j["modes"] = std::move(arr);
    return j.dump(2);
}

std::string evolution_json(const ModeSet& modes, const std::vector<ModeState>& states,
                           const std::vector<double>& times) {
    json rows = json::array();
    for (double t : times)
        for (std::size_t i = 0; i < modes.size(); ++i) {
            const Mode& m = modes[i];
            const ModeState s = oscillator_evolve(states[i], m, t);
            const double energy =
                0.5 * (m.mass * m.omega * m.omega * s.q * s.q + s.p * s.p / m.mass);
            rows.push_back(
                {{"t", t}, {"alpha", m.index}, {"q", s.q}, {"p", s.p}, {"energy", energy}});
        }
    return json{{"evolution", std::move(rows)}}.dump(2);
}

std::string dispersion_json(const std::vector<NormalMode>& modes) {
    json rows = json::array();
    for (const NormalMode& m : modes) rows.push_back({{"k", m.k}, {"omega", m.omega}});
    return json{{"dispersion", std::move(rows)}}.dump(2);
}

std::string channel_summary_json(const std::vector<ScatteringChannel>& channels) {
    std::size_t emission = 0, absorption = 0, normal = 0, umklapp = 0;
    for (const ScatteringChannel& c : channels) {
        (c.branch == Branch::emission ? emission : absorption) += 1;
        (c.b_index == 0 ? normal : umklapp) += 1;
    }
    json j;
    j["total"] = channels.size();
    j["by_branch"] = {{"emission", emission}, {"absorption", absorption}};
    j["by_b"] = {{"normal", normal}, {"umklapp", umklapp}};
    return j.dump(2);
}

std::string channels_json(const std::vector<ScatteringChannel>& channels) {
    json rows = json::array();
    for (const ScatteringChannel& c : channels)
        rows.push_back({{"l", c.l},
                        {"m", c.m},
                        {"j", c.j},
                        {"b_index", c.b_index},
                        {"branch", branch_name(c.branch)},
                        {"k_l", c.k_l},
                        {"k_m", c.k_m},
                        {"q", c.q},
                        {"b", c.b},
                        {"E_l", c.e_l},
                        {"E_m", c.e_m},
                        {"homega", c.homega},
                        {"rate", c.rate}});
    json j = json::parse(channel_summary_json(channels));
    j["channels"] = std::move(rows);
    return j.dump(2);
}

std::string pairs_json(const AttractiveScan& scan) {
    json rows = json::array();
    for (const InteractionEntry& e : scan.entries)
        rows.push_back({{"k", e.k},
                        {"kprime", e.k_prime},
                        {"q", e.q},
                        {"delta_eps", e.delta_eps},
                        {"v_eff", e.v_eff},
                        {"attractive", e.attractive},
                        {"pole_flag", e.pole}});
    json j;
    j["summary"] = {{"scanned", scan.scanned},
                    {"attractive_count", scan.attractive_count},
                    {"attractive_fraction", scan.attractive_fraction},
                    {"min_v_eff", scan.min_v_eff},
                    {"pole_hits", scan.pole_hits}};
    j["entries"] = std::move(rows);
    return j.dump(2);
}

std::string operator_snapshot_json(const OperatorSnapshot& snapshot) {
    json data = json::array();
    for (Eigen::Index r = 0; r < snapshot.matrix.rows(); ++r)
        for (Eigen::Index c = 0; c < snapshot.matrix.cols(); ++c) {
            const auto v = snapshot.matrix(r, c);
            data.push_back({v.real(), v.imag()});
        }
    json j;
    j["label"] = snapshot.label;
    j["time"] = snapshot.time;
    j["dimension"] = snapshot.matrix.rows();
    j["layout"] = "row-major complex pairs";
    j["data"] = std::move(data);
    return j.dump(2);
}

void write_field_binary(const std::string& json_path, const std::string& bin_path,
                        const VectorFieldPair& fields) {
    std::ofstream bin(bin_path, std::ios::binary);
    if (!bin) throw std::runtime_error("write_field_binary: cannot open " + bin_path);
    const GridSpec& g = fields.grid;
    std::size_t count = 0;
    for (int ix = 0; ix < g.points(0); ++ix)
        for (int iy = 0; iy < g.points(1); ++iy)
            for (int iz = 0; iz < g.points(2); ++iz) {
                const Vec3 r = g.point(ix, iy, iz);
                const std::size_t i = g.index(ix, iy, iz);
                const double row[9] = {r.x, r.y, r.z,
                                       fields.u1[i].x, fields.u1[i].y, fields.u1[i].z,
                                       fields.u2[i].x, fields.u2[i].y, fields.u2[i].z};
                bin.write(reinterpret_cast<const char*>(row), sizeof(row));
                ++count;
            }
    bin.close();

    json j;
    j["grid"] = grid_json(g);
    j["time"] = fields.time;
    j["columns"] = {"x", "y", "z", "U1x", "U1y", "U1z", "U2x", "U2y", "U2z"};
    j["dtype"] = "float64";
    j["byte_order"] = "little-endian";
    j["rows"] = count;
    j["data_file"] = bin_path;
    std::ofstream hdr(json_path);
    if (!hdr) throw std::runtime_error("write_field_binary: cannot open " + json_path);
    hdr << j.dump(2) << '\n';
}

std::vector<double> read_force_row_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_force_row_csv: cannot open " + path);
    std::vector<double> row;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        break;  // one row of couplings by distance
    }
    if (row.empty()) throw std::runtime_error("read_force_row_csv: no data in " + path);
    return row;
}

}  // namespace phonoscope
