#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "phonoscope/cavity.hpp"
#include "phonoscope/duality.hpp"
#include "phonoscope/fock.hpp"
#include "phonoscope/kinetics.hpp"
#include "phonoscope/lattice.hpp"
#include "phonoscope/pairing.hpp"

namespace phonoscope {

/// Round-trip-safe decimal form ("%.17g"): identical doubles always produce
/// identical text, which is what keeps exports byte-stable.
std::string format_double(double v);

// --- CSV emitters (header row + data rows, deterministic formatting) -------

void write_field_csv(std::ostream& out, const VectorFieldPair& fields);
void write_invariants_csv(std::ostream& out, const InvariantResult& result);
void write_modes_csv(std::ostream& out, const ModeSet& modes);
void write_evolution_csv(std::ostream& out, const ModeSet& modes,
                         const std::vector<ModeState>& states,
                         const std::vector<double>& times);
void write_dispersion_csv(std::ostream& out, const std::vector<NormalMode>& modes);
void write_channels_csv(std::ostream& out, const std::vector<ScatteringChannel>& channels);
void write_pairs_csv(std::ostream& out, const AttractiveScan& scan);

// --- JSON emitters (serialized text of the same payloads) ------------------

std::string field_json(const VectorFieldPair& fields);
std::string invariants_json(const InvariantResult& result);
std::string modes_json(const ModeSet& modes);
std::string evolution_json(const ModeSet& modes, const std::vector<ModeState>& states,
                           const std::vector<double>& times);
std::string dispersion_json(const std::vector<NormalMode>& modes);
std::string channel_summary_json(const std::vector<ScatteringChannel>& channels);
std::string channels_json(const std::vector<ScatteringChannel>& channels);
std::string pairs_json(const AttractiveScan& scan);
std::string operator_snapshot_json(const OperatorSnapshot& snapshot);

/// Large-grid export: JSON header describing the layout plus a flat binary
/// file of little-endian float64 in CSV column order (x,y,z,U1*,U2*).
void write_field_binary(const std::string& json_path, const std::string& bin_path,
                        const VectorFieldPair& fields);

/// Force-constant row (couplings by neighbour distance) from a one-row CSV.
std::vector<double> read_force_row_csv(const std::string& path);

}  // namespace phonoscope
