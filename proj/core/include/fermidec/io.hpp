#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "fermidec/sampling.hpp"
#include "fermidec/series.hpp"
#include "fermidec/states.hpp"

namespace fermidec::io {

// State files: {"basis": "angmom" | "slater", "amplitudes": [[re, im] x 6]}.
// Readers accept either basis and renormalize; when norm_deviation is given it
// receives |raw norm - 1| so callers can warn about sloppy inputs.
AngMomState parse_state_json(const std::string& text, double* norm_deviation = nullptr);
AngMomState read_state_json(const std::filesystem::path& path, double* norm_deviation = nullptr);

// Writers emit 17 significant digits so a write/read cycle is lossless.
std::string state_to_json(const AngMomState& state, BasisTag basis = BasisTag::AngMom);
void write_state_json(const AngMomState& state, const std::filesystem::path& path,
                      BasisTag basis = BasisTag::AngMom);

// Time series CSV, 12 significant digits. Header is t,Cf,K,SvN,purity, with a
// p column after t when with_p is set (damping channel output).
std::string timeseries_csv(const std::vector<SeriesRow>& rows, bool with_p);

// Atlas CSV: x,y,z,cf0,cf_inf,P with the trailing field empty when cf0 = 0.
std::string atlas_csv(const std::vector<PersistenceRecord>& records);

std::string format_sig(double v, int digits);

std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

}  // namespace fermidec::io
