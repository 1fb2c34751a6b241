#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "nscompat/compat.hpp"
#include "nscompat/fieldops.hpp"
#include "nscompat/modes.hpp"
#include "nscompat/search.hpp"
#include "nscompat/wave_field.hpp"

namespace nscompat::io {

inline constexpr const char* kLibraryVersion = "0.1.0";
inline constexpr int kFieldSchemaVersion = 1;
inline constexpr int kReportSchemaVersion = 1;

/// Field file:
///   { "schema": "nscompat-field", "version": 1,
///     "params": {"alpha": a, "beta": b, "reynolds": re},
///     "grid": {"n": n, "orientation": "descending"},          (only needed for sampled profiles)
///     "harmonics": [ {"j": 1, "u1": {"cos": [c0, c1, ...], "sin": {"samples": [...]}}, ...} ] }
/// Arrays are polynomial coefficients in ascending powers of y; "samples" lists values at the
/// Chebyshev–Gauss–Lobatto points ordered from y = +1 down to y = -1. Missing entries are zero.
/// Throws ConfigError naming the offending JSON path.
WaveField field_from_json(const nlohmann::json& doc, int grid_n = kDefaultGridPoints);
nlohmann::json field_to_json(const WaveField& f);

WaveField read_field(const std::string& path, int grid_n = kDefaultGridPoints);
void write_field(const std::string& path, const WaveField& f);

nlohmann::json report_to_json(const CompatReport& r);
nlohmann::json admissibility_to_json(const Admissibility& a);
nlohmann::json modes_to_json(const std::vector<ModeResult>& modes);
nlohmann::json search_to_json(const search::AnsatzSpec& spec, const search::SearchResult& r);

/// y, then cos_j, sin_j columns of the defect for j = 0..J on the collocation points.
void write_defect_profiles_csv(std::ostream& os, const ScalarWave& defect);
/// x, y, value at z = 0 on nx points over [0, 2π/α] (inclusive) times ny uniform points in [-1, 1].
void write_xy_slice_csv(std::ostream& os, const ScalarWave& s, int nx = 128, int ny = 64);

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

void write_text(const std::string& path, const std::string& text);
void write_json(const std::string& path, const nlohmann::json& doc);

}  // namespace nscompat::io
