#include "nscompat/field_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "nscompat/errors.hpp"

namespace nscompat::io {

using nlohmann::json;

namespace {

const char* const kComponents[3] = {"u1", "u2", "u3"};

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw ConfigError("field file: " + where + ": " + what);
}

double number_at(const json& v, const std::string& where) {
  if (!v.is_number()) bad(where, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) bad(where, "non-finite value");
  return d;
}

std::vector<double> numbers_at(const json& v, const std::string& where) {
  if (!v.is_array()) bad(where, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(number_at(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

Profile profile_at(const json& v, const ChebGrid& grid, const GridPtr& sample_grid, const std::string& where) {
  if (v.is_array()) return Profile::from_poly(grid, Polynomial(numbers_at(v, where)));
  if (v.is_object() && v.contains("samples")) {
    if (!sample_grid) bad(where, "sampled profile requires a top-level \"grid\" entry");
    const auto s = numbers_at(v["samples"], where + ".samples");
    if (static_cast<int>(s.size()) != sample_grid->n())
      bad(where + ".samples", "expected " + std::to_string(sample_grid->n()) + " values, got " + std::to_string(s.size()));
    Profile p(Eigen::Map<const Eigen::VectorXd>(s.data(), static_cast<Eigen::Index>(s.size())));
    return sample_grid->n() == grid.n() ? p : p.resampled(*sample_grid, grid);
  }
  bad(where, "expected coefficient array or {\"samples\": [...]}");
}

json profile_json(const Profile& p) {
  if (p.poly()) {
    json a = json::array();
    for (int i = 0; i <= p.poly()->degree(); ++i) a.push_back(p.poly()->coeff(i));
    return a;
  }
  json s = json::array();
  for (Eigen::Index i = 0; i < p.values().size(); ++i) s.push_back(p.values()(i));
  return json{{"samples", s}};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json params_json(const FlowParams& p) {
  return {{"alpha", p.alpha}, {"beta", p.beta}, {"reynolds", p.reynolds}};
}

}  // namespace

WaveField field_from_json(const json& doc, int grid_n) {
  if (!doc.is_object()) bad("$", "expected a JSON object");
  if (doc.contains("schema") && doc["schema"] != "nscompat-field") bad("schema", "expected \"nscompat-field\"");
  if (doc.contains("version") && (!doc["version"].is_number_integer() || doc["version"].get<int>() != kFieldSchemaVersion))
    bad("version", "unsupported version (expected " + std::to_string(kFieldSchemaVersion) + ")");
  if (!doc.contains("params")) bad("params", "missing");
  const json& jp = doc["params"];
  if (!jp.is_object()) bad("params", "expected an object");
  FlowParams params;
  for (const char* key : {"alpha", "beta", "reynolds"})
    if (!jp.contains(key)) bad(std::string("params.") + key, "missing");
  params.alpha = number_at(jp["alpha"], "params.alpha");
  params.beta = number_at(jp["beta"], "params.beta");
  params.reynolds = number_at(jp["reynolds"], "params.reynolds");
  try {
    params.validate();
  } catch (const DomainError& e) {
    bad("params", e.what());
  }

  GridPtr sample_grid;
  if (doc.contains("grid")) {
    const json& g = doc["grid"];
    if (!g.is_object() || !g.contains("n") || !g["n"].is_number_integer()) bad("grid.n", "expected an integer");
    if (g.contains("orientation") && g["orientation"] != "descending")
      bad("grid.orientation", "only \"descending\" (y = +1 first) is supported");
    try {
      sample_grid = build_grid(g["n"].get<int>());
    } catch (const ConfigError& e) {
      bad("grid.n", e.what());
    }
  }

  const GridPtr grid = build_grid(grid_n);
  WaveField f(params, grid, 0);
  if (!doc.contains("harmonics")) return f;
  const json& hs = doc["harmonics"];
  if (!hs.is_array()) bad("harmonics", "expected an array");
  std::vector<bool> seen;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const std::string at = "harmonics[" + std::to_string(i) + "]";
    const json& h = hs[i];
    if (!h.is_object()) bad(at, "expected an object");
    if (!h.contains("j") || !h["j"].is_number_integer() || h["j"].get<int>() < 0)
      bad(at + ".j", "expected a non-negative integer");
    const int j = h["j"].get<int>();
    if (static_cast<int>(seen.size()) <= j) seen.resize(j + 1, false);
    if (seen[j]) bad(at + ".j", "duplicate harmonic " + std::to_string(j));
    seen[j] = true;
    for (auto it = h.begin(); it != h.end(); ++it)
      if (it.key() != "j" && it.key() != "u1" && it.key() != "u2" && it.key() != "u3")
        bad(at + "." + it.key(), "unknown key");
    for (int k = 0; k < 3; ++k) {
      if (!h.contains(kComponents[k])) continue;
      const std::string ck = at + "." + kComponents[k];
      const json& c = h[kComponents[k]];
      if (!c.is_object()) bad(ck, "expected an object with \"cos\"/\"sin\"");
      for (auto it = c.begin(); it != c.end(); ++it)
        if (it.key() != "cos" && it.key() != "sin") bad(ck + "." + it.key(), "unknown key");
      if (c.contains("cos")) f[k].set_cos(j, profile_at(c["cos"], *grid, sample_grid, ck + ".cos"));
      if (c.contains("sin")) {
        Profile p = profile_at(c["sin"], *grid, sample_grid, ck + ".sin");
        if (j == 0 && !p.is_zero()) bad(ck + ".sin", "harmonic 0 has no sine part");
        if (j > 0) f[k].set_sin(j, std::move(p));
      }
    }
  }
  return f;
}

json field_to_json(const WaveField& f) {
  json doc;
  doc["schema"] = "nscompat-field";
  doc["version"] = kFieldSchemaVersion;
  doc["params"] = params_json(f.params());
  bool sampled = false;
  json hs = json::array();
  for (int j = 0; j <= f.max_harmonic(); ++j) {
    json h;
    h["j"] = j;
    bool any = false;
    for (int k = 0; k < 3; ++k) {
      json c = json::object();
      const Profile& pc = f[k].cos(j);
      const Profile& ps = f[k].sin(j);
      if (!pc.is_zero()) c["cos"] = profile_json(pc);
      if (j > 0 && !ps.is_zero()) c["sin"] = profile_json(ps);
      for (const Profile* p : {&pc, &ps})
        if (!p->is_zero() && !p->poly()) sampled = true;
      if (!c.empty()) {
        h[kComponents[k]] = c;
        any = true;
      }
    }
    if (any) hs.push_back(h);
  }
  if (sampled) doc["grid"] = {{"n", f.grid().n()}, {"orientation", "descending"}};
  doc["harmonics"] = hs;
  return doc;
}

WaveField read_field(const std::string& path, int grid_n) {
  json doc;
  try {
    doc = json::parse(slurp(path));
  } catch (const json::parse_error& e) {
    throw ConfigError(path + ": malformed JSON: " + e.what());
  }
  return field_from_json(doc, grid_n);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path);
  out << text;
  if (!out) throw ConfigError("write failed: " + path);
}

void write_json(const std::string& path, const json& doc) { write_text(path, doc.dump(2) + "\n"); }

void write_field(const std::string& path, const WaveField& f) { write_json(path, field_to_json(f)); }

json report_to_json(const CompatReport& r) {
  json doc;
  doc["schema"] = "nscompat-report";
  doc["version"] = kReportSchemaVersion;
  doc["library_version"] = kLibraryVersion;
  doc["params"] = params_json(r.params);
  doc["grid"] = {{"n", r.grid_n}, {"orientation", "descending"}};
  doc["tolerance"] = r.tolerance;
  doc["verdict"] = r.verdict == Verdict::Compatible ? "compatible" : "incompatible";
  doc["divergence_defect"] = {{"max_abs", r.defect.max_abs},
                              {"l2", r.defect.l2},
                              {"scale", r.defect.scale},
                              {"relative", r.defect.relative},
                              {"within_tolerance", r.defect_ok}};
  json coeffs = json::array();
  const int jmax = r.residual.max_harmonic();
  for (int w = 0; w < 2; ++w)
    for (int d = 0; d < 2; ++d)
      for (int j = 0; j <= jmax; ++j) {
        const CoeffPair c = r.residual.at(static_cast<Wall>(w), static_cast<Direction>(d), j);
        coeffs.push_back({{"wall", w == 0 ? "bottom" : "top"},
                          {"y", w == 0 ? -1.0 : 1.0},
                          {"direction", d == 0 ? "x" : "z"},
                          {"j", j},
                          {"cos", c.cos},
                          {"sin", c.sin}});
      }
  doc["tangential_residual"] = {{"max_abs", r.residual.max_abs()},
                                {"scale", r.residual.scale},
                                {"relative", r.residual.relative()},
                                {"within_tolerance", r.residual_ok},
                                {"mean_pressure_gradient",
                                 {{"x", r.residual.mean_pressure_gradient[0]},
                                  {"z", r.residual.mean_pressure_gradient[1]}}},
                                {"coefficients", coeffs}};
  doc["pressure_mean_mode_solvability"] = r.pressure.mean_mode_solvability;
  doc["warnings"] = r.warnings;
  return doc;
}

json admissibility_to_json(const Admissibility& a) {
  return {{"schema", "nscompat-validation"},
          {"version", kReportSchemaVersion},
          {"library_version", kLibraryVersion},
          {"admissible", a.ok()},
          {"relative_divergence", a.relative_divergence},
          {"max_wall_velocity", a.max_wall_velocity},
          {"violations", a.violations},
          {"warnings", a.warnings}};
}

json modes_to_json(const std::vector<ModeResult>& modes) {
  json arr = json::array();
  for (std::size_t i = 0; i < modes.size(); ++i)
    arr.push_back({{"index", i},
                   {"eigenvalue", {{"re", modes[i].eigenvalue.real()}, {"im", modes[i].eigenvalue.imag()}}},
                   {"growth_rate", modes[i].growth_rate()},
                   {"phase_speed", {{"re", modes[i].phase_speed().real()}, {"im", modes[i].phase_speed().imag()}}}});
  json doc{{"schema", "nscompat-modes"}, {"version", kReportSchemaVersion}, {"library_version", kLibraryVersion}};
  if (!modes.empty()) {
    doc["params"] = params_json(modes.front().params);
    doc["grid"] = {{"n", modes.front().grid->n()}};
  }
  doc["modes"] = arr;
  return doc;
}

json search_to_json(const search::AnsatzSpec& spec, const search::SearchResult& r) {
  static const char* const kSlotNames[search::kSlots] = {"u1_cos", "u1_sin", "u2_cos", "u2_sin"};
  static const char* const kKinds[] = {"defect", "full", "defect_cosine"};
  json free = json::array();
  for (int s = 0; s < search::kSlots; ++s)
    if (spec.free[s]) free.push_back(kSlotNames[s]);
  json trace = json::array();
  for (const auto& t : r.trace)
    trace.push_back({{"iteration", t.iteration},
                     {"residual_norm", t.residual_norm},
                     {"relative_defect", t.relative_defect},
                     {"relative_tangential", t.relative_tangential},
                     {"damping", t.damping}});
  std::vector<double> coeffs(r.coeffs.data(), r.coeffs.data() + r.coeffs.size());
  return {{"schema", "nscompat-search"},
          {"version", kReportSchemaVersion},
          {"library_version", kLibraryVersion},
          {"params", params_json(spec.params)},
          {"grid", {{"n", spec.grid_n}}},
          {"degree", spec.degree},
          {"free_profiles", free},
          {"residual_kind", kKinds[static_cast<int>(spec.kind)]},
          {"seed", r.seed},
          {"converged", r.converged},
          {"trivial", r.trivial},
          {"residual_norm", r.residual_norm},
          {"relative_defect", r.measures.relative_defect},
          {"relative_tangential", r.measures.relative_tangential},
          {"wall_normal_fraction", r.measures.wall_normal_fraction},
          {"coefficients", coeffs},
          {"trace", trace}};
}

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_defect_profiles_csv(std::ostream& os, const ScalarWave& defect) {
  const ChebGrid& g = defect.grid();
  const int jmax = defect.max_harmonic();
  os << "y";
  for (int j = 0; j <= jmax; ++j) os << ",cos_" << j << ",sin_" << j;
  os << '\n';
  for (int k = 0; k < g.n(); ++k) {
    os << format_double(g.points()(k));
    for (int j = 0; j <= jmax; ++j)
      os << ',' << format_double(defect.cos(j).values()(k)) << ',' << format_double(defect.sin(j).values()(k));
    os << '\n';
  }
}

void write_xy_slice_csv(std::ostream& os, const ScalarWave& s, int nx, int ny) {
  if (nx < 2 || ny < 2) throw ConfigError("slice grid needs at least 2 points per direction");
  const double lx = 2.0 * std::numbers::pi / s.params().alpha;
  os << "x,y,value\n";
  for (int i = 0; i < nx; ++i) {
    const double x = lx * i / (nx - 1);
    for (int k = 0; k < ny; ++k) {
      const double y = std::clamp(-1.0 + 2.0 * k / (ny - 1), -1.0, 1.0);
      os << format_double(x) << ',' << format_double(y) << ',' << format_double(s.eval(x, y, 0.0)) << '\n';
    }
  }
}

}  // namespace nscompat::io
