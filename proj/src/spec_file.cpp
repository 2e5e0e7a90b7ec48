#include "gearsynth/spec_file.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace gearsynth {

namespace {

std::string format_message(const std::string& file, int line, const std::string& message) {
  if (line > 0) return file + ":" + std::to_string(line) + ": " + message;
  return file + ": " + message;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

struct KeyValue {
  int line = 0;
  std::string key;
  std::string value;
};

// Shared line discipline for both file kinds: comments, blanks, key = value.
std::vector<KeyValue> scan_lines(std::string_view text, std::string_view filename) {
  std::vector<KeyValue> pairs;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                           : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw SpecFileError(std::string(filename), line_no, "expected 'key = value'");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty())
      throw SpecFileError(std::string(filename), line_no, "missing key before '='");
    if (value.empty())
      throw SpecFileError(std::string(filename), line_no,
                          "missing value for key '" + std::string(key) + "'");
    pairs.push_back({line_no, std::string(key), std::string(value)});
  }
  return pairs;
}

double parse_real(const KeyValue& kv, std::string_view filename) {
  double value = 0.0;
  const char* last = kv.value.data() + kv.value.size();
  const auto [ptr, ec] = std::from_chars(kv.value.data(), last, value);
  if (ec != std::errc() || ptr != last)
    throw SpecFileError(std::string(filename), kv.line,
                        "value for '" + kv.key + "' is not a real number: '" + kv.value + "'");
  return value;
}

int parse_integer(const KeyValue& kv, std::string_view filename) {
  int value = 0;
  const char* last = kv.value.data() + kv.value.size();
  const auto [ptr, ec] = std::from_chars(kv.value.data(), last, value);
  if (ec != std::errc() || ptr != last)
    throw SpecFileError(std::string(filename), kv.line,
                        "value for '" + kv.key + "' is not an integer: '" + kv.value + "'");
  return value;
}

Rational parse_ratio(const KeyValue& kv, std::string_view filename) {
  try {
    return Rational::parse(kv.value);
  } catch (const std::exception& e) {
    throw SpecFileError(std::string(filename), kv.line,
                        "value for '" + kv.key + "': " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecFileError(path, 0, "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

SpecFileError::SpecFileError(std::string file, int line, const std::string& message)
    : std::runtime_error(format_message(file, line, message)),
      file_(std::move(file)),
      line_(line) {}

std::string_view spec_file_format_help() {
  return R"(Spec files are plain 'key = value' lines; '#' starts a comment.

Synthesis spec keys:
  target_ratio        required  target reduction, exact: '20', '41/2', or '20.5'
  rotor_bore_mm       required  rotor inner diameter D, real > 0
  module_mm           required  gear module M, real > 0
  n_planets           optional  planet branches, integer >= 2   (default 4)
  min_teeth_sun       optional  integer >= 1                    (default 17)
  min_teeth_planet_in optional  integer >= 1                    (default 17)
  min_teeth_planet_out optional integer >= 1                    (default 17)
  alpha_min_rad       optional  carrier clearance floor, rad    (default 0.1)
  ratio_tolerance     optional  relative ratio slack, exact     (default 0)
  top_k               optional  ranked solutions to report      (default 10)

Actuator fixtures use the same format; each block starts with
'actuator = NAME' followed by the seven required fields
torque_constant_nm_per_a, peak_current_a, gear_ratio,
peak_output_speed_rad_s, bus_voltage_v, rotor_inertia_kg_m2, mass_kg.
)";
}

SynthesisSpec parse_synthesis_spec(std::string_view text, std::string_view filename) {
  SynthesisSpec spec;
  std::set<std::string> seen;
  bool has_target = false, has_bore = false, has_module = false;

  for (const auto& kv : scan_lines(text, filename)) {
    if (!seen.insert(kv.key).second)
      throw SpecFileError(std::string(filename), kv.line, "duplicate key '" + kv.key + "'");

    if (kv.key == "target_ratio") {
      spec.target_ratio = parse_ratio(kv, filename);
      has_target = true;
    } else if (kv.key == "rotor_bore_mm") {
      spec.rotor_bore_mm = parse_real(kv, filename);
      has_bore = true;
    } else if (kv.key == "module_mm") {
      spec.module_mm = parse_real(kv, filename);
      has_module = true;
    } else if (kv.key == "n_planets") {
      spec.n_planets = parse_integer(kv, filename);
    } else if (kv.key == "min_teeth_sun") {
      spec.min_teeth_sun = parse_integer(kv, filename);
    } else if (kv.key == "min_teeth_planet_in") {
      spec.min_teeth_planet_in = parse_integer(kv, filename);
    } else if (kv.key == "min_teeth_planet_out") {
      spec.min_teeth_planet_out = parse_integer(kv, filename);
    } else if (kv.key == "alpha_min_rad") {
      spec.alpha_min_rad = parse_real(kv, filename);
    } else if (kv.key == "ratio_tolerance") {
      spec.ratio_tolerance = parse_ratio(kv, filename);
    } else if (kv.key == "top_k") {
      spec.top_k = parse_integer(kv, filename);
    } else {
      throw SpecFileError(std::string(filename), kv.line, "unknown key '" + kv.key + "'");
    }
  }

  if (!has_target)
    throw SpecFileError(std::string(filename), 0, "missing required key 'target_ratio'");
  if (!has_bore)
    throw SpecFileError(std::string(filename), 0, "missing required key 'rotor_bore_mm'");
  if (!has_module)
    throw SpecFileError(std::string(filename), 0, "missing required key 'module_mm'");

  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw SpecFileError(std::string(filename), 0, e.what());
  }
  return spec;
}

SynthesisSpec load_synthesis_spec(const std::string& path) {
  return parse_synthesis_spec(read_file(path), path);
}

std::vector<ActuatorSpec> parse_actuator_specs(std::string_view text,
                                               std::string_view filename) {
  static const std::set<std::string> kFields = {
      "torque_constant_nm_per_a", "peak_current_a",       "gear_ratio",
      "peak_output_speed_rad_s",  "bus_voltage_v",        "rotor_inertia_kg_m2",
      "mass_kg"};

  std::vector<ActuatorSpec> actuators;
  ActuatorSpec current;
  int block_line = 0;  // 0: no open block
  std::set<std::string> seen;

  const auto close_block = [&](std::string_view fname) {
    for (const auto& field : kFields)
      if (!seen.count(field))
        throw SpecFileError(std::string(fname), block_line,
                            "actuator '" + current.name + "' is missing key '" + field + "'");
    try {
      current.validate();
    } catch (const std::invalid_argument& e) {
      throw SpecFileError(std::string(fname), block_line, e.what());
    }
    actuators.push_back(current);
  };

  for (const auto& kv : scan_lines(text, filename)) {
    if (kv.key == "actuator") {
      if (block_line > 0) close_block(filename);
      current = ActuatorSpec{};
      current.name = kv.value;
      seen.clear();
      block_line = kv.line;
      continue;
    }
    if (block_line == 0)
      throw SpecFileError(std::string(filename), kv.line,
                          "key '" + kv.key + "' appears before any 'actuator = NAME' line");
    if (!kFields.count(kv.key))
      throw SpecFileError(std::string(filename), kv.line, "unknown key '" + kv.key + "'");
    if (!seen.insert(kv.key).second)
      throw SpecFileError(std::string(filename), kv.line, "duplicate key '" + kv.key + "'");

    const double value = parse_real(kv, filename);
    if (kv.key == "torque_constant_nm_per_a") current.torque_constant_nm_per_a = value;
    else if (kv.key == "peak_current_a") current.peak_current_a = value;
    else if (kv.key == "gear_ratio") current.gear_ratio = value;
    else if (kv.key == "peak_output_speed_rad_s") current.peak_output_speed_rad_s = value;
    else if (kv.key == "bus_voltage_v") current.bus_voltage_v = value;
    else if (kv.key == "rotor_inertia_kg_m2") current.rotor_inertia_kg_m2 = value;
    else if (kv.key == "mass_kg") current.mass_kg = value;
  }
  if (block_line > 0) close_block(filename);

  if (actuators.empty())
    throw SpecFileError(std::string(filename), 0, "no actuators defined");
  return actuators;
}

std::vector<ActuatorSpec> load_actuator_specs(const std::string& path) {
  return parse_actuator_specs(read_file(path), path);
}

}  // namespace gearsynth
