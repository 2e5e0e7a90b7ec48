#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gearsynth/actuator.hpp"
#include "gearsynth/gear_model.hpp"

namespace gearsynth {

/// Parse/validation failure in a spec file; what() reads "file:line: message"
/// (or "file: message" for whole-file problems, line == 0).
class SpecFileError : public std::runtime_error {
 public:
  SpecFileError(std::string file, int line, const std::string& message);

  const std::string& file() const { return file_; }
  int line() const { return line_; }

 private:
  std::string file_;
  int line_;
};

/// Documentation of the key=value spec-file format (keys, defaults, an
/// example); embedded in the CLI --help output.
std::string_view spec_file_format_help();

/// Parses a synthesis spec from key=value text. '#' starts a comment, blank
/// lines are skipped. Required keys: target_ratio, rotor_bore_mm, module_mm.
/// Optional keys take their documented defaults. Unknown and duplicate keys
/// are errors (they catch typos), reported with their line number.
SynthesisSpec parse_synthesis_spec(std::string_view text,
                                   std::string_view filename = "<string>");
SynthesisSpec load_synthesis_spec(const std::string& path);

/// Parses actuator fixtures from the same key=value format. Each block opens
/// with `actuator = NAME` followed by the seven numeric fields; every field
/// is required per block.
std::vector<ActuatorSpec> parse_actuator_specs(std::string_view text,
                                               std::string_view filename = "<string>");
std::vector<ActuatorSpec> load_actuator_specs(const std::string& path);

}  // namespace gearsynth
