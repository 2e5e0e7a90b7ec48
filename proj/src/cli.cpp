#include "gearsynth/cli.hpp"

#include <array>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gearsynth/render.hpp"
#include "gearsynth/spec_file.hpp"
#include "gearsynth/synthesizer.hpp"

namespace gearsynth::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitEmpty = 2;
constexpr int kExitInfeasible = 3;

std::vector<std::string> split_values(const std::string& text) {
  std::vector<std::string> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::size_t end = comma == std::string::npos ? text.size() : comma;
    std::string token = text.substr(pos, end - pos);
    const auto first = token.find_first_not_of(" \t");
    const auto last = token.find_last_not_of(" \t");
    token = first == std::string::npos ? std::string() : token.substr(first, last - first + 1);
    if (!(token.empty() && values.empty() && comma == std::string::npos))
      values.push_back(token);
    pos = end + 1;
  }
  return values;
}

int run_synth(const std::string& spec_path, OutputFormat format, unsigned workers,
              bool quiet, std::ostream& out, std::ostream& err) {
  const SynthesisSpec spec = load_synthesis_spec(spec_path);
  const SolutionSet set = synthesize(spec, workers);
  render_solution_set(out, set, format);
  if (set.solutions.empty()) {
    // Explain what emptied the domain. In machine formats the summary goes
    // to stderr so stdout stays pure data.
    if (format == OutputFormat::table) {
      out << '\n';
      render_prune_summary(out, set);
    } else if (!quiet) {
      err << "no feasible design\n";
      render_prune_summary(err, set);
    }
    return kExitEmpty;
  }
  return kExitOk;
}

int run_check(const std::string& spec_path, const std::array<int, 5>& teeth,
              OutputFormat format, std::ostream& out) {
  const SynthesisSpec spec = load_synthesis_spec(spec_path);
  GearboxDesign design;
  design.z_sun = teeth[0];
  design.z_planet_in = teeth[1];
  design.z_planet_out = teeth[2];
  design.z_ring_fixed = teeth[3];
  design.z_ring_out = teeth[4];
  design.n_planets = spec.n_planets;
  design.module_mm = spec.module_mm;
  design.rotor_bore_mm = spec.rotor_bore_mm;
  design.validate();  // malformed counts -> input error

  const ConstraintReport report = validate(design, spec);
  render_constraint_report(out, design, report, format);
  return report.overall_feasible ? kExitOk : kExitInfeasible;
}

int run_sweep(const std::string& spec_path, const std::string& param_name,
              const std::string& values_text, OutputFormat format, unsigned workers,
              std::ostream& out) {
  const SynthesisSpec base = load_synthesis_spec(spec_path);
  const auto parameter = parse_sweep_parameter(param_name);
  if (!parameter)
    throw std::invalid_argument("unknown sweep parameter '" + param_name +
                                "' (expected target_ratio, module_mm, or n_planets)");
  const std::vector<SweepRow> rows = sweep(base, *parameter, split_values(values_text), workers);
  render_sweep_rows(out, *parameter, rows, format);
  for (const auto& row : rows)
    if (!row.ok) return kExitInputError;  // rendered above; a bad value is an input error
  return kExitOk;
}

int run_envelope(const std::string& spec_path, OutputFormat format, std::ostream& out) {
  const std::vector<ActuatorSpec> actuators = load_actuator_specs(spec_path);
  render_envelopes(out, actuators, format);
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "gearsynth - tooth-count synthesis and validation for 3K compound "
      "planetary gearboxes"};
  app.require_subcommand(1);
  app.fallthrough();
  app.footer(std::string(spec_file_format_help()));

  std::string spec_path;
  std::string format_name = "table";
  bool quiet = false;
  unsigned workers = 1;
  app.add_option("--spec", spec_path, "spec file (synthesis spec, or actuator fixture for envelope)");
  app.add_option("--format", format_name, "output format")
      ->check(CLI::IsMember({"table", "csv", "jsonl"}))
      ->capture_default_str();
  app.add_flag("--quiet", quiet, "suppress diagnostics on stderr");
  app.add_option("--workers", workers,
                 "parallel search workers; 0 = hardware concurrency (output is "
                 "identical for every worker count)")
      ->capture_default_str();

  auto* synth = app.add_subcommand("synth", "synthesize ranked feasible designs for a spec");
  auto* check = app.add_subcommand("check", "evaluate every constraint for one design");
  std::array<int, 5> teeth{};
  check->add_option("--z-sun", teeth[0], "sun gear tooth count")->required();
  check->add_option("--z-planet-in", teeth[1], "input planet tooth count")->required();
  check->add_option("--z-planet-out", teeth[2], "output planet tooth count")->required();
  check->add_option("--z-ring-fixed", teeth[3], "fixed ring tooth count")->required();
  check->add_option("--z-ring-out", teeth[4], "output ring tooth count")->required();

  auto* sweep_cmd = app.add_subcommand("sweep", "rerun synthesis across values of one parameter");
  std::string param_name;
  std::string values_text;
  sweep_cmd->add_option("--param", param_name, "target_ratio, module_mm, or n_planets")
      ->required();
  sweep_cmd->add_option("--values", values_text, "comma-separated values")->required();

  auto* envelope = app.add_subcommand("envelope", "actuator output envelopes from a fixture file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  const OutputFormat format = *parse_output_format(format_name);  // IsMember guarantees a match

  try {
    if (spec_path.empty()) throw std::invalid_argument("--spec is required");
    if (app.got_subcommand(synth)) return run_synth(spec_path, format, workers, quiet, out, err);
    if (app.got_subcommand(check)) return run_check(spec_path, teeth, format, out);
    if (app.got_subcommand(sweep_cmd))
      return run_sweep(spec_path, param_name, values_text, format, workers, out);
    if (app.got_subcommand(envelope)) return run_envelope(spec_path, format, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace gearsynth::cli
