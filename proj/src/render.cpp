#include "gearsynth/render.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <numbers>

namespace gearsynth {

namespace {

constexpr double kRadToDeg = 180.0 / std::numbers::pi;

// Quotes a CSV field only when it needs it (comma, quote, newline).
std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
  std::string quoted = "\"";
  for (const char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string json_string(std::string_view text) {
  std::string out = "\"";
  for (const char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
  return out;
}

// Minimal monospace table: computed column widths, numeric columns
// right-aligned. All cells arrive pre-formatted as strings, so no stream
// locale can touch the bytes.
void print_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows,
                 const std::vector<bool>& right_align) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());

  const auto print_row = [&](const std::vector<std::string>& row) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += "  ";
      const std::string pad(width[c] - row[c].size(), ' ');
      line += right_align[c] ? pad + row[c] : row[c] + pad;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  };

  print_row(header);
  std::string rule;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (c > 0) rule += "  ";
    rule += std::string(width[c], '-');
  }
  out << rule << '\n';
  for (const auto& row : rows) print_row(row);
}

std::vector<std::string> solution_cells(int rank, const RankedSolution& s) {
  const auto pitch = pitch_diameters(s.design);
  return {std::to_string(rank),
          std::to_string(s.design.z_sun),
          std::to_string(s.design.z_planet_in),
          std::to_string(s.design.z_planet_out),
          std::to_string(s.design.z_ring_fixed),
          std::to_string(s.design.z_ring_out),
          format_fixed(s.cost),
          s.ratio.str_fraction(),
          format_fixed(s.clearance_rad),
          format_fixed(s.clearance_rad * kRadToDeg),
          format_fixed(pitch[0]),
          format_fixed(pitch[1]),
          format_fixed(pitch[2]),
          format_fixed(pitch[3]),
          format_fixed(pitch[4])};
}

const std::vector<std::string>& solution_columns() {
  static const std::vector<std::string> kColumns = {
      "rank",          "z_sun",         "z_planet_in",      "z_planet_out",
      "z_ring_fixed",  "z_ring_out",    "cost",             "ratio",
      "clearance_rad", "clearance_deg", "pitch_sun_mm",     "pitch_planet_in_mm",
      "pitch_planet_out_mm", "pitch_ring_fixed_mm", "pitch_ring_out_mm"};
  return kColumns;
}

void csv_line(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out << ',';
    out << csv_field(cells[i]);
  }
  out << '\n';
}

void solution_json(std::ostream& out, int rank, const RankedSolution& s) {
  const auto pitch = pitch_diameters(s.design);
  out << "{\"rank\":" << rank << ",\"z_sun\":" << s.design.z_sun
      << ",\"z_planet_in\":" << s.design.z_planet_in
      << ",\"z_planet_out\":" << s.design.z_planet_out
      << ",\"z_ring_fixed\":" << s.design.z_ring_fixed
      << ",\"z_ring_out\":" << s.design.z_ring_out
      << ",\"n_planets\":" << s.design.n_planets
      << ",\"module_mm\":" << format_fixed(s.design.module_mm)
      << ",\"rotor_bore_mm\":" << format_fixed(s.design.rotor_bore_mm)
      << ",\"cost\":" << format_fixed(s.cost)
      << ",\"ratio\":" << json_string(s.ratio.str_fraction())
      << ",\"clearance_rad\":" << format_fixed(s.clearance_rad)
      << ",\"clearance_deg\":" << format_fixed(s.clearance_rad * kRadToDeg)
      << ",\"pitch_mm\":[" << format_fixed(pitch[0]) << ',' << format_fixed(pitch[1]) << ','
      << format_fixed(pitch[2]) << ',' << format_fixed(pitch[3]) << ','
      << format_fixed(pitch[4]) << "]}\n";
}

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view name) {
  if (name == "table") return OutputFormat::table;
  if (name == "csv") return OutputFormat::csv;
  if (name == "jsonl") return OutputFormat::jsonl;
  return std::nullopt;
}

std::string format_fixed(double value, int decimals) {
  char buf[64];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, decimals);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

std::string residual_text(const ConstraintEntry& entry) {
  if (entry.degenerate) return "degenerate";
  if (entry.exact()) return entry.residual_exact().str();
  return format_fixed(std::get<double>(entry.residual));
}

void render_solution_set(std::ostream& out, const SolutionSet& set, OutputFormat format) {
  switch (format) {
    case OutputFormat::table: {
      const auto& spec = set.spec_echo;
      out << "target ratio " << spec.target_ratio.str() << ", bore " << format_fixed(spec.rotor_bore_mm, 3)
          << " mm, module " << format_fixed(spec.module_mm, 3) << " mm, " << spec.n_planets
          << " planets, max teeth " << spec.max_teeth() << '\n';
      out << set.candidates_examined << " candidates examined, " << set.feasible_count
          << " feasible, showing " << set.solutions.size() << '\n' << '\n';
      if (set.solutions.empty()) {
        out << "no feasible design\n";
        return;
      }
      std::vector<std::vector<std::string>> rows;
      rows.reserve(set.solutions.size());
      for (std::size_t i = 0; i < set.solutions.size(); ++i)
        rows.push_back(solution_cells(static_cast<int>(i) + 1, set.solutions[i]));
      std::vector<bool> right(solution_columns().size(), true);
      print_table(out, solution_columns(), rows, right);
      return;
    }
    case OutputFormat::csv: {
      csv_line(out, solution_columns());
      for (std::size_t i = 0; i < set.solutions.size(); ++i)
        csv_line(out, solution_cells(static_cast<int>(i) + 1, set.solutions[i]));
      return;
    }
    case OutputFormat::jsonl: {
      for (std::size_t i = 0; i < set.solutions.size(); ++i)
        solution_json(out, static_cast<int>(i) + 1, set.solutions[i]);
      return;
    }
  }
}

void render_constraint_report(std::ostream& out, const GearboxDesign& design,
                              const ConstraintReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::table: {
      out << "design (" << design.z_sun << ", " << design.z_planet_in << ", "
          << design.z_planet_out << ", " << design.z_ring_fixed << ", " << design.z_ring_out
          << "), " << design.n_planets << " planets\n\n";
      std::vector<std::vector<std::string>> rows;
      for (const auto& entry : report.entries)
        rows.push_back({entry.satisfied ? "PASS" : "FAIL",
                        std::string(constraint_name(entry.id)),
                        std::string(constraint_formula(entry.id)), residual_text(entry)});
      print_table(out, {"status", "constraint", "condition", "residual"}, rows,
                  {false, false, false, true});
      out << '\n' << (report.overall_feasible ? "FEASIBLE" : "INFEASIBLE") << '\n';
      return;
    }
    case OutputFormat::csv: {
      csv_line(out, {"constraint", "satisfied", "residual"});
      for (const auto& entry : report.entries)
        csv_line(out, {std::string(constraint_name(entry.id)),
                       entry.satisfied ? "true" : "false", residual_text(entry)});
      csv_line(out, {"overall_feasible", report.overall_feasible ? "true" : "false", ""});
      return;
    }
    case OutputFormat::jsonl: {
      for (const auto& entry : report.entries) {
        out << "{\"constraint\":" << json_string(constraint_name(entry.id))
            << ",\"satisfied\":" << (entry.satisfied ? "true" : "false");
        if (entry.degenerate)
          out << ",\"degenerate\":true,\"residual\":null";
        else if (entry.exact())
          out << ",\"residual\":" << json_string(entry.residual_exact().str());
        else
          out << ",\"residual\":" << format_fixed(std::get<double>(entry.residual));
        out << "}\n";
      }
      out << "{\"overall_feasible\":" << (report.overall_feasible ? "true" : "false")
          << "}\n";
      return;
    }
  }
}

namespace {

std::string sweep_status(const SweepRow& row) {
  if (!row.ok) return "error";
  return row.feasible_count == 0 ? "empty" : "ok";
}

std::vector<std::string> sweep_cells(const SweepRow& row) {
  std::vector<std::string> cells = {row.value_text, sweep_status(row)};
  if (!row.ok) {
    cells.insert(cells.end(), {"", "", "", "", "", "", "", "", "", "", row.error});
    return cells;
  }
  cells.push_back(std::to_string(row.feasible_count));
  cells.push_back(std::to_string(row.candidates_examined));
  if (row.best) {
    const auto& s = *row.best;
    cells.insert(cells.end(),
                 {std::to_string(s.design.z_sun), std::to_string(s.design.z_planet_in),
                  std::to_string(s.design.z_planet_out), std::to_string(s.design.z_ring_fixed),
                  std::to_string(s.design.z_ring_out), format_fixed(s.cost),
                  s.ratio.str_fraction(), format_fixed(s.clearance_rad), ""});
  } else {
    cells.insert(cells.end(), {"", "", "", "", "", "", "", "", "no feasible design"});
  }
  return cells;
}

const std::vector<std::string>& sweep_columns() {
  static const std::vector<std::string> kColumns = {
      "value",        "status",     "feasible_count", "candidates_examined",
      "z_sun",        "z_planet_in", "z_planet_out",  "z_ring_fixed",
      "z_ring_out",   "cost",       "ratio",          "clearance_rad",
      "note"};
  return kColumns;
}

}  // namespace

void render_sweep_rows(std::ostream& out, SweepParameter parameter,
                       const std::vector<SweepRow>& rows, OutputFormat format) {
  switch (format) {
    case OutputFormat::table: {
      out << "sweep over " << sweep_parameter_name(parameter) << '\n' << '\n';
      std::vector<std::vector<std::string>> cells;
      cells.reserve(rows.size());
      for (const auto& row : rows) cells.push_back(sweep_cells(row));
      std::vector<bool> right(sweep_columns().size(), true);
      right[1] = false;                          // status
      right[sweep_columns().size() - 1] = false; // note
      print_table(out, sweep_columns(), cells, right);
      return;
    }
    case OutputFormat::csv: {
      csv_line(out, sweep_columns());
      for (const auto& row : rows) csv_line(out, sweep_cells(row));
      return;
    }
    case OutputFormat::jsonl: {
      for (const auto& row : rows) {
        out << "{\"parameter\":" << json_string(sweep_parameter_name(parameter))
            << ",\"value\":" << json_string(row.value_text)
            << ",\"status\":" << json_string(sweep_status(row));
        if (!row.ok) {
          out << ",\"error\":" << json_string(row.error) << "}\n";
          continue;
        }
        out << ",\"feasible_count\":" << row.feasible_count
            << ",\"candidates_examined\":" << row.candidates_examined;
        if (row.best) {
          const auto& s = *row.best;
          out << ",\"best\":{\"z_sun\":" << s.design.z_sun
              << ",\"z_planet_in\":" << s.design.z_planet_in
              << ",\"z_planet_out\":" << s.design.z_planet_out
              << ",\"z_ring_fixed\":" << s.design.z_ring_fixed
              << ",\"z_ring_out\":" << s.design.z_ring_out
              << ",\"cost\":" << format_fixed(s.cost)
              << ",\"ratio\":" << json_string(s.ratio.str_fraction())
              << ",\"clearance_rad\":" << format_fixed(s.clearance_rad) << "}";
        } else {
          out << ",\"best\":null";
        }
        out << "}\n";
      }
      return;
    }
  }
}

namespace {

const std::vector<std::string>& envelope_columns() {
  static const std::vector<std::string> kColumns = {"name",
                                                    "gear_ratio",
                                                    "peak_output_torque_nm",
                                                    "peak_output_speed_rad_s",
                                                    "motor_side_speed_rad_s",
                                                    "reflected_inertia_kg_m2",
                                                    "mass_kg"};
  return kColumns;
}

std::vector<std::string> envelope_cells(const ActuatorSpec& a) {
  return {a.name,
          format_fixed(a.gear_ratio),
          format_fixed(peak_output_torque(a)),
          format_fixed(a.peak_output_speed_rad_s),
          format_fixed(motor_side_speed(a)),
          format_fixed(reflected_inertia(a)),
          format_fixed(a.mass_kg)};
}

}  // namespace

void render_envelopes(std::ostream& out, const std::vector<ActuatorSpec>& actuators,
                      OutputFormat format) {
  switch (format) {
    case OutputFormat::table: {
      std::vector<std::vector<std::string>> rows;
      rows.reserve(actuators.size());
      for (const auto& a : actuators) rows.push_back(envelope_cells(a));
      std::vector<bool> right(envelope_columns().size(), true);
      right[0] = false;  // name
      print_table(out, envelope_columns(), rows, right);
      return;
    }
    case OutputFormat::csv: {
      csv_line(out, envelope_columns());
      for (const auto& a : actuators) csv_line(out, envelope_cells(a));
      return;
    }
    case OutputFormat::jsonl: {
      for (const auto& a : actuators) {
        out << "{\"name\":" << json_string(a.name)
            << ",\"gear_ratio\":" << format_fixed(a.gear_ratio)
            << ",\"peak_output_torque_nm\":" << format_fixed(peak_output_torque(a))
            << ",\"peak_output_speed_rad_s\":" << format_fixed(a.peak_output_speed_rad_s)
            << ",\"motor_side_speed_rad_s\":" << format_fixed(motor_side_speed(a))
            << ",\"reflected_inertia_kg_m2\":" << format_fixed(reflected_inertia(a))
            << ",\"mass_kg\":" << format_fixed(a.mass_kg) << "}\n";
      }
      return;
    }
  }
}

void render_prune_summary(std::ostream& out, const SolutionSet& set) {
  out << "candidates examined: " << set.candidates_examined << '\n';
  out << "feasible: " << set.feasible_count << '\n';
  // Nonzero prune counters, largest first; ties keep report order.
  std::vector<int> order;
  for (int i = 0; i < kConstraintCount; ++i)
    if (set.prune_counts.by_constraint[i] > 0) order.push_back(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return set.prune_counts.by_constraint[a] > set.prune_counts.by_constraint[b];
  });
  for (const int i : order)
    out << "pruned by " << constraint_name(static_cast<ConstraintId>(i)) << ": "
        << set.prune_counts.by_constraint[i] << '\n';
}

}  // namespace gearsynth
