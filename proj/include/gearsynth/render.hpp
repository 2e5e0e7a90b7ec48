#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "gearsynth/actuator.hpp"
#include "gearsynth/gear_model.hpp"
#include "gearsynth/synthesizer.hpp"

namespace gearsynth {

enum class OutputFormat { table, csv, jsonl };

std::optional<OutputFormat> parse_output_format(std::string_view name);

/// Fixed-point decimal rendering via std::to_chars: locale-independent and
/// byte-stable across runs, platforms, and thread counts.
std::string format_fixed(double value, int decimals = 6);

/// Residual column text for one constraint entry: exact rationals verbatim,
/// reals fixed-6, and the distinguished "degenerate" marker for a ratio
/// entry whose denominator vanished.
std::string residual_text(const ConstraintEntry& entry);

/// Ranked solutions. table: human-readable column layout with a summary
/// header; csv: fixed 15-column data (header row first); jsonl: one object
/// per solution. csv/jsonl carry no summary lines so the stream stays pure
/// data.
void render_solution_set(std::ostream& out, const SolutionSet& set, OutputFormat format);

/// Per-constraint verdicts for one design. table: PASS/FAIL rows plus an
/// overall line; csv: constraint,satisfied,residual rows plus an overall
/// row; jsonl: one object per constraint plus an overall object.
void render_constraint_report(std::ostream& out, const GearboxDesign& design,
                              const ConstraintReport& report, OutputFormat format);

/// Sweep rows; status is "ok", "empty", or "error" per row.
void render_sweep_rows(std::ostream& out, SweepParameter parameter,
                       const std::vector<SweepRow>& rows, OutputFormat format);

/// Actuator output envelopes (peak torque, motor-side speed, reflected
/// inertia) for each actuator in the fixture.
void render_envelopes(std::ostream& out, const std::vector<ActuatorSpec>& actuators,
                      OutputFormat format);

/// Search accounting: candidates examined and nonzero per-constraint prune
/// counts, largest first. Shown when a synthesis comes back empty.
void render_prune_summary(std::ostream& out, const SolutionSet& set);

}  // namespace gearsynth
