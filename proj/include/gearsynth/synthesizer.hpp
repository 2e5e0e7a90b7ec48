#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gearsynth/gear_model.hpp"

namespace gearsynth {

/// One feasible design together with its ranking data.
struct RankedSolution {
  GearboxDesign design;
  double cost = 0.0;
  Rational ratio;             // exact reduction ratio
  double clearance_rad = 0.0; // carrier clearance angle
};

/// Per-constraint elimination counters, indexed by ConstraintId.
struct PruneCounts {
  std::array<std::uint64_t, kConstraintCount> by_constraint{};

  std::uint64_t& operator[](ConstraintId id) {
    return by_constraint[static_cast<int>(id)];
  }
  std::uint64_t operator[](ConstraintId id) const {
    return by_constraint[static_cast<int>(id)];
  }
  std::uint64_t total() const {
    std::uint64_t sum = 0;
    for (const auto count : by_constraint) sum += count;
    return sum;
  }
};

/// Result of one synthesis run: the ranked head of the feasible set plus
/// search accounting. Every listed design re-validates as feasible; the
/// list is ascending under the total order (quantized cost, then the
/// (Z_S, Z_P1, Z_P2) lexicographic key) and holds at most spec.top_k rows.
struct SolutionSet {
  SynthesisSpec spec_echo;
  std::vector<RankedSolution> solutions;
  std::uint64_t candidates_examined = 0;  // triples the engine enumerated
  PruneCounts prune_counts;               // infeasible candidates by first failed constraint
  std::uint64_t feasible_count = 0;       // full feasible-set cardinality (pre-truncation)
};

/// Cost quantized to 1e-9 for ranking. Two costs within one quantum compare
/// equal and fall through to the lexicographic tooth key, which makes the
/// solution order a genuine total order (no intransitive epsilon compares).
std::int64_t cost_rank_key(double cost);

/// The total order on solutions: (cost_rank_key, Z_S, Z_P1, Z_P2) ascending.
bool solution_less(const RankedSolution& a, const RankedSolution& b);

/// Exhaustive synthesis over the pruned domain
///   Z_S in [min, floor(D/M)], Z_P1 capped by Z_S + 2*Z_P1 <= floor(D/M),
///   Z_P2 in [min, Z_P1 - n_P],
/// with rings derived structurally and the remaining constraints checked
/// per candidate (ratio, assembly, clearance). Globally optimal on this
/// finite domain; result is identical to oracle_synthesize on every spec.
///
/// workers > 1 partitions the Z_S range; the merged output is byte-identical
/// to the single-threaded run. workers == 0 means hardware concurrency.
/// An empty feasible set is a normal result, not an error. Throws
/// std::invalid_argument if the spec violates its invariants.
SolutionSet synthesize(const SynthesisSpec& spec, unsigned workers = 1);

/// Brute-force baseline: single-threaded triple loop over the full box
/// [min, floor(D/M)]^3 with no pruning and no early exits; every candidate
/// goes through validate(). Same output contract as synthesize. Exists to
/// cross-check the pruned engine, so it must stay independent of it.
SolutionSet oracle_synthesize(const SynthesisSpec& spec);

/// Spec fields that cmd_sweep can vary.
enum class SweepParameter { target_ratio, module_mm, n_planets };

std::optional<SweepParameter> parse_sweep_parameter(std::string_view name);
std::string_view sweep_parameter_name(SweepParameter parameter);

/// One sweep result row. A value that fails to parse or yields an invalid
/// spec marks its row failed (ok == false) without aborting the sweep.
struct SweepRow {
  std::string value_text;  // the swept value, as given
  bool ok = false;
  std::string error;       // set when !ok
  std::uint64_t feasible_count = 0;
  std::uint64_t candidates_examined = 0;
  std::optional<RankedSolution> best;  // rank-1 design; empty if none feasible
};

/// Runs synthesize once per value with that value substituted into the base
/// spec. Values are parsed per parameter: exact rational for target_ratio,
/// real for module_mm, integer for n_planets. Throws std::invalid_argument
/// when values is empty.
std::vector<SweepRow> sweep(const SynthesisSpec& base, SweepParameter parameter,
                            const std::vector<std::string>& values,
                            unsigned workers = 1);

}  // namespace gearsynth
