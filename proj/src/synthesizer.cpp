#include "gearsynth/synthesizer.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace gearsynth {

std::int64_t cost_rank_key(double cost) {
  // llrint under the default rounding mode (to nearest, ties to even);
  // costs stay far below 2^63 / 1e9 so the product cannot overflow.
  return std::llrint(cost * 1e9);
}

bool solution_less(const RankedSolution& a, const RankedSolution& b) {
  return std::make_tuple(cost_rank_key(a.cost), a.design.z_sun, a.design.z_planet_in,
                         a.design.z_planet_out) <
         std::make_tuple(cost_rank_key(b.cost), b.design.z_sun, b.design.z_planet_in,
                         b.design.z_planet_out);
}

namespace {

// Everything one worker produces from its Z_S sub-range. Workers are pure
// functions of (spec, range), so merging is associative and deterministic.
struct SearchSlice {
  std::vector<RankedSolution> feasible;
  std::uint64_t examined = 0;
  PruneCounts prunes;
};

RankedSolution make_solution(const GearboxDesign& design, const SynthesisSpec& spec,
                             const Rational& ratio) {
  RankedSolution s;
  s.design = design;
  s.cost = cost(design, spec);
  s.ratio = ratio;
  s.clearance_rad = carrier_clearance(design);
  return s;
}

// Pruned enumeration of Z_S in [zs_begin, zs_end). The loop structure
// already encodes the structural equalities (rings are derived), the
// fixed-ring bound (break on Z_S + 2*Z_P1 > floor(D/M)), both minimum
// tooth counts and both differentials (Z_F - Z_O reduces to Z_P1 - Z_P2
// under the structural equalities). Only ratio, assembly, and clearance
// remain to be checked per candidate.
SearchSlice search_range(const SynthesisSpec& spec, int zs_begin, int zs_end) {
  SearchSlice slice;
  const int max_teeth = spec.max_teeth();
  for (int zs = zs_begin; zs < zs_end; ++zs) {
    for (int zp1 = spec.min_teeth_planet_in; zp1 <= max_teeth; ++zp1) {
      if (zs + 2 * zp1 > max_teeth) break;  // Z_F exceeds the bore; grows with zp1
      const int zp2_max = zp1 - spec.n_planets;
      for (int zp2 = spec.min_teeth_planet_out; zp2 <= zp2_max; ++zp2) {
        ++slice.examined;
        const GearboxDesign design = assemble_design(zs, zp1, zp2, spec);
        const auto ratio = try_gear_ratio(design);
        if (!ratio || !ratio_within_tolerance(*ratio, spec)) {
          ++slice.prunes[ConstraintId::ratio_match];
          continue;
        }
        const auto assembly = check_assembly(design);
        if (!assembly[0].satisfied) {
          ++slice.prunes[ConstraintId::assembly_sun_fixed];
          continue;
        }
        if (!assembly[1].satisfied) {
          ++slice.prunes[ConstraintId::assembly_output_planet];
          continue;
        }
        if (carrier_clearance(design) < spec.alpha_min_rad) {
          ++slice.prunes[ConstraintId::carrier_clearance];
          continue;
        }
        slice.feasible.push_back(make_solution(design, spec, *ratio));
      }
    }
  }
  return slice;
}

// Sorts the full feasible set under the total order, records its size, and
// truncates to top_k. Keys are unique per design, so the sorted sequence is
// independent of input order (and therefore of worker count).
void finalize(SolutionSet& result) {
  std::sort(result.solutions.begin(), result.solutions.end(), solution_less);
  result.feasible_count = result.solutions.size();
  const auto top_k = static_cast<std::size_t>(result.spec_echo.top_k);
  if (result.solutions.size() > top_k) result.solutions.resize(top_k);
}

}  // namespace

SolutionSet synthesize(const SynthesisSpec& spec, unsigned workers) {
  spec.validate();
  SolutionSet result;
  result.spec_echo = spec;

  const int zs_begin = spec.min_teeth_sun;
  const int zs_end = spec.max_teeth() + 1;  // may be <= zs_begin: empty domain
  const int span = std::max(0, zs_end - zs_begin);

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, std::max(1, span));

  std::vector<SearchSlice> slices(workers);
  if (workers <= 1) {
    slices[0] = search_range(spec, zs_begin, zs_end);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      const int begin = zs_begin + static_cast<int>(std::uint64_t{static_cast<unsigned>(span)} * w / workers);
      const int end = zs_begin + static_cast<int>(std::uint64_t{static_cast<unsigned>(span)} * (w + 1) / workers);
      pool.emplace_back(
          [&spec, &slices, w, begin, end] { slices[w] = search_range(spec, begin, end); });
    }
    for (auto& thread : pool) thread.join();
  }

  for (const auto& slice : slices) {
    result.candidates_examined += slice.examined;
    for (int i = 0; i < kConstraintCount; ++i)
      result.prune_counts.by_constraint[i] += slice.prunes.by_constraint[i];
    result.solutions.insert(result.solutions.end(), slice.feasible.begin(),
                            slice.feasible.end());
  }
  finalize(result);
  return result;
}

SolutionSet oracle_synthesize(const SynthesisSpec& spec) {
  spec.validate();
  SolutionSet result;
  result.spec_echo = spec;

  const int max_teeth = spec.max_teeth();
  for (int zs = spec.min_teeth_sun; zs <= max_teeth; ++zs) {
    for (int zp1 = spec.min_teeth_planet_in; zp1 <= max_teeth; ++zp1) {
      for (int zp2 = spec.min_teeth_planet_out; zp2 <= max_teeth; ++zp2) {
        ++result.candidates_examined;
        const GearboxDesign design = assemble_design(zs, zp1, zp2, spec);
        const ConstraintReport report = validate(design, spec);
        if (report.overall_feasible) {
          result.solutions.push_back(make_solution(design, spec, gear_ratio(design)));
          continue;
        }
        for (const auto& entry : report.entries) {
          if (!entry.satisfied) {
            ++result.prune_counts[entry.id];  // attribute to first failure in report order
            break;
          }
        }
      }
    }
  }
  finalize(result);
  return result;
}

std::optional<SweepParameter> parse_sweep_parameter(std::string_view name) {
  if (name == "target_ratio") return SweepParameter::target_ratio;
  if (name == "module_mm") return SweepParameter::module_mm;
  if (name == "n_planets") return SweepParameter::n_planets;
  return std::nullopt;
}

std::string_view sweep_parameter_name(SweepParameter parameter) {
  switch (parameter) {
    case SweepParameter::target_ratio: return "target_ratio";
    case SweepParameter::module_mm: return "module_mm";
    case SweepParameter::n_planets: return "n_planets";
  }
  return "unknown";
}

namespace {

// Substitutes one swept value into a copy of the base spec. Throws
// std::invalid_argument on unparseable text; the caller turns that into a
// failed row.
SynthesisSpec spec_with_value(const SynthesisSpec& base, SweepParameter parameter,
                              const std::string& text) {
  SynthesisSpec spec = base;
  switch (parameter) {
    case SweepParameter::target_ratio:
      spec.target_ratio = Rational::parse(text);
      break;
    case SweepParameter::module_mm: {
      double value = 0.0;
      const auto* last = text.data() + text.size();
      const auto [ptr, ec] = std::from_chars(text.data(), last, value);
      if (ec != std::errc() || ptr != last)
        throw std::invalid_argument("not a real number: '" + text + "'");
      spec.module_mm = value;
      break;
    }
    case SweepParameter::n_planets: {
      int value = 0;
      const auto* last = text.data() + text.size();
      const auto [ptr, ec] = std::from_chars(text.data(), last, value);
      if (ec != std::errc() || ptr != last)
        throw std::invalid_argument("not an integer: '" + text + "'");
      spec.n_planets = value;
      break;
    }
  }
  return spec;
}

}  // namespace

std::vector<SweepRow> sweep(const SynthesisSpec& base, SweepParameter parameter,
                            const std::vector<std::string>& values, unsigned workers) {
  if (values.empty()) throw std::invalid_argument("values must be non-empty");
  std::vector<SweepRow> rows;
  rows.reserve(values.size());
  for (const auto& text : values) {
    SweepRow row;
    row.value_text = text;
    try {
      const SynthesisSpec spec = spec_with_value(base, parameter, text);
      const SolutionSet set = synthesize(spec, workers);
      row.ok = true;
      row.feasible_count = set.feasible_count;
      row.candidates_examined = set.candidates_examined;
      if (!set.solutions.empty()) row.best = set.solutions.front();
    } catch (const std::exception& e) {
      row.ok = false;
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace gearsynth
