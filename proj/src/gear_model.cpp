#include "gearsynth/gear_model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gearsynth {

namespace {

// Canonical remainder in [0, n), also for negative dividends.
std::int64_t mod_floor(std::int64_t value, std::int64_t n) {
  const std::int64_t r = value % n;
  return r < 0 ? r + n : r;
}

ConstraintEntry exact_entry(ConstraintId id, bool satisfied, Rational residual) {
  ConstraintEntry e;
  e.id = id;
  e.satisfied = satisfied;
  e.residual = residual;
  return e;
}

}  // namespace

void GearboxDesign::validate() const {
  if (z_sun <= 0 || z_planet_in <= 0 || z_planet_out <= 0 || z_ring_fixed <= 0 ||
      z_ring_out <= 0)
    throw std::invalid_argument("tooth counts must be positive");
  if (n_planets < 2) throw std::invalid_argument("n_planets must be at least 2");
  if (!(module_mm > 0.0)) throw std::invalid_argument("module_mm must be positive");
  if (!(rotor_bore_mm > 0.0)) throw std::invalid_argument("rotor_bore_mm must be positive");
}

void SynthesisSpec::validate() const {
  if (!(target_ratio > Rational(1)))
    throw std::invalid_argument("target_ratio must be greater than 1");
  if (!(rotor_bore_mm > 0.0)) throw std::invalid_argument("rotor_bore_mm must be positive");
  if (!(module_mm > 0.0)) throw std::invalid_argument("module_mm must be positive");
  if (n_planets < 2) throw std::invalid_argument("n_planets must be at least 2");
  if (min_teeth_sun < 1 || min_teeth_planet_in < 1 || min_teeth_planet_out < 1)
    throw std::invalid_argument("minimum tooth counts must be at least 1");
  if (alpha_min_rad < 0.0) throw std::invalid_argument("alpha_min_rad must be non-negative");
  if (alpha_min_rad >= std::numbers::pi / n_planets)
    throw std::invalid_argument("alpha_min_rad must be less than pi/n_planets");
  if (ratio_tolerance.is_negative())
    throw std::invalid_argument("ratio_tolerance must be non-negative");
  if (top_k < 1) throw std::invalid_argument("top_k must be at least 1");
}

int SynthesisSpec::max_teeth() const {
  return static_cast<int>(std::floor(rotor_bore_mm / module_mm));
}

std::string_view constraint_name(ConstraintId id) {
  switch (id) {
    case ConstraintId::structural_fixed_ring: return "structural_fixed_ring";
    case ConstraintId::structural_output_ring: return "structural_output_ring";
    case ConstraintId::assembly_sun_fixed: return "assembly_sun_fixed";
    case ConstraintId::assembly_output_planet: return "assembly_output_planet";
    case ConstraintId::ratio_match: return "ratio_match";
    case ConstraintId::carrier_clearance: return "carrier_clearance";
    case ConstraintId::min_teeth_sun: return "min_teeth_sun";
    case ConstraintId::min_teeth_planet_in: return "min_teeth_planet_in";
    case ConstraintId::min_teeth_planet_out: return "min_teeth_planet_out";
    case ConstraintId::fixed_ring_bound: return "fixed_ring_bound";
    case ConstraintId::planet_differential: return "planet_differential";
    case ConstraintId::ring_differential: return "ring_differential";
  }
  return "unknown";
}

std::string_view constraint_formula(ConstraintId id) {
  switch (id) {
    case ConstraintId::structural_fixed_ring: return "Z_F = Z_S + 2*Z_P1";
    case ConstraintId::structural_output_ring: return "Z_O = Z_S + Z_P1 + Z_P2";
    case ConstraintId::assembly_sun_fixed: return "(Z_F + Z_S) mod n_P = 0";
    case ConstraintId::assembly_output_planet: return "(2*Z_O - 2*Z_P2) mod n_P = 0";
    case ConstraintId::ratio_match: return "G(Z) = G_target";
    case ConstraintId::carrier_clearance:
      return "pi/n_P - asin(Z_P1/(Z_S+Z_P1)) >= alpha_min";
    case ConstraintId::min_teeth_sun: return "Z_S >= Z_S_min";
    case ConstraintId::min_teeth_planet_in: return "Z_P1 >= Z_P1_min";
    case ConstraintId::min_teeth_planet_out: return "Z_P2 >= Z_P2_min";
    case ConstraintId::fixed_ring_bound: return "Z_F <= floor(D/M)";
    case ConstraintId::planet_differential: return "Z_P1 - Z_P2 >= n_P";
    case ConstraintId::ring_differential: return "Z_F - Z_O >= n_P";
  }
  return "";
}

std::optional<Rational> try_gear_ratio(const GearboxDesign& d) {
  if (d.z_ring_fixed == 2 * d.z_planet_in || d.z_planet_in == d.z_planet_out)
    return std::nullopt;
  const __int128 num = 2 * static_cast<__int128>(d.z_planet_in) *
                       (static_cast<__int128>(d.z_ring_fixed) - d.z_planet_in + d.z_planet_out);
  const __int128 den = (static_cast<__int128>(d.z_ring_fixed) - 2 * static_cast<__int128>(d.z_planet_in)) *
                       (static_cast<__int128>(d.z_planet_in) - d.z_planet_out);
  return Rational::make(num, den);
}

Rational gear_ratio(const GearboxDesign& d) {
  const auto g = try_gear_ratio(d);
  if (!g)
    throw std::domain_error(
        "gear ratio undefined: Z_F = 2*Z_P1 or Z_P1 = Z_P2 (kinematically singular)");
  return *g;
}

std::array<ConstraintEntry, 2> check_structural(const GearboxDesign& d) {
  const std::int64_t r_fixed =
      static_cast<std::int64_t>(d.z_ring_fixed) - d.z_sun - 2 * static_cast<std::int64_t>(d.z_planet_in);
  const std::int64_t r_out =
      static_cast<std::int64_t>(d.z_ring_out) - d.z_sun - d.z_planet_in - d.z_planet_out;
  return {
      exact_entry(ConstraintId::structural_fixed_ring, r_fixed == 0, Rational(r_fixed)),
      exact_entry(ConstraintId::structural_output_ring, r_out == 0, Rational(r_out)),
  };
}

std::array<ConstraintEntry, 2> check_assembly(const GearboxDesign& d) {
  const std::int64_t r_sun_fixed =
      mod_floor(static_cast<std::int64_t>(d.z_ring_fixed) + d.z_sun, d.n_planets);
  const std::int64_t r_out_planet = mod_floor(
      2 * (static_cast<std::int64_t>(d.z_ring_out) - d.z_planet_out), d.n_planets);
  return {
      exact_entry(ConstraintId::assembly_sun_fixed, r_sun_fixed == 0, Rational(r_sun_fixed)),
      exact_entry(ConstraintId::assembly_output_planet, r_out_planet == 0,
                  Rational(r_out_planet)),
  };
}

double carrier_clearance(const GearboxDesign& d) {
  // Planet centers sit at radius proportional to Z_S + Z_P1; adjacent planet
  // circles leave angle pi/n_P - asin(Z_P1/(Z_S+Z_P1)) for a carrier spoke.
  const double ratio = static_cast<double>(d.z_planet_in) /
                       static_cast<double>(d.z_sun + d.z_planet_in);
  return std::numbers::pi / d.n_planets - std::asin(ratio);
}

std::array<ConstraintEntry, 6> check_sizes(const GearboxDesign& d, const SynthesisSpec& spec) {
  const std::int64_t sun_slack = d.z_sun - static_cast<std::int64_t>(spec.min_teeth_sun);
  const std::int64_t pin_slack =
      d.z_planet_in - static_cast<std::int64_t>(spec.min_teeth_planet_in);
  const std::int64_t pout_slack =
      d.z_planet_out - static_cast<std::int64_t>(spec.min_teeth_planet_out);
  // Z_F <= D/M is equivalent to Z_F <= floor(D/M) for integral Z_F; the
  // floored form keeps the residual an exact whole-tooth slack.
  const std::int64_t bore_slack = static_cast<std::int64_t>(spec.max_teeth()) - d.z_ring_fixed;
  const std::int64_t planet_diff =
      static_cast<std::int64_t>(d.z_planet_in) - d.z_planet_out - d.n_planets;
  const std::int64_t ring_diff =
      static_cast<std::int64_t>(d.z_ring_fixed) - d.z_ring_out - d.n_planets;
  return {
      exact_entry(ConstraintId::min_teeth_sun, sun_slack >= 0, Rational(sun_slack)),
      exact_entry(ConstraintId::min_teeth_planet_in, pin_slack >= 0, Rational(pin_slack)),
      exact_entry(ConstraintId::min_teeth_planet_out, pout_slack >= 0, Rational(pout_slack)),
      exact_entry(ConstraintId::fixed_ring_bound, bore_slack >= 0, Rational(bore_slack)),
      exact_entry(ConstraintId::planet_differential, planet_diff >= 0, Rational(planet_diff)),
      exact_entry(ConstraintId::ring_differential, ring_diff >= 0, Rational(ring_diff)),
  };
}

double cost(const GearboxDesign& d, const SynthesisSpec& spec) {
  const double dm = spec.rotor_bore_mm / spec.module_mm;
  const double inv_sun = 1.0 / d.z_sun;
  const double ring_gap = d.z_ring_fixed - dm;
  const double p1 = static_cast<double>(d.z_planet_in);
  const double p2 = static_cast<double>(d.z_planet_out);
  const double out = static_cast<double>(d.z_ring_out);
  return inv_sun * inv_sun + ring_gap * ring_gap + p1 * p1 + p2 * p2 + out * out;
}

std::pair<int, int> derive_rings(int z_sun, int z_planet_in, int z_planet_out) {
  return {z_sun + 2 * z_planet_in, z_sun + z_planet_in + z_planet_out};
}

GearboxDesign assemble_design(int z_sun, int z_planet_in, int z_planet_out,
                              const SynthesisSpec& spec) {
  const auto [z_ring_fixed, z_ring_out] = derive_rings(z_sun, z_planet_in, z_planet_out);
  GearboxDesign d;
  d.z_sun = z_sun;
  d.z_planet_in = z_planet_in;
  d.z_planet_out = z_planet_out;
  d.z_ring_fixed = z_ring_fixed;
  d.z_ring_out = z_ring_out;
  d.n_planets = spec.n_planets;
  d.module_mm = spec.module_mm;
  d.rotor_bore_mm = spec.rotor_bore_mm;
  return d;
}

bool ratio_within_tolerance(const Rational& ratio, const SynthesisSpec& spec) {
  if (spec.ratio_tolerance.is_zero()) return ratio == spec.target_ratio;
  return (ratio - spec.target_ratio).abs() <= spec.ratio_tolerance * spec.target_ratio;
}

ConstraintReport validate(const GearboxDesign& d, const SynthesisSpec& spec) {
  ConstraintReport report;

  const auto structural = check_structural(d);
  report.entries[0] = structural[0];
  report.entries[1] = structural[1];

  const auto assembly = check_assembly(d);
  report.entries[2] = assembly[0];
  report.entries[3] = assembly[1];

  ConstraintEntry ratio_entry;
  ratio_entry.id = ConstraintId::ratio_match;
  if (const auto g = try_gear_ratio(d)) {
    ratio_entry.satisfied = ratio_within_tolerance(*g, spec);
    ratio_entry.residual = *g - spec.target_ratio;
  } else {
    ratio_entry.satisfied = false;
    ratio_entry.degenerate = true;
    ratio_entry.residual = Rational(0);
  }
  report.entries[4] = ratio_entry;

  ConstraintEntry clearance_entry;
  clearance_entry.id = ConstraintId::carrier_clearance;
  const double alpha = carrier_clearance(d);
  clearance_entry.satisfied = alpha >= spec.alpha_min_rad;
  clearance_entry.residual = alpha - spec.alpha_min_rad;
  report.entries[5] = clearance_entry;

  const auto sizes = check_sizes(d, spec);
  for (int i = 0; i < 6; ++i) report.entries[6 + i] = sizes[i];

  report.overall_feasible = true;
  for (const auto& entry : report.entries)
    if (!entry.satisfied) report.overall_feasible = false;
  return report;
}

std::array<double, 5> pitch_diameters(const GearboxDesign& d) {
  return {d.z_sun * d.module_mm, d.z_planet_in * d.module_mm, d.z_planet_out * d.module_mm,
          d.z_ring_fixed * d.module_mm, d.z_ring_out * d.module_mm};
}

}  // namespace gearsynth
