#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <variant>

#include "gearsynth/rational.hpp"

namespace gearsynth {

/// One 3K compound planetary gearbox candidate: five tooth counts plus the
/// geometry parameters needed to evaluate it. The sun (Z_S) is driven by the
/// rotor; each of the n_P planet branches carries a rigidly joined pair
/// (Z_P1 meshing sun and fixed ring, Z_P2 meshing the output ring).
struct GearboxDesign {
  int z_sun = 0;         // Z_S
  int z_planet_in = 0;   // Z_P1
  int z_planet_out = 0;  // Z_P2
  int z_ring_fixed = 0;  // Z_F
  int z_ring_out = 0;    // Z_O
  int n_planets = 4;     // n_P, equally spaced branches
  double module_mm = 1.0;     // gear module M
  double rotor_bore_mm = 1.0; // rotor inner diameter D

  /// Throws std::invalid_argument if any field violates the type
  /// invariants (positive tooth counts, n_planets >= 2, positive M and D).
  void validate() const;
};

/// Search problem definition: the target reduction, the geometric envelope,
/// and the feasibility thresholds.
struct SynthesisSpec {
  Rational target_ratio;        // G_target, > 1
  double rotor_bore_mm = 0.0;   // D
  double module_mm = 0.0;       // M
  int n_planets = 4;
  int min_teeth_sun = 17;
  int min_teeth_planet_in = 17;
  int min_teeth_planet_out = 17;
  double alpha_min_rad = 0.1;   // carrier clearance threshold
  Rational ratio_tolerance;     // relative; 0 means exact ratio match
  int top_k = 10;               // ranked solutions to report

  /// Throws std::invalid_argument on invariant violations. An empty search
  /// domain (floor(D/M) < min_teeth_sun) is NOT an error: synthesis reports
  /// an empty result for it.
  void validate() const;

  /// Largest admissible tooth count, floor(D / M). No gear larger than the
  /// fixed ring exists and the fixed ring must fit in the rotor bore.
  int max_teeth() const;
};

/// The twelve feasibility constraints, in ConstraintReport order.
enum class ConstraintId : int {
  structural_fixed_ring = 0,  // Z_F = Z_S + 2*Z_P1
  structural_output_ring,     // Z_O = Z_S + Z_P1 + Z_P2
  assembly_sun_fixed,         // n_P divides Z_F + Z_S
  assembly_output_planet,     // n_P divides 2*Z_O - 2*Z_P2
  ratio_match,                // G(Z) = G_target (within ratio_tolerance)
  carrier_clearance,          // pi/n_P - asin(Z_P1/(Z_S+Z_P1)) >= alpha_min
  min_teeth_sun,              // Z_S >= min
  min_teeth_planet_in,        // Z_P1 >= min
  min_teeth_planet_out,       // Z_P2 >= min
  fixed_ring_bound,           // Z_F <= floor(D/M)
  planet_differential,        // Z_P1 - Z_P2 >= n_P
  ring_differential,          // Z_F - Z_O >= n_P
};

inline constexpr int kConstraintCount = 12;

/// Verdict and residual for one constraint. Residuals are exact rationals
/// for every integer/rational constraint; only the carrier-clearance entry
/// carries a real-valued residual (alpha - alpha_min).
struct ConstraintEntry {
  ConstraintId id{};
  bool satisfied = false;
  bool degenerate = false;  // ratio entry only: kinematically singular denominator
  std::variant<Rational, double> residual{Rational(0)};

  bool exact() const { return std::holds_alternative<Rational>(residual); }
  const Rational& residual_exact() const { return std::get<Rational>(residual); }
  /// Residual as a double regardless of representation (diagnostic use).
  double residual_value() const {
    return exact() ? residual_exact().to_double() : std::get<double>(residual);
  }
};

/// Full per-constraint evaluation of one design against one spec.
struct ConstraintReport {
  std::array<ConstraintEntry, kConstraintCount> entries{};
  bool overall_feasible = false;

  const ConstraintEntry& entry(ConstraintId id) const {
    return entries[static_cast<int>(id)];
  }
};

/// Short stable identifier, e.g. "ratio_match"; used in reports and CSV.
std::string_view constraint_name(ConstraintId id);
/// Human-readable constraint formula, e.g. "Z_F = Z_S + 2*Z_P1".
std::string_view constraint_formula(ConstraintId id);

/// Exact reduction ratio of the 3K train:
///   G = 2*Z_P1*(Z_F - Z_P1 + Z_P2) / ((Z_F - 2*Z_P1)*(Z_P1 - Z_P2)).
/// Throws std::domain_error when Z_F = 2*Z_P1 or Z_P1 = Z_P2 (kinematically
/// singular: the denominator vanishes).
Rational gear_ratio(const GearboxDesign& design);

/// gear_ratio without the throw: nullopt on a singular denominator.
std::optional<Rational> try_gear_ratio(const GearboxDesign& design);

/// Structural feasibility: Z_F = Z_S + 2*Z_P1 and Z_O = Z_S + Z_P1 + Z_P2.
/// Residuals are the signed integer differences (lhs - rhs).
std::array<ConstraintEntry, 2> check_structural(const GearboxDesign& design);

/// Assembly of n_P equally spaced branches: n_P | (Z_F + Z_S) and
/// n_P | (2*Z_O - 2*Z_P2). Residuals are the remainders in [0, n_P).
std::array<ConstraintEntry, 2> check_assembly(const GearboxDesign& design);

/// Angular clearance left for the carrier spokes between adjacent planets:
///   alpha = pi/n_P - asin(Z_P1 / (Z_S + Z_P1))   [radians]
double carrier_clearance(const GearboxDesign& design);

/// Size constraints: three minimum tooth counts, the bore bound
/// Z_F <= floor(D/M), and the two planet/ring differentials. Residuals are
/// integer slacks (value - bound), all exact.
std::array<ConstraintEntry, 6> check_sizes(const GearboxDesign& design,
                                           const SynthesisSpec& spec);

/// Objective value
///   J = (1/Z_S)^2 + (Z_F - D/M)^2 + Z_P1^2 + Z_P2^2 + Z_O^2,
/// smaller is better: it rewards a large sun and a fixed ring close to the
/// bore (both enlarge the hollow shaft) and penalizes large planet/output
/// gears. Evaluated in double precision with D and M from the spec.
double cost(const GearboxDesign& design, const SynthesisSpec& spec);

/// Ring tooth counts implied by the structural equalities:
///   (Z_S + 2*Z_P1, Z_S + Z_P1 + Z_P2).
std::pair<int, int> derive_rings(int z_sun, int z_planet_in, int z_planet_out);

/// Builds the full design for a (Z_S, Z_P1, Z_P2) triple: rings from
/// derive_rings, planet count and geometry from the spec.
GearboxDesign assemble_design(int z_sun, int z_planet_in, int z_planet_out,
                              const SynthesisSpec& spec);

/// Exact-rational ratio acceptance: with zero tolerance, ratio must equal
/// target_ratio; otherwise |ratio - target| <= tolerance * target.
bool ratio_within_tolerance(const Rational& ratio, const SynthesisSpec& spec);

/// Evaluates all twelve constraints in ConstraintId order. The ratio entry
/// records a singular denominator as failed-with-degenerate-marker instead
/// of throwing.
ConstraintReport validate(const GearboxDesign& design, const SynthesisSpec& spec);

/// Pitch diameters Z_i * M in millimeters, in field order
/// (sun, planet_in, planet_out, ring_fixed, ring_out); M from the design.
std::array<double, 5> pitch_diameters(const GearboxDesign& design);

}  // namespace gearsynth
