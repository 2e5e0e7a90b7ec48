#pragma once

#include <stdexcept>
#include <string>

namespace gearsynth {

/// Nameplate data for one quasi-direct-drive actuator: motor-side constants
/// plus the reduction stage in front of the output.
struct ActuatorSpec {
  std::string name;
  double torque_constant_nm_per_a = 0.0;  // k_t, motor side
  double peak_current_a = 0.0;
  double gear_ratio = 0.0;                // output:input reduction, e.g. 20
  double peak_output_speed_rad_s = 0.0;   // at the stated bus voltage
  double bus_voltage_v = 0.0;
  double rotor_inertia_kg_m2 = 0.0;       // motor side
  double mass_kg = 0.0;

  /// Throws std::invalid_argument unless every numeric field is strictly
  /// positive and the name is non-empty.
  void validate() const {
    if (name.empty()) throw std::invalid_argument("actuator name must be non-empty");
    const auto require_positive = [this](double v, const char* field) {
      if (!(v > 0.0))
        throw std::invalid_argument("actuator '" + name + "': " + field +
                                    " must be positive");
    };
    require_positive(torque_constant_nm_per_a, "torque_constant_nm_per_a");
    require_positive(peak_current_a, "peak_current_a");
    require_positive(gear_ratio, "gear_ratio");
    require_positive(peak_output_speed_rad_s, "peak_output_speed_rad_s");
    require_positive(bus_voltage_v, "bus_voltage_v");
    require_positive(rotor_inertia_kg_m2, "rotor_inertia_kg_m2");
    require_positive(mass_kg, "mass_kg");
  }
};

/// Peak torque at the output shaft: k_t * I_peak * G [N*m].
inline double peak_output_torque(const ActuatorSpec& spec) {
  return spec.torque_constant_nm_per_a * spec.peak_current_a * spec.gear_ratio;
}

/// Motor-side angular velocity when the output turns at its peak speed:
/// omega_out * G [rad/s].
inline double motor_side_speed(const ActuatorSpec& spec) {
  return spec.peak_output_speed_rad_s * spec.gear_ratio;
}

/// Rotor inertia as seen at the output: J_rotor * G^2 [kg*m^2].
inline double reflected_inertia(const ActuatorSpec& spec) {
  return spec.rotor_inertia_kg_m2 * spec.gear_ratio * spec.gear_ratio;
}

}  // namespace gearsynth
