#include <doctest.h>

#include <string>

#include "gearsynth/actuator.hpp"
#include "gearsynth/spec_file.hpp"

using namespace gearsynth;

namespace {
const std::string kDataDir = GEARSYNTH_DATA_DIR;
}

TEST_CASE("a minimal spec takes documented defaults") {
  const SynthesisSpec spec = parse_synthesis_spec(
      "target_ratio = 20\n"
      "rotor_bore_mm = 79.4\n"
      "module_mm = 0.6\n");
  CHECK(spec.target_ratio == Rational(20));
  CHECK(spec.rotor_bore_mm == 79.4);
  CHECK(spec.module_mm == 0.6);
  CHECK(spec.n_planets == 4);
  CHECK(spec.min_teeth_sun == 17);
  CHECK(spec.min_teeth_planet_in == 17);
  CHECK(spec.min_teeth_planet_out == 17);
  CHECK(spec.alpha_min_rad == 0.1);
  CHECK(spec.ratio_tolerance == Rational(0));
  CHECK(spec.top_k == 10);
}

TEST_CASE("every key is honored; comments and blanks are skipped") {
  const SynthesisSpec spec = parse_synthesis_spec(
      "# gearbox search\n"
      "\n"
      "target_ratio = 41/2   # exact rational\n"
      "rotor_bore_mm = 100\n"
      "module_mm = 1\n"
      "n_planets = 5\n"
      "min_teeth_sun = 12\n"
      "min_teeth_planet_in = 13\n"
      "min_teeth_planet_out = 14\n"
      "alpha_min_rad = 0.05\n"
      "ratio_tolerance = 0.01\n"
      "top_k = 3\n");
  CHECK(spec.target_ratio == Rational(41, 2));
  CHECK(spec.n_planets == 5);
  CHECK(spec.min_teeth_sun == 12);
  CHECK(spec.min_teeth_planet_in == 13);
  CHECK(spec.min_teeth_planet_out == 14);
  CHECK(spec.alpha_min_rad == 0.05);
  CHECK(spec.ratio_tolerance == Rational(1, 100));
  CHECK(spec.top_k == 3);
}

TEST_CASE("unknown keys are flagged with their line") {
  try {
    parse_synthesis_spec(
        "target_ratio = 20\n"
        "rotor_bore_mm = 79.4\n"
        "module_mm = 0.6\n"
        "module = 0.6\n",
        "bad.spec");
    FAIL("expected SpecFileError");
  } catch (const SpecFileError& e) {
    CHECK(e.file() == "bad.spec");
    CHECK(e.line() == 4);
    CHECK(std::string(e.what()).find("unknown key 'module'") != std::string::npos);
    CHECK(std::string(e.what()).find("bad.spec:4:") != std::string::npos);
  }
}

TEST_CASE("duplicate keys are flagged with their line") {
  try {
    parse_synthesis_spec(
        "target_ratio = 20\n"
        "target_ratio = 21\n"
        "rotor_bore_mm = 79.4\n"
        "module_mm = 0.6\n");
    FAIL("expected SpecFileError");
  } catch (const SpecFileError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("duplicate key") != std::string::npos);
  }
}

TEST_CASE("missing required keys are an error") {
  CHECK_THROWS_WITH_AS(parse_synthesis_spec("rotor_bore_mm = 79.4\nmodule_mm = 0.6\n", "x"),
                       "x: missing required key 'target_ratio'", SpecFileError);
  CHECK_THROWS_WITH_AS(parse_synthesis_spec("target_ratio = 20\nmodule_mm = 0.6\n", "x"),
                       "x: missing required key 'rotor_bore_mm'", SpecFileError);
  CHECK_THROWS_WITH_AS(parse_synthesis_spec("target_ratio = 20\nrotor_bore_mm = 79.4\n", "x"),
                       "x: missing required key 'module_mm'", SpecFileError);
}

TEST_CASE("a zero module is rejected with the invariant message") {
  try {
    parse_synthesis_spec(
        "target_ratio = 20\n"
        "rotor_bore_mm = 79.4\n"
        "module_mm = 0\n");
    FAIL("expected SpecFileError");
  } catch (const SpecFileError& e) {
    CHECK(std::string(e.what()).find("module_mm must be positive") != std::string::npos);
  }
}

TEST_CASE("malformed lines and values are flagged") {
  CHECK_THROWS_AS(parse_synthesis_spec("target_ratio\n"), SpecFileError);
  CHECK_THROWS_AS(parse_synthesis_spec("= 20\n"), SpecFileError);
  CHECK_THROWS_AS(parse_synthesis_spec("target_ratio =\n"), SpecFileError);
  CHECK_THROWS_AS(parse_synthesis_spec(
                      "target_ratio = twenty\nrotor_bore_mm = 79.4\nmodule_mm = 0.6\n"),
                  SpecFileError);
  CHECK_THROWS_AS(parse_synthesis_spec(
                      "target_ratio = 20\nrotor_bore_mm = wide\nmodule_mm = 0.6\n"),
                  SpecFileError);
  CHECK_THROWS_AS(parse_synthesis_spec(
                      "target_ratio = 20\nrotor_bore_mm = 79.4\nmodule_mm = 0.6\ntop_k = 2.5\n"),
                  SpecFileError);
}

TEST_CASE("a missing file is a spec-file error") {
  CHECK_THROWS_AS(load_synthesis_spec("/nonexistent/path.spec"), SpecFileError);
}

TEST_CASE("the shipped reference spec loads") {
  const SynthesisSpec spec = load_synthesis_spec(kDataDir + "/d151.spec");
  CHECK(spec.target_ratio == Rational(20));
  CHECK(spec.rotor_bore_mm == 79.4);
  CHECK(spec.module_mm == 0.6);
  CHECK(spec.n_planets == 4);
  CHECK(spec.alpha_min_rad == 0.1);
  CHECK(spec.top_k == 12);
  CHECK(spec.max_teeth() == 132);
}

TEST_CASE("actuator fixtures parse into blocks") {
  const auto actuators = parse_actuator_specs(
      "actuator = A\n"
      "torque_constant_nm_per_a = 0.5\n"
      "peak_current_a = 10\n"
      "gear_ratio = 6\n"
      "peak_output_speed_rad_s = 30\n"
      "bus_voltage_v = 48\n"
      "rotor_inertia_kg_m2 = 0.001\n"
      "mass_kg = 1.5\n"
      "\n"
      "actuator = B\n"
      "torque_constant_nm_per_a = 0.1\n"
      "peak_current_a = 20\n"
      "gear_ratio = 9\n"
      "peak_output_speed_rad_s = 15\n"
      "bus_voltage_v = 24\n"
      "rotor_inertia_kg_m2 = 0.0004\n"
      "mass_kg = 0.9\n");
  REQUIRE(actuators.size() == 2);
  CHECK(actuators[0].name == "A");
  CHECK(peak_output_torque(actuators[0]) == doctest::Approx(30.0));
  CHECK(actuators[1].name == "B");
  CHECK(actuators[1].gear_ratio == 9.0);
}

TEST_CASE("actuator fixture structure is validated") {
  // Key outside any block.
  CHECK_THROWS_AS(parse_actuator_specs("mass_kg = 1\n"), SpecFileError);
  // Unknown key inside a block.
  CHECK_THROWS_AS(parse_actuator_specs("actuator = A\nmass = 1\n"), SpecFileError);
  // Missing field.
  try {
    parse_actuator_specs("actuator = A\nmass_kg = 1\n", "f.spec");
    FAIL("expected SpecFileError");
  } catch (const SpecFileError& e) {
    CHECK(std::string(e.what()).find("missing key") != std::string::npos);
    CHECK(std::string(e.what()).find("'A'") != std::string::npos);
  }
  // Duplicate field.
  CHECK_THROWS_AS(parse_actuator_specs("actuator = A\nmass_kg = 1\nmass_kg = 2\n"),
                  SpecFileError);
  // Non-positive value.
  CHECK_THROWS_AS(parse_actuator_specs(
                      "actuator = A\n"
                      "torque_constant_nm_per_a = 0\n"
                      "peak_current_a = 10\n"
                      "gear_ratio = 6\n"
                      "peak_output_speed_rad_s = 30\n"
                      "bus_voltage_v = 48\n"
                      "rotor_inertia_kg_m2 = 0.001\n"
                      "mass_kg = 1.5\n"),
                  SpecFileError);
  // No blocks at all.
  CHECK_THROWS_AS(parse_actuator_specs("# empty\n"), SpecFileError);
}

TEST_CASE("the shipped actuator fixture reproduces the nameplate envelope") {
  const auto actuators = load_actuator_specs(kDataDir + "/actuators.spec");
  REQUIRE(actuators.size() == 2);
  CHECK(actuators[0].name == "D151");
  CHECK(peak_output_torque(actuators[0]) == 320.0);
  CHECK(actuators[0].bus_voltage_v == 67.2);
  CHECK(actuators[0].mass_kg == 2.27);
  CHECK(actuators[1].name == "D110A");
  CHECK(peak_output_torque(actuators[1]) == 176.0);
  CHECK(actuators[1].rotor_inertia_kg_m2 == 0.0002);
}
