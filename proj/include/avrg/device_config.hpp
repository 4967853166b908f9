// Device configuration file: one JSON object describing a physical AVRG
// build (piston bank, nozzle, air, ring defaults, piston-velocity
// calibration). Unknown keys are rejected to catch typos early.
//
// {
//   "n": 5,
//   "speaker_diameter_mm": 51.5,
//   "max_displacement_mm": 8.2,
//   "formation_number": 4.03,
//   "aperture_mm": 30.0,                  // optional; derived when absent
//   "air_density_kg_m3": 1.204,           // optional
//   "ring_speed_m_s": 0.72,               // optional
//   "ring_radius_mm": 50.0,               // optional
//   "velocity_calibration": {"0.001": 568.83, ..., "1": 2032.20}  // optional
// }
#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "avrg/physics.hpp"
#include "avrg/waveform.hpp"

namespace avrg {

struct DeviceConfig {
  int n = 1;
  double speaker_diameter_mm = 0.0;
  double max_displacement_mm = 0.0;
  double formation_number = physics::kDefaultFormationNumber;
  std::optional<double> aperture_mm;
  double air_density_kg_m3 = physics::kDefaultAirDensityKgM3;
  double ring_speed_m_s = physics::kDefaultRingSpeedMS;
  double ring_radius_mm = physics::kDefaultRingRadiusMm;
  waveform::PistonCalibration calibration = waveform::reference_calibration();

  physics::SpeakerSpec speakers(double peak_velocity_mm_s) const;
  // Configured aperture if present, otherwise the designed one.
  physics::NozzleSpec nozzle() const;
};

DeviceConfig parse_device_config(const std::string& json_text,
                                 const std::string& origin = "<string>");
DeviceConfig load_device_config(const std::filesystem::path& path);

}  // namespace avrg
