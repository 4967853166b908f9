// Slug-model design math for speaker-driven air-vortex-ring generators.
//
// An AVRG pushes a slug of air of length L through an aperture of diameter d
// using n speaker pistons of diameter D and stroke delta. Incompressibility
// ties piston volume/flow to exit volume/flow, and the formation number
// f = L/d (clean-ring limit, roughly 3.6 - 4.5) fixes the aperture size for a
// given piston bank:
//
//   d      = cbrt(n * delta * D^2 / f)
//   U_exit = (n * D^2 / d^2) * U_p
//   I      = (1/4) * pi * rho * n * f * d * D^2 * U_p
//
// User-facing geometry is in mm and mm/s; exit velocity and momentum are
// reported in SI. All functions are pure.
#pragma once

#include "avrg/errors.hpp"

namespace avrg::physics {

// Recommended clean-ring formation-number window.
inline constexpr double kFormationNumberLow = 3.6;
inline constexpr double kFormationNumberHigh = 4.5;

// Defaults for quantities the device config may override.
inline constexpr double kDefaultAirDensityKgM3 = 1.204;  // dry air, 20 C
inline constexpr double kDefaultFormationNumber = 4.03;
inline constexpr double kDefaultRingRadiusMm = 50.0;
inline constexpr double kDefaultRingSpeedMS = 0.72;

struct SpeakerSpec {
  int count = 1;                     // n
  double piston_diameter_mm = 0.0;   // D
  double max_displacement_mm = 0.0;  // delta
  double peak_velocity_mm_s = 0.0;   // U_p
};

struct NozzleSpec {
  double aperture_diameter_mm = 0.0;  // d
  double formation_number = 0.0;      // f
  double slug_length_mm = 0.0;        // L = f * d
};

struct AirProperties {
  double density_kg_m3 = kDefaultAirDensityKgM3;  // rho
};

struct RingState {
  double momentum_kg_m_s = 0.0;
  double exit_velocity_m_s = 0.0;
  double ring_radius_mm = kDefaultRingRadiusMm;
  double translation_speed_m_s = kDefaultRingSpeedMS;
};

// Volume/flow conservation bookkeeping for a (speakers, nozzle) pairing.
struct DerivationReport {
  double piston_volume_mm3 = 0.0;   // V_p  = n * (pi D^2 / 4) * delta
  double exit_volume_mm3 = 0.0;     // V_exit = (pi d^2 / 4) * L
  double piston_flow_mm3_s = 0.0;   // Q_p  = n * (pi D^2 / 4) * U_p
  double exit_flow_mm3_s = 0.0;     // Q_exit = (pi d^2 / 4) * U_exit
  double length_ratio = 0.0;        // L / d
  double volume_residual = 0.0;     // |V_p - V_exit| / V_p
  double flow_residual = 0.0;       // |Q_p - Q_exit| / Q_p
};

struct ApertureDesign {
  NozzleSpec nozzle;
  // False when the requested formation number falls outside [3.6, 4.5];
  // the design is still returned (non-fatal).
  bool formation_in_recommended_range = true;
};

bool formation_in_recommended_range(double formation_number);

// Aperture diameter and slug length for a piston bank at formation number f.
// Throws InvalidParameter on non-positive inputs.
ApertureDesign design_aperture(const SpeakerSpec& speakers,
                               double formation_number);

// Piston stroke required to hit a target aperture diameter:
// delta = f * d^3 / (n * D^2). Round-trips with design_aperture.
double inverse_displacement(int count, double piston_diameter_mm,
                            double aperture_diameter_mm,
                            double formation_number);

// Flow velocity at the aperture, in m/s (inputs are mm / mm/s).
double exit_velocity(const SpeakerSpec& speakers, const NozzleSpec& nozzle);

// Ring momentum per ejection in SI units; exactly linear in U_p.
RingState ring_momentum(const SpeakerSpec& speakers, const NozzleSpec& nozzle,
                        const AirProperties& air = {});

DerivationReport derivation_report(const SpeakerSpec& speakers,
                                   const NozzleSpec& nozzle);

}  // namespace avrg::physics
