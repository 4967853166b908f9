#include "avrg/physics.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace avrg::physics {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMmToM = 1e-3;

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw InvalidParameter(std::string(name) + " must be positive, got " +
                           std::to_string(value));
  }
}

void validate(const SpeakerSpec& s) {
  if (s.count < 1) {
    throw InvalidParameter("speaker count must be >= 1, got " +
                           std::to_string(s.count));
  }
  require_positive(s.piston_diameter_mm, "piston diameter");
  require_positive(s.max_displacement_mm, "piston displacement");
  if (s.peak_velocity_mm_s < 0.0 || !std::isfinite(s.peak_velocity_mm_s)) {
    throw InvalidParameter("peak piston velocity must be >= 0");
  }
}

void validate(const NozzleSpec& n) {
  require_positive(n.aperture_diameter_mm, "aperture diameter");
  require_positive(n.formation_number, "formation number");
  require_positive(n.slug_length_mm, "slug length");
}

double piston_area_mm2(const SpeakerSpec& s) {
  return kPi * s.piston_diameter_mm * s.piston_diameter_mm / 4.0;
}

double aperture_area_mm2(const NozzleSpec& n) {
  return kPi * n.aperture_diameter_mm * n.aperture_diameter_mm / 4.0;
}

}  // namespace

bool formation_in_recommended_range(double formation_number) {
  return formation_number >= kFormationNumberLow &&
         formation_number <= kFormationNumberHigh;
}

ApertureDesign design_aperture(const SpeakerSpec& speakers,
                               double formation_number) {
  validate(speakers);
  require_positive(formation_number, "formation number");

  const double n = static_cast<double>(speakers.count);
  const double d_cubed = n * speakers.max_displacement_mm *
                         speakers.piston_diameter_mm *
                         speakers.piston_diameter_mm / formation_number;
  const double d = std::cbrt(d_cubed);

  ApertureDesign design;
  design.nozzle.aperture_diameter_mm = d;
  design.nozzle.formation_number = formation_number;
  design.nozzle.slug_length_mm = formation_number * d;
  design.formation_in_recommended_range =
      formation_in_recommended_range(formation_number);
  return design;
}

double inverse_displacement(int count, double piston_diameter_mm,
                            double aperture_diameter_mm,
                            double formation_number) {
  if (count < 1) {
    throw InvalidParameter("speaker count must be >= 1, got " +
                           std::to_string(count));
  }
  require_positive(piston_diameter_mm, "piston diameter");
  require_positive(aperture_diameter_mm, "aperture diameter");
  require_positive(formation_number, "formation number");

  const double d3 = aperture_diameter_mm * aperture_diameter_mm *
                    aperture_diameter_mm;
  return formation_number * d3 /
         (static_cast<double>(count) * piston_diameter_mm *
          piston_diameter_mm);
}

double exit_velocity(const SpeakerSpec& speakers, const NozzleSpec& nozzle) {
  validate(speakers);
  validate(nozzle);

  const double area_ratio = static_cast<double>(speakers.count) *
                            speakers.piston_diameter_mm *
                            speakers.piston_diameter_mm /
                            (nozzle.aperture_diameter_mm *
                             nozzle.aperture_diameter_mm);
  return area_ratio * speakers.peak_velocity_mm_s * kMmToM;
}

RingState ring_momentum(const SpeakerSpec& speakers, const NozzleSpec& nozzle,
                        const AirProperties& air) {
  validate(speakers);
  validate(nozzle);
  require_positive(air.density_kg_m3, "air density");

  // I = (1/4) pi rho n f d D^2 U_p, everything in SI.
  const double d_m = nozzle.aperture_diameter_mm * kMmToM;
  const double diameter_m = speakers.piston_diameter_mm * kMmToM;
  const double up_m_s = speakers.peak_velocity_mm_s * kMmToM;

  RingState ring;
  ring.momentum_kg_m_s = 0.25 * kPi * air.density_kg_m3 *
                         static_cast<double>(speakers.count) *
                         nozzle.formation_number * d_m * diameter_m *
                         diameter_m * up_m_s;
  ring.exit_velocity_m_s = exit_velocity(speakers, nozzle);
  ring.ring_radius_mm = kDefaultRingRadiusMm;
  ring.translation_speed_m_s = kDefaultRingSpeedMS;
  return ring;
}

DerivationReport derivation_report(const SpeakerSpec& speakers,
                                   const NozzleSpec& nozzle) {
  validate(speakers);
  validate(nozzle);

  const double n = static_cast<double>(speakers.count);
  DerivationReport report;
  report.piston_volume_mm3 =
      n * piston_area_mm2(speakers) * speakers.max_displacement_mm;
  report.exit_volume_mm3 = aperture_area_mm2(nozzle) * nozzle.slug_length_mm;
  report.piston_flow_mm3_s =
      n * piston_area_mm2(speakers) * speakers.peak_velocity_mm_s;
  report.exit_flow_mm3_s = aperture_area_mm2(nozzle) *
                           exit_velocity(speakers, nozzle) / kMmToM;
  report.length_ratio = nozzle.slug_length_mm / nozzle.aperture_diameter_mm;
  report.volume_residual =
      std::abs(report.piston_volume_mm3 - report.exit_volume_mm3) /
      report.piston_volume_mm3;
  report.flow_residual =
      report.piston_flow_mm3_s > 0.0
          ? std::abs(report.piston_flow_mm3_s - report.exit_flow_mm3_s) /
                report.piston_flow_mm3_s
          : 0.0;
  return report;
}

}  // namespace avrg::physics
