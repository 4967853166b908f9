// Speaker drive waveform synthesis: square pulses (and pulse trains), the
// first-order rounding filter that trades ejection noise against piston
// velocity, the measured roundness -> peak-piston-velocity calibration, and
// bit-exact PCM16 WAV export.
//
// The rounding filter is the exponential-smoothing realization
//
//   y[k] = b * x[k] + (1 - b) * y[k-1],    y[-1] = 0,  b in (0, 1]
//
// i.e. transfer function Y(z) = b / (1 - (1-b) z^-1) * X(z). Unit DC gain,
// monotone step response, per-step slew bounded by b * max|x|. b = 1 is the
// bit-exact identity. Coefficients are interpreted at the configured sample
// rate with no time-constant renormalization.
#pragma once

#include <filesystem>
#include <utility>
#include <vector>

#include "avrg/errors.hpp"

namespace avrg::waveform {

inline constexpr double kDefaultSampleRateHz = 48000.0;
inline constexpr double kDefaultAmplitudeV = 10.0;

struct DriveWaveform {
  double sample_rate_hz = kDefaultSampleRateHz;
  double amplitude_v = 0.0;     // scaling reference for PCM export
  double pulse_length_s = 0.0;
  double roundness_b = 1.0;     // filter coefficient applied, 1 = unfiltered
  std::vector<double> samples;  // volts
};

// Measured map from roundness coefficient to peak piston velocity, plus the
// peak-to-peak membrane stroke observed at full drive.
struct PistonCalibration {
  std::vector<std::pair<double, double>> points;  // (b, mm/s), ascending b
  double max_displacement_span_mm = 0.0;
};

// The five-coefficient calibration measured on the reference device
// (vibrometer, full 10 V drive).
PistonCalibration reference_calibration();

// Square pulse embedded in a canvas of round(pulse_length * rate) zero
// samples on each side: 0 before onset, amplitude for the pulse, 0 after.
DriveWaveform square_pulse(double amplitude_v, double pulse_length_s,
                           double sample_rate_hz);

// Train of `count` pulses with onsets spaced `interval_s` apart, followed by
// `tail_s` of extra zeros (decay room for subsequent rounding).
// count = 1, tail_s = 0 reproduces square_pulse exactly.
DriveWaveform square_train(double amplitude_v, double pulse_length_s,
                           double sample_rate_hz, int count,
                           double interval_s, double tail_s = 0.0);

// Zero tail long enough that a step rounded with coefficient b decays below
// one PCM16 LSB: ceil(12 / b) samples.
double decay_tail_s(double roundness_b, double sample_rate_hz);

DriveWaveform apply_rounding(const DriveWaveform& input, double roundness_b);

// Exact table value at a calibrated coefficient; log-linear interpolation in
// b between calibrated points (b spans three decades). No extrapolation:
// outside the calibrated hull -> OutOfRange.
double peak_piston_velocity(double roundness_b, const PistonCalibration& cal);

// RIFF/WAVE, PCM 16-bit, mono. Sample v maps to round(v / amplitude * 32767).
// Identical inputs produce byte-identical files. Writes via a temp file and
// atomic rename so a reader never sees a partial file.
void export_pcm(const DriveWaveform& w, const std::filesystem::path& path);

}  // namespace avrg::waveform
