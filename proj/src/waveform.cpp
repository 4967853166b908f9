#include "avrg/waveform.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>

namespace avrg::waveform {

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw InvalidParameter(std::string(name) + " must be positive, got " +
                           std::to_string(value));
  }
}

void require_roundness(double b) {
  if (!(b > 0.0) || b > 1.0 || !std::isfinite(b)) {
    throw InvalidParameter("roundness coefficient must be in (0, 1], got " +
                           std::to_string(b));
  }
}

std::size_t pulse_sample_count(double pulse_length_s, double sample_rate_hz) {
  const double n = std::round(pulse_length_s * sample_rate_hz);
  if (n < 1.0) {
    throw InvalidParameter("pulse shorter than one sample at " +
                           std::to_string(sample_rate_hz) + " Hz");
  }
  return static_cast<std::size_t>(n);
}

}  // namespace

PistonCalibration reference_calibration() {
  PistonCalibration cal;
  cal.points = {{0.001, 568.83},
                {0.002, 892.97},
                {0.003, 1139.30},
                {0.004, 1321.72},
                {1.0, 2032.20}};
  cal.max_displacement_span_mm = 8.6;
  return cal;
}

DriveWaveform square_pulse(double amplitude_v, double pulse_length_s,
                           double sample_rate_hz) {
  return square_train(amplitude_v, pulse_length_s, sample_rate_hz, 1, 1.0,
                      0.0);
}

DriveWaveform square_train(double amplitude_v, double pulse_length_s,
                           double sample_rate_hz, int count, double interval_s,
                           double tail_s) {
  if (amplitude_v < 0.0 || !std::isfinite(amplitude_v)) {
    throw InvalidParameter("amplitude must be >= 0");
  }
  require_positive(pulse_length_s, "pulse length");
  require_positive(sample_rate_hz, "sample rate");
  if (count < 1) {
    throw InvalidParameter("pulse count must be >= 1, got " +
                           std::to_string(count));
  }
  if (count > 1) {
    require_positive(interval_s, "pulse interval");
    if (interval_s < pulse_length_s) {
      throw InvalidParameter("pulse interval shorter than pulse length");
    }
  }
  if (tail_s < 0.0 || !std::isfinite(tail_s)) {
    throw InvalidParameter("tail must be >= 0");
  }

  const std::size_t n_pulse = pulse_sample_count(pulse_length_s,
                                                 sample_rate_hz);
  const std::size_t lead = n_pulse;
  const std::size_t interval_samples =
      count > 1 ? static_cast<std::size_t>(std::round(interval_s *
                                                      sample_rate_hz))
                : 0;
  const std::size_t last_onset =
      lead + interval_samples * static_cast<std::size_t>(count - 1);
  const std::size_t tail_samples =
      n_pulse + static_cast<std::size_t>(std::round(tail_s * sample_rate_hz));

  DriveWaveform w;
  w.sample_rate_hz = sample_rate_hz;
  w.amplitude_v = amplitude_v;
  w.pulse_length_s = pulse_length_s;
  w.roundness_b = 1.0;
  w.samples.assign(last_onset + n_pulse + tail_samples, 0.0);
  for (int k = 0; k < count; ++k) {
    const std::size_t onset = lead + interval_samples *
                                         static_cast<std::size_t>(k);
    std::fill_n(w.samples.begin() + static_cast<std::ptrdiff_t>(onset),
                n_pulse, amplitude_v);
  }
  return w;
}

double decay_tail_s(double roundness_b, double sample_rate_hz) {
  require_roundness(roundness_b);
  require_positive(sample_rate_hz, "sample rate");
  return std::ceil(12.0 / roundness_b) / sample_rate_hz;
}

DriveWaveform apply_rounding(const DriveWaveform& input, double roundness_b) {
  require_roundness(roundness_b);
  DriveWaveform out = input;
  out.roundness_b = roundness_b;
  if (roundness_b == 1.0) {
    return out;  // bit-exact identity
  }
  double state = 0.0;
  for (double& sample : out.samples) {
    state = roundness_b * sample + (1.0 - roundness_b) * state;
    sample = state;
  }
  return out;
}

double peak_piston_velocity(double roundness_b, const PistonCalibration& cal) {
  require_roundness(roundness_b);
  if (cal.points.size() < 1) {
    throw InvalidParameter("empty piston calibration");
  }
  for (std::size_t i = 1; i < cal.points.size(); ++i) {
    if (!(cal.points[i].first > cal.points[i - 1].first) ||
        !(cal.points[i].second > cal.points[i - 1].second)) {
      throw ValidationError(
          "piston calibration must be strictly increasing in b and velocity");
    }
  }
  for (const auto& [b, velocity] : cal.points) {
    if (b == roundness_b) {
      return velocity;  // exact table hit
    }
  }
  if (roundness_b < cal.points.front().first ||
      roundness_b > cal.points.back().first) {
    throw OutOfRange("roundness " + std::to_string(roundness_b) +
                     " outside calibrated hull [" +
                     std::to_string(cal.points.front().first) + ", " +
                     std::to_string(cal.points.back().first) + "]");
  }
  auto upper = std::upper_bound(
      cal.points.begin(), cal.points.end(), roundness_b,
      [](double b, const auto& point) { return b < point.first; });
  const auto& hi = *upper;
  const auto& lo = *(upper - 1);
  const double t = (std::log(roundness_b) - std::log(lo.first)) /
                   (std::log(hi.first) - std::log(lo.first));
  return lo.second + t * (hi.second - lo.second);
}

namespace {

void put_u16(std::string& out, std::uint16_t v) {
  out.push_back(static_cast<char>(v & 0xFF));
  out.push_back(static_cast<char>((v >> 8) & 0xFF));
}

void put_u32(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>(v & 0xFF));
  out.push_back(static_cast<char>((v >> 8) & 0xFF));
  out.push_back(static_cast<char>((v >> 16) & 0xFF));
  out.push_back(static_cast<char>((v >> 24) & 0xFF));
}

}  // namespace

void export_pcm(const DriveWaveform& w, const std::filesystem::path& path) {
  require_positive(w.amplitude_v, "amplitude");
  require_positive(w.sample_rate_hz, "sample rate");
  const double rate_rounded = std::round(w.sample_rate_hz);
  if (rate_rounded != w.sample_rate_hz || rate_rounded > 4294967295.0) {
    throw InvalidParameter("PCM export needs an integral sample rate");
  }
  for (double v : w.samples) {
    if (std::abs(v) > w.amplitude_v * (1.0 + 1e-12)) {
      throw InvalidParameter("sample exceeds waveform amplitude");
    }
  }

  const std::uint32_t rate = static_cast<std::uint32_t>(rate_rounded);
  const std::uint32_t data_bytes =
      static_cast<std::uint32_t>(w.samples.size() * 2);

  std::string bytes;
  bytes.reserve(44 + data_bytes);
  bytes += "RIFF";
  put_u32(bytes, 36 + data_bytes);
  bytes += "WAVE";
  bytes += "fmt ";
  put_u32(bytes, 16);
  put_u16(bytes, 1);  // PCM
  put_u16(bytes, 1);  // mono
  put_u32(bytes, rate);
  put_u32(bytes, rate * 2);  // byte rate
  put_u16(bytes, 2);         // block align
  put_u16(bytes, 16);        // bits per sample
  bytes += "data";
  put_u32(bytes, data_bytes);
  for (double v : w.samples) {
    const long scaled = std::lround(v / w.amplitude_v * 32767.0);
    const long clamped = std::clamp(scaled, -32768L, 32767L);
    put_u16(bytes, static_cast<std::uint16_t>(
                       static_cast<std::int16_t>(clamped)));
  }

  const std::filesystem::path tmp =
      path.parent_path() /
      (path.filename().string() + ".tmp" + std::to_string(::getpid()));
  std::FILE* f = std::fopen(tmp.c_str(), "wb");
  if (f == nullptr) {
    throw IoError("cannot open " + tmp.string() + " for writing");
  }
  const std::size_t written = std::fwrite(bytes.data(), 1, bytes.size(), f);
  const bool flushed = std::fclose(f) == 0;
  if (written != bytes.size() || !flushed) {
    std::filesystem::remove(tmp);
    throw IoError("short write to " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw IoError("cannot rename " + tmp.string() + " to " + path.string() +
                  ": " + ec.message());
  }
}

}  // namespace avrg::waveform
