#ifndef OPO_SPECTRA_HPP
#define OPO_SPECTRA_HPP

#include <string>
#include <utility>
#include <vector>

#include "opo/covariance.hpp"

namespace opo {

/// Physical parameters of the OPO cavity and pump drive.
struct OpoParams {
  double output_transmission = 0.05;   // T, output-coupler transmission
  double extra_losses = 0.0;           // mu, intracavity extra losses
  double pump_amplitude_ratio = 1.0;   // sigma, input pump amplitude / threshold amplitude
  double cavity_fwhm_hz = 50e6;        // infrared cavity linewidth (FWHM)

  double half_width_hz() const { return cavity_fwhm_hz / 2.0; }

  /// Throws ValidationError naming the offending field.
  void validate() const;

  /// Non-fatal model-validity flags (e.g. operating far above threshold).
  std::vector<std::string> warnings() const;
};

/// Pump phase noise before the filtering cavity, plus the filter itself.
/// The raw level is a piecewise-linear table over frequency; a single entry
/// means a flat spectrum.
struct PumpNoiseModel {
  std::vector<std::pair<double, double>> raw_levels = {{0.0, 1.0}};  // (freq_hz, level in SNL units)
  double filter_fwhm_hz = 3.5e6;
  bool filter_enabled = true;

  void validate() const;
  double raw_level_at(double freq_hz) const;
};

/// Homodyne detection imperfections. Total efficiency
/// eta = quantum_efficiency * visibility^2 * (1 - extra_electronic_loss).
struct DetectionChain {
  double quantum_efficiency = 1.0;
  double visibility = 1.0;
  double extra_electronic_loss = 0.0;

  double efficiency() const;
  void validate() const;
};

/// Frequency -> dB table with optional per-entry 1-sigma errors.
/// Lookup interpolates linearly in dB and clamps outside the table.
struct FrequencyTableDb {
  struct Entry {
    double freq_hz = 0.0;
    double db = 0.0;
    double err_db = 0.0;
  };

  std::vector<Entry> entries;

  void validate() const;
  Entry at(double freq_hz) const;
};

/// Per-frequency noise record. Variances are detected values (after the
/// detection chain), in SNL units; errors are 1-sigma, 0 meaning none.
struct NoisePoint {
  double freq_hz = 0.0;
  double omega = 0.0;  // freq_hz / (cavity FWHM / 2)
  double g_x = 1.0;    // Var((X1-X2)/sqrt(2))
  double g_y = 1.0;    // Var((Y1+Y2)/sqrt(2))
  double v_ind_x = 1.0;
  double v_ind_y = 1.0;
  double err_g_x = 0.0;
  double err_g_y = 0.0;
  double err_v_ind_x = 0.0;
  double err_v_ind_y = 0.0;
};

/// Omega = f / (cavity FWHM / 2): the intracavity Lorentzian 1/(1+Omega^2)
/// reaches its half point at the cavity half-width.
double normalized_frequency(double freq_hz, const OpoParams& params);

/// G_X(Omega) = 1 - [T/(T+mu)] / (1 + Omega^2).
double g_x_spectrum(double omega, const OpoParams& params);

/// G_Y(Omega) = 1 - [T/(T+mu)] * [1 - 2(V0-1)(sigma-1)] / (Omega^2 + sigma^2).
/// v0_at_freq is the pump phase noise seen by the OPO (after filtering).
double g_y_spectrum(double omega, const OpoParams& params, double v0_at_freq);

/// Lorentzian sideband filtering of the pump excess noise:
/// V0_out = 1 + (V0_raw(f) - 1) / (1 + (f / (FWHM/2))^2).
double filtered_pump_noise(double freq_hz, const PumpNoiseModel& noise);

/// Beam-splitter loss model: V_meas = eta * V + (1 - eta).
double apply_detection(double variance, const DetectionChain& chain);

/// 1-sigma errors scale linearly through the loss model.
double apply_detection_error(double err, const DetectionChain& chain);

/// Composes the spectra, pump filtering, the individual-variance table and
/// the detection chain into one NoisePoint per requested frequency.
/// Frequencies must be non-empty and sorted ascending (duplicates allowed).
std::vector<NoisePoint> spectrum_sweep(const std::vector<double>& freqs_hz, const OpoParams& params,
                                       const PumpNoiseModel& noise, const DetectionChain& chain,
                                       const FrequencyTableDb& v_ind_model);

/// Covariance matrix of the two-mode state described by a NoisePoint.
TwoModeCovariance build_state_at(const NoisePoint& point);

}  // namespace opo

#endif  // OPO_SPECTRA_HPP
