#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eitbeam/lineshape.hpp"

namespace eitbeam {

struct PeakDescriptor {
  double position_mhz = 0.0;
  double height = 0.0;
  double fwhm_mhz = 0.0;
  std::optional<int> isotope;
};

// Wavelength-mismatch scaling factors for counter-propagating two-photon
// spectroscopy: Rydberg-state intervals appear scaled by λc/λp in the probe
// frame, intermediate-state intervals by 1 − λc/λp.
struct ScalingContext {
  double lambda_p_m = 460.7e-9;
  double lambda_c_m = 420.0e-9;

  double ratio() const { return lambda_c_m / lambda_p_m; }
  double complement() const { return 1.0 - ratio(); }

  static ScalingContext from_params(const LadderParams& p) { return {p.lambda_p_m, p.lambda_c_m}; }
};

struct IsotopeShiftResult {
  std::string transition_label;
  std::pair<int, int> pair{0, 0};  // (A, B); shift is δ3(A) − δ3(B)
  double shift_mhz = 0.0;
  double uncertainty_mhz = 0.0;
};

// Local maxima of a difference spectrum above min_height, refined by 3-point
// parabolic interpolation; FWHM from linear interpolation of the half-height
// crossings. Peaks closer than min_separation_mhz to a taller one are
// dropped. Returns an empty list (not an error) when nothing clears the
// threshold.
std::vector<PeakDescriptor> find_peaks(const Spectrum& diff, double min_height,
                                       double min_separation_mhz);

// Probe-frame position of an EIT peak: ratio·(δ3 − Δc) + complement·δ2, the
// simultaneous single- and two-photon resonance for counter-propagating
// beams.
double eit_peak_position(double delta2_mhz, double delta3_mhz, double delta_c_mhz,
                         const ScalingContext& ctx);

struct ShiftUncertainties {
  double delta2_a_mhz = 0.0;
  double delta2_b_mhz = 0.0;
};

// Inverts eit_peak_position for the Rydberg-shift difference
// δ3(A) − δ3(B) = [interval − complement·(δ2A − δ2B)] / ratio, where interval
// is the probe-frame peak separation position(A) − position(B). Uncertainty
// is the axis-scaling error propagated through the inversion, combined in
// quadrature with any component-shift uncertainties.
IsotopeShiftResult extract_isotope_shift(double interval_probe_mhz, double delta2_a_mhz,
                                         double delta2_b_mhz, const ScalingContext& ctx,
                                         double scaling_rel_uncertainty,
                                         const ShiftUncertainties& extra = {});

// Composes δ3(A)−δ3(B) and δ3(B)−δ3(C) into δ3(A)−δ3(C); uncertainties add
// in quadrature. Throws std::invalid_argument if the inner isotopes disagree.
IsotopeShiftResult chain_isotope_shifts(const IsotopeShiftResult& ab,
                                        const IsotopeShiftResult& bc);

// Probe-frame spread (max − min) of intermediate-state hyperfine splittings
// after complement scaling.
double hyperfine_window_width(std::span<const double> splittings_mhz, const ScalingContext& ctx);

// Fills each peak's isotope attribution with the nearest predicted
// (mass, position) entry within window_mhz; leaves it empty otherwise.
void attribute_peaks(std::vector<PeakDescriptor>& peaks,
                     std::span<const std::pair<int, double>> predicted_positions,
                     double window_mhz);

}  // namespace eitbeam
