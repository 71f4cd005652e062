#pragma once

#include <array>
#include <span>
#include <vector>

#include "eitbeam/fitting.hpp"
#include "eitbeam/isotope_catalog.hpp"

namespace eitbeam {

// Saturated-absorption spectrum model: one fixed-width Lorentzian per catalog
// component at a·x + b = shift_k, weighted by abundance × relative strength,
// with a common peak-absorption amplitude.
struct CalibrationModel {
  IsotopeCatalog catalog;
  double hwhm_mhz = 16.0;   // component half-width, held fixed during fits
  double scaling = 1.0;     // frequency-axis gain a
  double offset_mhz = 0.0;  // frequency-axis offset b
  double amplitude = 1.0;   // peak absorption A

  void validate() const;
};

double satabs_signal(const CalibrationModel& model, double raw_x);
std::vector<double> satabs_model(const CalibrationModel& model, std::span<const double> raw_axis);

struct CalibrationData {
  std::vector<double> raw_axis;
  std::vector<double> signal;
};

struct CalibrationInit {
  double scaling = 1.0;
  double offset_mhz = 0.0;
  double amplitude = 0.3;
};

struct CalibrationResult {
  double scaling = 0.0;
  double offset_mhz = 0.0;
  double amplitude = 0.0;
  double scaling_rel_uncertainty = 0.0;
  double residual_rms = 0.0;
  std::array<std::array<double, 3>, 3> covariance{};
  FitResult fit;  // full iteration diagnostics
};

// Least-squares fit of (scaling, offset, amplitude) with component widths and
// positions held fixed. Requires at least 50 samples. Throws FitError on
// non-convergence (message carries the iteration trace) and on rank-deficient
// data such as a flat signal.
CalibrationResult fit_calibration(const CalibrationData& data, const IsotopeCatalog& catalog,
                                  double hwhm_mhz, const CalibrationInit& init,
                                  const FitOptions& opts = {});

}  // namespace eitbeam
