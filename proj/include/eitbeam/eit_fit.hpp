#pragma once

#include "eitbeam/fitting.hpp"
#include "eitbeam/lineshape.hpp"

namespace eitbeam {

// The five adjustable parameters of the transmission model: velocity
// half-width, peak optical depth, coupling detuning, coupling Rabi frequency
// and Rydberg decay rate. Everything else (catalog, wavelengths, γ2,
// geometry, coupling routing) stays fixed in the template system.
struct EitFitParams {
  double delta_v_mps = 16.5;
  double amplitude = 0.3;
  double delta_c_mhz = 0.0;
  double rabi_c_mhz = 5.0;
  double gamma3_mhz = 1.0;

  std::vector<double> to_vector() const;
  static EitFitParams from_vector(std::span<const double> x);
};

struct EitFitSetup {
  MultiIsotopeSystem base;  // distribution width/amplitude and the five
                            // shared fields above are overwritten per trial
  double quad_tol = 1e-9;   // tightened so quadrature noise stays below the
                            // finite-difference step effect
  std::vector<double> lower = {1e-3, 0.0, -5e3, 0.0, 0.0};
  std::vector<double> upper = {1e4, 1e3, 5e3, 1e4, 1e4};
};

// Residuals are model − data over the data's own frequency grid.
FitProblem make_eit_fit_problem(const Spectrum& data, const EitFitSetup& setup,
                                const EitFitParams& init);

struct EitFitResult {
  EitFitParams params;
  FitResult fit;
};

EitFitResult fit_eit_spectrum(const Spectrum& data, const EitFitSetup& setup,
                              const EitFitParams& init, FitOptions opts = default_eit_fit_options());

FitOptions default_eit_fit_options();

}  // namespace eitbeam
