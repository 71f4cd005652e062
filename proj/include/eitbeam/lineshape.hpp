#pragma once

#include <complex>
#include <map>
#include <span>
#include <vector>

#include "eitbeam/isotope_catalog.hpp"

namespace eitbeam {

inline constexpr double kBoltzmannJPerK = 1.380649e-23;
inline constexpr double kAtomicMassKg = 1.66053906660e-27;

enum class Geometry { counter_propagating, co_propagating };

// All inputs for the weak-probe ladder susceptibility of one line component.
// Rates, Rabi frequency and detunings are ordinary frequencies in MHz; the
// single 2π conversion to angular units happens inside the evaluation.
struct LadderParams {
  double gamma2_mhz = 16.0;   // intermediate-state coherence decay rate
  double gamma3_mhz = 0.0;    // Rydberg coherence decay rate
  double rabi_c_mhz = 0.0;    // coupling Rabi frequency
  double delta_p_mhz = 0.0;   // probe detuning from this component's resonance
  double delta_c_mhz = 0.0;   // coupling detuning
  double lambda_p_m = 460.7e-9;
  double lambda_c_m = 420.0e-9;
  Geometry geometry = Geometry::counter_propagating;

  void validate() const;  // throws std::invalid_argument

  // Wavevectors expressed as angular frequency per unit velocity (rad/µs per
  // m/s), so k·v lands in the same units as 2π·(detuning in MHz).
  double probe_wavevector() const;
  double two_photon_wavevector() const;  // kp−kc (counter) or kp+kc (co)
};

// Transverse velocity density of the atomic beam. The Lorentzian variant is
// the empirical form amplitude/(1 + v²/Δv²); the Gaussian variant is
// amplitude·exp(−v²/2σ²).
struct VelocityDistribution {
  enum class Kind { lorentzian, gaussian };

  Kind kind = Kind::lorentzian;
  double width_mps = 1.0;   // Δv (Lorentzian half-width) or σ (Gaussian)
  double amplitude = 1.0;   // dimensionless density scale

  static VelocityDistribution lorentzian(double delta_v_mps, double amplitude);
  static VelocityDistribution gaussian(double sigma_v_mps, double amplitude);

  void validate() const;
  double density(double v_mps) const;
  double shape_integral() const;  // π·Δv or √(2π)·σ at unit amplitude
};

double velocity_density(const VelocityDistribution& dist, double v_mps);

struct BeamGeometry {
  double temperature_k = 0.0;
  double atomic_mass_kg = 0.0;
  double half_divergence_rad = 0.0;  // ε

  void validate() const;
};

// Collimated effusive beam: Gaussian transverse distribution with
// σ_v = sin(ε)·√(kB·T/m).
VelocityDistribution gaussian_from_beam(const BeamGeometry& geom, double amplitude = 1.0);

// Weak-probe ladder susceptibility at one velocity class, per unit N(v).
// Absorption-positive convention: Im χ ≥ 0 for every input.
std::complex<double> susceptibility_at_velocity(const LadderParams& p, double velocity_mps);

// Velocity integral of susceptibility_at_velocity(p, v)·N(v) over the real
// line, by adaptive quadrature with relative tolerance tol ∈ (0, 1e-2].
// Throws IntegrationError (with best estimate) on non-convergence.
std::complex<double> integrated_susceptibility(const LadderParams& p,
                                               const VelocityDistribution& dist,
                                               double tol = 1e-6);

enum class SpectrumKind { transmission, difference, absorption };

struct Spectrum {
  std::vector<double> frequency_mhz;  // strictly increasing probe detunings
  std::vector<double> values;
  SpectrumKind kind = SpectrumKind::transmission;

  std::size_t size() const { return frequency_mhz.size(); }
  void validate() const;
};

// A multi-isotope ladder medium sharing one probe/coupling configuration.
// Component probe shifts come from the catalog; rydberg_shifts_mhz carries
// the total ground→Rydberg shift δ3 per isotope (default 0); coupling_active
// zeroes Ωc for isotopes whose EIT window is out of play.
struct MultiIsotopeSystem {
  IsotopeCatalog catalog_probe;
  std::map<int, double> rydberg_shifts_mhz;
  LadderParams shared;
  VelocityDistribution distribution;
  std::map<int, bool> coupling_active;

  void validate() const;
  bool coupling_on(int mass_number) const;
  double rydberg_shift(int mass_number) const;
};

// Transmission spectrum over the probe detuning grid (MHz). The velocity
// distribution's amplitude acts as the peak optical depth of one unit-weight
// component: a single-isotope medium with the coupling off bottoms out at
// exp(−amplitude).
Spectrum synthesize_spectrum(const MultiIsotopeSystem& sys, std::span<const double> grid_mhz,
                             double tol = 1e-6);

// Pointwise difference between the synthesized spectrum and the same system
// with every coupling turned off.
Spectrum difference_spectrum(const MultiIsotopeSystem& sys, std::span<const double> grid_mhz,
                             double tol = 1e-6);

struct OnOffSpectra {
  Spectrum on;   // transmission with couplings as configured
  Spectrum off;  // transmission with all couplings disabled
};

// Computes both spectra in one pass, reusing the coupling-independent
// component integrals.
OnOffSpectra synthesize_on_off(const MultiIsotopeSystem& sys, std::span<const double> grid_mhz,
                               double tol = 1e-6);

}  // namespace eitbeam
