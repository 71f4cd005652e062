#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "eitbeam/rational.hpp"

namespace eitbeam {

struct CatalogError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One hyperfine (or single-isotope) line component of the probe transition.
// Shifts are ordinary frequencies in MHz, quoted relative to the catalog's
// reference isotope.
struct LineComponent {
  std::optional<std::string> label;  // e.g. F quantum number as "7/2"
  double shift_mhz = 0.0;
  Rational relative_strength{1, 1};

  bool operator==(const LineComponent&) const = default;
};

struct IsotopeSpec {
  int mass_number = 0;
  double abundance = 0.0;  // fraction of unity
  Rational nuclear_spin{0, 1};
  std::vector<LineComponent> components;

  Rational strength_sum() const;
  bool has_zero_shift_component() const;

  bool operator==(const IsotopeSpec&) const = default;
};

// Isotope and hyperfine line data for one optical transition. Immutable after
// construction; safe to share across threads.
struct IsotopeCatalog {
  int reference_mass_number = 0;
  std::string transition_label;
  std::vector<IsotopeSpec> isotopes;

  // Throws CatalogError if any type invariant fails.
  void validate() const;

  bool has_isotope(int mass_number) const;
  const IsotopeSpec& isotope(int mass_number) const;

  // Strength-weighted mean component shift for one isotope (MHz). For I = 0
  // isotopes this is just the single component's shift.
  double mean_shift_mhz(int mass_number) const;

  bool operator==(const IsotopeCatalog&) const = default;
};

// Natural strontium on the 460.7 nm probe line: four isotopes, six line
// components, shifts relative to 88Sr.
IsotopeCatalog builtin_strontium_catalog();

// Loads and validates a catalog document. Abundances may be given as
// fractions ("abundance") or percentages ("abundance_percent"); rationals as
// "p/q" strings or plain numbers. Throws CatalogError naming the offending
// field on schema or invariant violations.
IsotopeCatalog load_catalog(const nlohmann::json& doc);
IsotopeCatalog load_catalog_file(const std::filesystem::path& path);

nlohmann::json serialize_catalog(const IsotopeCatalog& catalog);
void save_catalog_file(const IsotopeCatalog& catalog, const std::filesystem::path& path);

}  // namespace eitbeam
