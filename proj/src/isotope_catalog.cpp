#include "eitbeam/isotope_catalog.hpp"

#include <cmath>
#include <fstream>

namespace eitbeam {

namespace {

std::string isotope_path(std::size_t i) { return "isotopes[" + std::to_string(i) + "]"; }

double require_number(const nlohmann::json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) throw CatalogError(where + "." + key + ": missing field");
  if (!obj[key].is_number()) throw CatalogError(where + "." + key + ": expected a number");
  return obj[key].get<double>();
}

Rational read_rational(const nlohmann::json& value, const std::string& where) {
  try {
    if (value.is_string()) return Rational::parse(value.get<std::string>());
    if (value.is_number_integer()) return {value.get<long long>(), 1};
    if (value.is_number()) return Rational::from_double(value.get<double>());
  } catch (const std::invalid_argument& e) {
    throw CatalogError(where + ": " + e.what());
  }
  throw CatalogError(where + ": expected a number or \"p/q\" string");
}

}  // namespace

Rational IsotopeSpec::strength_sum() const {
  Rational sum{0, 1};
  for (const auto& c : components) sum = sum + c.relative_strength;
  return sum;
}

bool IsotopeSpec::has_zero_shift_component() const {
  for (const auto& c : components)
    if (c.shift_mhz == 0.0) return true;
  return false;
}

void IsotopeCatalog::validate() const {
  if (isotopes.empty()) throw CatalogError("catalog has no isotopes");
  double abundance_sum = 0.0;
  int reference_count = 0;
  for (std::size_t i = 0; i < isotopes.size(); ++i) {
    const auto& iso = isotopes[i];
    const std::string where = isotope_path(i) + " (mass " + std::to_string(iso.mass_number) + ")";
    if (iso.components.empty()) throw CatalogError(where + ": components must be non-empty");
    if (iso.abundance < 0.0 || iso.abundance > 1.0)
      throw CatalogError(where + ": abundance must lie in [0, 1]");
    if (iso.nuclear_spin < Rational{0, 1})
      throw CatalogError(where + ": nuclear spin must be non-negative");
    for (std::size_t k = 0; k < iso.components.size(); ++k) {
      if (!(iso.components[k].relative_strength.value() > 0.0))
        throw CatalogError(where + ".components[" + std::to_string(k) +
                           "].relative_strength must be positive");
    }
    const bool is_reference = iso.mass_number == reference_mass_number;
    if (iso.nuclear_spin == Rational{0, 1}) {
      if (iso.components.size() != 1)
        throw CatalogError(where + ": spin-0 isotope must have exactly one component");
      if (iso.components[0].relative_strength != Rational{1, 1})
        throw CatalogError(where + ": spin-0 component must have relative strength 1");
      if (is_reference && iso.components[0].shift_mhz != 0.0)
        throw CatalogError(where + ": reference isotope component must have zero shift");
    } else {
      if (std::abs(iso.strength_sum().value() - 1.0) > 1e-12)
        throw CatalogError(where + ": relative strengths must sum to 1");
    }
    if (is_reference && iso.has_zero_shift_component()) ++reference_count;
    abundance_sum += iso.abundance;
  }
  if (std::abs(abundance_sum - 1.0) > 1e-3)
    throw CatalogError("abundances sum to " + std::to_string(abundance_sum) +
                       ", expected 1 within 1e-3");
  if (reference_count != 1)
    throw CatalogError("catalog needs exactly one isotope with the reference mass number " +
                       std::to_string(reference_mass_number) + " and a zero-shift component");
}

bool IsotopeCatalog::has_isotope(int mass_number) const {
  for (const auto& iso : isotopes)
    if (iso.mass_number == mass_number) return true;
  return false;
}

const IsotopeSpec& IsotopeCatalog::isotope(int mass_number) const {
  for (const auto& iso : isotopes)
    if (iso.mass_number == mass_number) return iso;
  throw CatalogError("catalog has no isotope with mass number " + std::to_string(mass_number));
}

double IsotopeCatalog::mean_shift_mhz(int mass_number) const {
  const auto& iso = isotope(mass_number);
  double sum = 0.0, weight = 0.0;
  for (const auto& c : iso.components) {
    sum += c.relative_strength.value() * c.shift_mhz;
    weight += c.relative_strength.value();
  }
  return sum / weight;
}

IsotopeCatalog builtin_strontium_catalog() {
  IsotopeCatalog cat;
  cat.reference_mass_number = 88;
  cat.transition_label = "Sr 5s2 1S0 -> 5s5p 1P1 (460.7 nm)";
  cat.isotopes = {
      {84, 0.0056, {0, 1}, {{std::nullopt, -270.8, {1, 1}}}},
      {86, 0.0986, {0, 1}, {{std::nullopt, -124.5, {1, 1}}}},
      {87,
       0.0700,
       {9, 2},
       {{"7/2", -9.7, {4, 15}}, {"9/2", -68.9, {1, 3}}, {"11/2", -51.9, {2, 5}}}},
      {88, 0.8258, {0, 1}, {{std::nullopt, 0.0, {1, 1}}}},
  };
  return cat;
}

IsotopeCatalog load_catalog(const nlohmann::json& doc) {
  if (!doc.is_object()) throw CatalogError("catalog document must be an object");
  IsotopeCatalog cat;
  if (!doc.contains("reference_mass_number") || !doc["reference_mass_number"].is_number_integer())
    throw CatalogError("reference_mass_number: missing or not an integer");
  cat.reference_mass_number = doc["reference_mass_number"].get<int>();
  cat.transition_label = doc.value("transition", "");
  if (!doc.contains("isotopes") || !doc["isotopes"].is_array())
    throw CatalogError("isotopes: missing or not an array");

  const auto& isotopes = doc["isotopes"];
  for (std::size_t i = 0; i < isotopes.size(); ++i) {
    const auto& node = isotopes[i];
    const std::string where = isotope_path(i);
    if (!node.is_object()) throw CatalogError(where + ": expected an object");
    IsotopeSpec iso;
    if (!node.contains("mass_number") || !node["mass_number"].is_number_integer())
      throw CatalogError(where + ".mass_number: missing or not an integer");
    iso.mass_number = node["mass_number"].get<int>();
    if (node.contains("abundance") && node.contains("abundance_percent"))
      throw CatalogError(where + ": give abundance or abundance_percent, not both");
    if (node.contains("abundance_percent"))
      iso.abundance = require_number(node, "abundance_percent", where) / 100.0;
    else
      iso.abundance = require_number(node, "abundance", where);
    if (node.contains("nuclear_spin"))
      iso.nuclear_spin = read_rational(node["nuclear_spin"], where + ".nuclear_spin");
    if (!node.contains("components") || !node["components"].is_array())
      throw CatalogError(where + ".components: missing or not an array");
    const auto& comps = node["components"];
    for (std::size_t k = 0; k < comps.size(); ++k) {
      const std::string cwhere = where + ".components[" + std::to_string(k) + "]";
      if (!comps[k].is_object()) throw CatalogError(cwhere + ": expected an object");
      LineComponent lc;
      if (comps[k].contains("label")) {
        if (!comps[k]["label"].is_string()) throw CatalogError(cwhere + ".label: expected a string");
        lc.label = comps[k]["label"].get<std::string>();
      }
      lc.shift_mhz = require_number(comps[k], "shift_mhz", cwhere);
      if (!comps[k].contains("relative_strength"))
        throw CatalogError(cwhere + ".relative_strength: missing field");
      lc.relative_strength = read_rational(comps[k]["relative_strength"], cwhere + ".relative_strength");
      iso.components.push_back(std::move(lc));
    }
    cat.isotopes.push_back(std::move(iso));
  }
  cat.validate();
  return cat;
}

IsotopeCatalog load_catalog_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open catalog file: " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw CatalogError("catalog file " + path.string() + ": " + e.what());
  }
  return load_catalog(doc);
}

nlohmann::json serialize_catalog(const IsotopeCatalog& catalog) {
  nlohmann::json doc;
  doc["transition"] = catalog.transition_label;
  doc["reference_mass_number"] = catalog.reference_mass_number;
  doc["isotopes"] = nlohmann::json::array();
  for (const auto& iso : catalog.isotopes) {
    nlohmann::json node;
    node["mass_number"] = iso.mass_number;
    node["abundance"] = iso.abundance;
    node["nuclear_spin"] = iso.nuclear_spin.str();
    node["components"] = nlohmann::json::array();
    for (const auto& c : iso.components) {
      nlohmann::json cc;
      if (c.label) cc["label"] = *c.label;
      cc["shift_mhz"] = c.shift_mhz;
      cc["relative_strength"] = c.relative_strength.str();
      node["components"].push_back(std::move(cc));
    }
    doc["isotopes"].push_back(std::move(node));
  }
  return doc;
}

void save_catalog_file(const IsotopeCatalog& catalog, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw CatalogError("cannot write catalog file: " + path.string());
  out << serialize_catalog(catalog).dump(2) << "\n";
}

}  // namespace eitbeam
