#pragma once

#include <filesystem>
#include <stdexcept>

#include <json.hpp>

#include "eitbeam/calibration.hpp"
#include "eitbeam/lineshape.hpp"

namespace eitbeam {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Engine spectra: CSV with header "frequency_mhz,value".
void write_spectrum_csv(const std::filesystem::path& path, const Spectrum& spectrum);
Spectrum read_spectrum_csv(const std::filesystem::path& path,
                           SpectrumKind kind = SpectrumKind::transmission);

// Metadata sidecar next to a spectrum CSV ("<file>.meta.json").
void write_spectrum_sidecar(const std::filesystem::path& csv_path, const nlohmann::json& metadata);

// Calibration spectra: CSV with header "raw_axis,signal".
void write_calibration_csv(const std::filesystem::path& path, const CalibrationData& data);
CalibrationData read_calibration_csv(const std::filesystem::path& path);

std::string spectrum_kind_name(SpectrumKind kind);

}  // namespace eitbeam
