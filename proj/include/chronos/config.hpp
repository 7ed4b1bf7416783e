// config.hpp: JSON ingestion for spectra, states and Fourier series.
//
//   spectrum: { "bases": ["1", "sqrt2"], "independent": true,
//               "levels": [[0,0],[1,0],[0,1]], "labels": ["g","e1","e2"] }
//   state:    { "amplitudes": [[re, im], ...] }            (normalized on load)
//   series:   [ { "label": [1,0], "re": 0.5, "im": 0.0 }, ... ]

#pragma once

#include "chronos/bohr_measure.hpp"

#include "json.hpp"

#include <memory>
#include <string>

namespace chronos::config {

using nlohmann::json;

// Raised for unreadable or malformed input; the message carries line/column for JSON
// syntax errors.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parses JSON text; `source` names the origin in diagnostics.
json parse_json(const std::string& text, const std::string& source);

// A value starting with '{' or '[' is parsed inline, anything else is read as a path.
json load_json(const std::string& path_or_inline);

std::shared_ptr<const EnergySpectrum> spectrum_from_json(const json& doc);
QuantumState state_from_json(const json& doc, std::shared_ptr<const EnergySpectrum> spectrum);
FourierSeries series_from_json(const json& doc, const BaseFrequencies& bases);

json spectrum_to_json(const EnergySpectrum& spectrum);
json state_to_json(const QuantumState& state);

// 17 significant digits, %g-style, independent of the C locale.
std::string format_real(double value);

}  // namespace chronos::config
