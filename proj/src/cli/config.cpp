#include "chronos/config.hpp"

#include "chronos/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace chronos::config {

namespace {

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

Extended base_value(const json& v) {
    if (v.is_string()) return parse_extended(v.get<std::string>());
    if (v.is_number()) return parse_extended(v.dump());
    throw InputError("spectrum: bases must be decimal strings, numbers or tokens (sqrt2, golden, pi)");
}

double number(const json& v, const char* what) {
    if (!v.is_number()) throw InputError(std::string(what) + " must be a number");
    return v.get<double>();
}

}  // namespace

json parse_json(const std::string& text, const std::string& source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        const auto [line, column] = line_column(text, e.byte);
        std::ostringstream os;
        os << source << ":" << line << ":" << column << ": malformed JSON";
        const std::string what = e.what();
        if (auto pos = what.find("parse error"); pos != std::string::npos) os << " (" << what.substr(pos) << ")";
        throw InputError(os.str());
    }
}

json load_json(const std::string& path_or_inline) {
    const auto first = path_or_inline.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (path_or_inline[first] == '{' || path_or_inline[first] == '[')) {
        return parse_json(path_or_inline, "<inline>");
    }
    std::ifstream in(path_or_inline);
    if (!in) throw InputError("cannot open '" + path_or_inline + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_json(buffer.str(), path_or_inline);
}

std::shared_ptr<const EnergySpectrum> spectrum_from_json(const json& doc) {
    if (!doc.is_object()) throw InputError("spectrum: expected a JSON object");
    if (!doc.contains("bases") || !doc["bases"].is_array()) throw InputError("spectrum: missing array 'bases'");
    if (!doc.contains("levels") || !doc["levels"].is_array()) throw InputError("spectrum: missing array 'levels'");
    std::vector<Extended> bases;
    for (const auto& b : doc["bases"]) bases.push_back(base_value(b));
    const bool independent = doc.value("independent", bases.size() > 1);
    std::vector<std::vector<std::int64_t>> levels;
    for (const auto& row : doc["levels"]) {
        if (!row.is_array()) throw InputError("spectrum: each level must be an array of integers");
        std::vector<std::int64_t> coeffs;
        for (const auto& a : row) {
            if (!a.is_number_integer()) throw InputError("spectrum: level coefficients must be exact integers");
            coeffs.push_back(a.get<std::int64_t>());
        }
        levels.push_back(std::move(coeffs));
    }
    std::vector<std::string> labels;
    if (doc.contains("labels")) {
        for (const auto& l : doc["labels"]) labels.push_back(l.get<std::string>());
    }
    return std::make_shared<const EnergySpectrum>(BaseFrequencies(std::move(bases), independent), std::move(levels),
                                                  std::move(labels));
}

QuantumState state_from_json(const json& doc, std::shared_ptr<const EnergySpectrum> spectrum) {
    if (!doc.is_object() || !doc.contains("amplitudes") || !doc["amplitudes"].is_array()) {
        throw InputError("state: expected {\"amplitudes\": [[re, im], ...]}");
    }
    std::vector<Complex> amps;
    for (const auto& a : doc["amplitudes"]) {
        if (a.is_array() && a.size() == 2) {
            amps.emplace_back(number(a[0], "state: re"), number(a[1], "state: im"));
        } else if (a.is_number()) {
            amps.emplace_back(a.get<double>(), 0.0);
        } else {
            throw InputError("state: each amplitude must be [re, im]");
        }
    }
    return QuantumState(std::move(spectrum), std::move(amps));
}

FourierSeries series_from_json(const json& doc, const BaseFrequencies& bases) {
    if (!doc.is_array()) throw InputError("series: expected a list of {label, re, im} terms");
    FourierSeries series(bases);
    for (const auto& term : doc) {
        if (!term.is_object() || !term.contains("label") || !term["label"].is_array()) {
            throw InputError("series: each term needs an integer 'label' array");
        }
        std::vector<std::int64_t> label;
        for (const auto& a : term["label"]) {
            if (!a.is_number_integer()) throw InputError("series: label entries must be exact integers");
            label.push_back(a.get<std::int64_t>());
        }
        if (label.size() != bases.size()) {
            throw InputError("series: label length must equal the number of base frequencies");
        }
        const double re = term.contains("re") ? number(term["re"], "series: re") : 0.0;
        const double im = term.contains("im") ? number(term["im"], "series: im") : 0.0;
        series.add(FrequencyLabel(std::move(label)), {re, im});
    }
    return series;
}

json spectrum_to_json(const EnergySpectrum& spectrum) {
    json bases = json::array();
    for (const auto& b : spectrum.bases().values()) bases.push_back(to_string(b));
    return {{"bases", bases},
            {"independent", spectrum.bases().declared_independent()},
            {"levels", spectrum.levels()},
            {"labels", spectrum.labels()}};
}

json state_to_json(const QuantumState& state) {
    json amps = json::array();
    for (const auto& c : state.amplitudes()) amps.push_back({c.real(), c.imag()});
    return {{"amplitudes", amps}};
}

std::string format_real(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    if (ec != std::errc{}) return "nan";
    return std::string(buf, end);
}

}  // namespace chronos::config
