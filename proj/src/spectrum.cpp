#include "chronos/spectrum.hpp"

#include "chronos/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

namespace chronos {

namespace {

std::int64_t checked_narrow(__int128 v, const char* contract) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        throw ContractError(contract, "integer coefficient overflow");
    }
    return static_cast<std::int64_t>(v);
}

std::int64_t gcd_abs(std::int64_t a, std::int64_t b) {
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

// u and v (both nonzero) are parallel iff every 2x2 minor vanishes.
bool parallel(const FrequencyLabel& u, const FrequencyLabel& v) {
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = i + 1; j < u.size(); ++j) {
            const __int128 lhs = static_cast<__int128>(u[i]) * v[j];
            const __int128 rhs = static_cast<__int128>(u[j]) * v[i];
            if (lhs != rhs) return false;
        }
    }
    return true;
}

}  // namespace

BaseFrequencies::BaseFrequencies(std::vector<Extended> values, bool declared_independent)
    : values_(std::move(values)), declared_independent_(declared_independent) {
    if (values_.empty()) throw ContractError("BaseFrequencies", "at least one base frequency required");
    for (const auto& v : values_) {
        if (!(v > 0) || !isfinite(v)) {
            throw ContractError("BaseFrequencies", "base frequencies must be finite and strictly positive");
        }
    }
    if (values_.size() > 1 && !declared_independent_) {
        throw ContractError("BaseFrequencies",
                            "multiple bases must be declared rationally independent; "
                            "express commensurate levels over a single base");
    }
}

FrequencyLabel::FrequencyLabel(std::vector<std::int64_t> coefficients)
    : coefficients_(std::move(coefficients)) {}

FrequencyLabel FrequencyLabel::zero(std::size_t dimension) {
    return FrequencyLabel(std::vector<std::int64_t>(dimension, 0));
}

bool FrequencyLabel::is_zero() const noexcept {
    return std::all_of(coefficients_.begin(), coefficients_.end(), [](auto c) { return c == 0; });
}

Extended FrequencyLabel::value(const BaseFrequencies& bases) const {
    if (bases.size() != size()) throw ContractError("FrequencyLabel::value", "dimension mismatch");
    Extended sum = 0;
    for (std::size_t j = 0; j < size(); ++j) sum += Extended(coefficients_[j]) * bases[j];
    return sum;
}

FrequencyLabel FrequencyLabel::operator-() const {
    std::vector<std::int64_t> out(coefficients_.size());
    for (std::size_t j = 0; j < out.size(); ++j) {
        out[j] = checked_narrow(-static_cast<__int128>(coefficients_[j]), "FrequencyLabel");
    }
    return FrequencyLabel(std::move(out));
}

FrequencyLabel operator+(const FrequencyLabel& a, const FrequencyLabel& b) {
    if (a.size() != b.size()) throw ContractError("FrequencyLabel", "dimension mismatch");
    std::vector<std::int64_t> out(a.size());
    for (std::size_t j = 0; j < out.size(); ++j) {
        out[j] = checked_narrow(static_cast<__int128>(a[j]) + b[j], "FrequencyLabel");
    }
    return FrequencyLabel(std::move(out));
}

FrequencyLabel operator-(const FrequencyLabel& a, const FrequencyLabel& b) {
    if (a.size() != b.size()) throw ContractError("FrequencyLabel", "dimension mismatch");
    std::vector<std::int64_t> out(a.size());
    for (std::size_t j = 0; j < out.size(); ++j) {
        out[j] = checked_narrow(static_cast<__int128>(a[j]) - b[j], "FrequencyLabel");
    }
    return FrequencyLabel(std::move(out));
}

std::string to_string(const FrequencyLabel& label) {
    std::ostringstream os;
    os << '(';
    for (std::size_t j = 0; j < label.size(); ++j) {
        if (j) os << ',';
        os << label[j];
    }
    os << ')';
    return os.str();
}

EnergySpectrum::EnergySpectrum(BaseFrequencies bases, std::vector<std::vector<std::int64_t>> levels,
                               std::vector<std::string> labels)
    : bases_(std::move(bases)), levels_(std::move(levels)), labels_(std::move(labels)) {
    if (levels_.empty()) throw ContractError("EnergySpectrum", "at least one level required");
    for (const auto& row : levels_) {
        if (row.size() != bases_.size()) {
            throw ContractError("EnergySpectrum", "every level needs one coefficient per base frequency");
        }
    }
    const std::set<std::vector<std::int64_t>> seen(levels_.begin(), levels_.end());
    if (seen.size() != levels_.size()) {
        throw ContractError("EnergySpectrum", "degenerate spectrum: two levels share a coefficient vector");
    }
    if (labels_.empty()) {
        for (std::size_t n = 0; n < levels_.size(); ++n) labels_.push_back("E" + std::to_string(n));
    } else if (labels_.size() != levels_.size()) {
        throw ContractError("EnergySpectrum", "label count does not match level count");
    }
    energies_.reserve(levels_.size());
    for (const auto& row : levels_) energies_.push_back(FrequencyLabel(row).value(bases_));
}

FrequencyLabel EnergySpectrum::level_label(std::size_t n) const { return FrequencyLabel(levels_.at(n)); }

EnergySpectrum EnergySpectrum::restricted_to(std::span<const std::size_t> indices) const {
    std::vector<std::vector<std::int64_t>> rows;
    std::vector<std::string> names;
    for (auto n : indices) {
        rows.push_back(levels_.at(n));
        names.push_back(labels_.at(n));
    }
    return EnergySpectrum(bases_, std::move(rows), std::move(names));
}

FrequencyLabel difference_label(const EnergySpectrum& spectrum, std::size_t m, std::size_t n) {
    if (m >= spectrum.size() || n >= spectrum.size()) {
        throw ContractError("difference_label", "level index out of range");
    }
    return spectrum.level_label(m) - spectrum.level_label(n);
}

std::optional<CommensurateStructure> commensurate_structure(const EnergySpectrum& spectrum) {
    // Differences against level 0 span every pairwise difference.
    std::optional<FrequencyLabel> first;
    std::vector<FrequencyLabel> diffs;
    for (std::size_t n = 1; n < spectrum.size(); ++n) {
        auto d = difference_label(spectrum, n, 0);
        if (d.is_zero()) continue;
        if (first && !parallel(*first, d)) return std::nullopt;
        if (!first) first = d;
        diffs.push_back(std::move(d));
    }
    if (!first) return std::nullopt;

    std::int64_t content = 0;
    for (std::size_t j = 0; j < first->size(); ++j) content = gcd_abs(content, (*first)[j]);
    std::vector<std::int64_t> dir(first->size());
    for (std::size_t j = 0; j < dir.size(); ++j) dir[j] = (*first)[j] / content;
    FrequencyLabel direction(std::move(dir));
    if (direction.value(spectrum.bases()) < 0) direction = -direction;

    // Each difference is k·direction; collect gcd of the multipliers k.
    std::int64_t g = 0;
    for (const auto& d : diffs) {
        std::size_t j = 0;
        while (direction[j] == 0) ++j;
        g = gcd_abs(g, d[j] / direction[j]);
    }
    const Extended unit = Extended(g) * direction.value(spectrum.bases());
    return CommensurateStructure{std::move(direction), g, unit};
}

bool is_commensurate(const EnergySpectrum& spectrum) {
    if (spectrum.dimension() == 1) return true;
    // Rank <= 1 test; an all-equal spectrum (rank 0) is trivially commensurate.
    std::optional<FrequencyLabel> first;
    for (std::size_t n = 1; n < spectrum.size(); ++n) {
        auto d = difference_label(spectrum, n, 0);
        if (d.is_zero()) continue;
        if (first && !parallel(*first, d)) return false;
        if (!first) first = std::move(d);
    }
    return true;
}

Extended fundamental_period_extended(const EnergySpectrum& spectrum) {
    if (!is_commensurate(spectrum)) {
        throw ContractError("fundamental_period", "no finite period: spectrum is incommensurate");
    }
    auto structure = commensurate_structure(spectrum);
    if (!structure) {
        throw ContractError("fundamental_period", "no finite period: spectrum has no nonzero energy gap");
    }
    return two_pi_extended() / structure->unit;
}

double fundamental_period(const EnergySpectrum& spectrum) {
    return to_double(fundamental_period_extended(spectrum));
}

std::vector<Convergent> continued_fraction_convergents(const Extended& x, int count) {
    if (!(x > 0)) throw ContractError("continued_fraction_convergents", "x must be positive");
    constexpr std::int64_t max_denominator = 1'000'000'000'000'000;
    // Relative size below which a remainder is treated as exhausted precision.
    const Extended negligible = Extended(1e-28);

    std::vector<Convergent> out;
    __int128 p_prev = 1, q_prev = 0;  // p_{-1}, q_{-1}
    __int128 p_prev2 = 0, q_prev2 = 1;
    Extended rest = x;
    for (int k = 0; k < count; ++k) {
        const Extended a_ext = floor(rest);
        if (a_ext > Extended(max_denominator)) break;
        const auto a = static_cast<__int128>(static_cast<long double>(a_ext));
        const __int128 p = a * p_prev + p_prev2;
        const __int128 q = a * q_prev + q_prev2;
        if (q > max_denominator || p > std::numeric_limits<std::int64_t>::max()) break;
        out.push_back({static_cast<std::int64_t>(p), static_cast<std::int64_t>(q)});
        p_prev2 = p_prev;
        q_prev2 = q_prev;
        p_prev = p;
        q_prev = q;
        const Extended frac = rest - a_ext;
        if (frac <= negligible * rest) break;
        rest = 1 / frac;
    }
    return out;
}

ApproximantSequence rational_approximants(const EnergySpectrum& spectrum, int depth) {
    if (depth < 1) throw ContractError("rational_approximants", "depth must be at least 1");
    if (spectrum.dimension() != 2) {
        throw ContractError("rational_approximants", "approximants require exactly two base frequencies");
    }
    if (is_commensurate(spectrum)) {
        throw ContractError("rational_approximants", "spectrum is already commensurate");
    }
    const auto& bases = spectrum.bases();
    const Extended ratio = bases[1] / bases[0];

    ApproximantSequence seq{spectrum, {}};
    // Generating more convergents than requested covers the ones that get superseded.
    const auto convergents = continued_fraction_convergents(ratio, depth + 64);
    for (std::size_t k = 0; k < convergents.size() && static_cast<int>(seq.steps.size()) < depth; ++k) {
        const auto [p, q] = convergents[k];
        std::vector<std::vector<std::int64_t>> rows;
        rows.reserve(spectrum.size());
        for (const auto& row : spectrum.levels()) {
            const __int128 c = static_cast<__int128>(row[0]) * q + static_cast<__int128>(row[1]) * p;
            rows.push_back({checked_narrow(c, "rational_approximants")});
        }
        if (std::set<std::vector<std::int64_t>>(rows.begin(), rows.end()).size() != rows.size()) continue;
        EnergySpectrum approx(BaseFrequencies({bases[0] / Extended(q)}, true), std::move(rows), spectrum.labels());
        Extended period = fundamental_period_extended(approx);
        while (!seq.steps.empty() && seq.steps.back().period >= period) seq.steps.pop_back();
        seq.steps.push_back(ApproximantStep{static_cast<int>(k) + 1, {p, q}, std::move(approx), period});
    }
    return seq;
}

}  // namespace chronos
