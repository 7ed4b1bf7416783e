// spectrum.hpp: exact representation of discrete energy spectra.
//
// Every level is an integer combination E_n = Σ_j a_nj·β_j of declared base frequencies
// (ħ = 1, angular units). All structural questions (degeneracy, commensurability,
// period, frequency collisions) are decided on the integer coefficients; the base values
// only enter when a real number is finally needed.

#pragma once

#include "chronos/extended.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace chronos {

class BaseFrequencies {
public:
    BaseFrequencies(std::vector<Extended> values, bool declared_independent);

    std::size_t size() const noexcept { return values_.size(); }
    const Extended& operator[](std::size_t j) const { return values_[j]; }
    const std::vector<Extended>& values() const noexcept { return values_; }
    bool declared_independent() const noexcept { return declared_independent_; }

    bool operator==(const BaseFrequencies&) const = default;

private:
    std::vector<Extended> values_;
    bool declared_independent_;
};

// Coefficient vector of a frequency over the base frequencies.
class FrequencyLabel {
public:
    FrequencyLabel() = default;
    explicit FrequencyLabel(std::vector<std::int64_t> coefficients);

    static FrequencyLabel zero(std::size_t dimension);

    std::size_t size() const noexcept { return coefficients_.size(); }
    std::int64_t operator[](std::size_t j) const { return coefficients_[j]; }
    const std::vector<std::int64_t>& coefficients() const noexcept { return coefficients_; }
    bool is_zero() const noexcept;

    Extended value(const BaseFrequencies& bases) const;

    FrequencyLabel operator-() const;
    friend FrequencyLabel operator+(const FrequencyLabel& a, const FrequencyLabel& b);
    friend FrequencyLabel operator-(const FrequencyLabel& a, const FrequencyLabel& b);

    auto operator<=>(const FrequencyLabel&) const = default;
    bool operator==(const FrequencyLabel&) const = default;

private:
    std::vector<std::int64_t> coefficients_;
};

std::string to_string(const FrequencyLabel& label);

class EnergySpectrum {
public:
    // levels[n] holds the coefficients of E_n; two identical rows are rejected.
    // Labels default to "E0", "E1", ...
    EnergySpectrum(BaseFrequencies bases, std::vector<std::vector<std::int64_t>> levels,
                   std::vector<std::string> labels = {});

    std::size_t size() const noexcept { return levels_.size(); }
    std::size_t dimension() const noexcept { return bases_.size(); }
    const BaseFrequencies& bases() const noexcept { return bases_; }
    std::span<const std::int64_t> level(std::size_t n) const { return levels_.at(n); }
    const std::vector<std::vector<std::int64_t>>& levels() const noexcept { return levels_; }
    const std::string& label(std::size_t n) const { return labels_.at(n); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    // E_n at extended precision.
    const Extended& energy(std::size_t n) const { return energies_.at(n); }
    const std::vector<Extended>& energies() const noexcept { return energies_; }

    FrequencyLabel level_label(std::size_t n) const;

    // Same bases, only the listed (distinct) levels, in the given order.
    EnergySpectrum restricted_to(std::span<const std::size_t> indices) const;

    bool operator==(const EnergySpectrum& other) const {
        return bases_ == other.bases_ && levels_ == other.levels_;
    }

private:
    BaseFrequencies bases_;
    std::vector<std::vector<std::int64_t>> levels_;
    std::vector<std::string> labels_;
    std::vector<Extended> energies_;
};

// Label of E_m − E_n.
FrequencyLabel difference_label(const EnergySpectrum& spectrum, std::size_t m, std::size_t n);

// True iff every nonzero difference label is an integer multiple of one primitive
// direction in coefficient space. Decided exactly; base values are never compared.
bool is_commensurate(const EnergySpectrum& spectrum);

// Primitive lattice direction d and the gcd g such that every level difference is an
// integer multiple of g·d. Empty when all levels coincide.
struct CommensurateStructure {
    FrequencyLabel direction;  // oriented so that direction·β > 0
    std::int64_t gcd;
    Extended unit;             // g·(direction·β), the smallest positive gap unit
};
std::optional<CommensurateStructure> commensurate_structure(const EnergySpectrum& spectrum);

// T = 2π / (g·d·β). Throws ContractError("fundamental_period", "no finite period ...")
// for incommensurate spectra, and also when the spectrum has no nonzero gap at all.
Extended fundamental_period_extended(const EnergySpectrum& spectrum);
double fundamental_period(const EnergySpectrum& spectrum);

struct Convergent {
    std::int64_t numerator;
    std::int64_t denominator;
};

// The first `count` continued-fraction convergents of x > 0, starting with ⌊x⌋/1
// (so √2 gives 1/1, 3/2, 7/5, ...). Stops early when the expansion terminates (x is
// rational at working precision) or a denominator would exceed 10^15.
std::vector<Convergent> continued_fraction_convergents(const Extended& x, int count);

struct ApproximantStep {
    int index;                    // position of the convergent in the expansion (1-based)
    Convergent ratio;             // p_k/q_k replacing β_2/β_1
    EnergySpectrum spectrum;      // J = 1, base β_1/q_k
    Extended period;              // fundamental period T_k

    std::int64_t denominator() const noexcept { return ratio.denominator; }
};

struct ApproximantSequence {
    EnergySpectrum target;
    std::vector<ApproximantStep> steps;
};

// Commensurate approximants of a J = 2 incommensurate spectrum obtained by replacing
// β_2/β_1 with its continued-fraction convergents. A convergent that merges two levels
// is skipped (the merged spectrum has no normalized periodic density for the state).
// Steps keep T_k strictly increasing: a convergent whose period does not exceed the
// previous one supersedes it.
ApproximantSequence rational_approximants(const EnergySpectrum& spectrum, int depth);

}  // namespace chronos
