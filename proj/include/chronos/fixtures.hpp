// Built-in spectra and states used by `selftest`, the CLI's --fixture flag and the tests.
#pragma once

#include "chronos/quantum_state.hpp"

#include <memory>
#include <string>
#include <vector>

namespace chronos::fixtures {

struct Fixture {
    std::shared_ptr<const EnergySpectrum> spectrum;
    QuantumState state;
};

// Levels 0, 1, ..., n−1 over β = 1.
std::shared_ptr<const EnergySpectrum> ladder(std::size_t n);

// Levels 0, 1, √2 over bases (1, √2).
std::shared_ptr<const EnergySpectrum> three_level_sqrt2();

// Levels 0, 1, √2, 1+√2 over bases (1, √2).
std::shared_ptr<const EnergySpectrum> four_level_sqrt2();

// Names: "two-level" (equal superposition, gap 1), "three-level-sqrt2" (equal
// superposition), "eigenstate" (|E_1⟩ of three-level-sqrt2), "four-level-quasi"
// (random state, seed 7). Throws ContractError for unknown names.
Fixture by_name(const std::string& name);
std::vector<std::string> names();

}  // namespace chronos::fixtures
