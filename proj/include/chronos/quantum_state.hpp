// quantum_state.hpp: pure states in the energy eigenbasis.

#pragma once

#include "chronos/spectrum.hpp"

#include <complex>
#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <vector>

namespace chronos {

using Complex = std::complex<double>;

// Normalized amplitude vector bound to an (immutable, shared) spectrum.
class QuantumState {
public:
    // Normalizes on construction. Throws ContractError for a length mismatch or a
    // zero / non-finite amplitude vector.
    QuantumState(std::shared_ptr<const EnergySpectrum> spectrum, std::vector<Complex> amplitudes);

    const EnergySpectrum& spectrum() const noexcept { return *spectrum_; }
    const std::shared_ptr<const EnergySpectrum>& spectrum_ptr() const noexcept { return spectrum_; }
    std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
    const Complex& amplitude(std::size_t n) const { return amplitudes_.at(n); }
    std::size_t size() const noexcept { return amplitudes_.size(); }

    // Indices with a nonzero amplitude.
    std::vector<std::size_t> support() const;

    // The same amplitudes over another spectrum with the same number of levels.
    QuantumState rebind(std::shared_ptr<const EnergySpectrum> spectrum) const;

private:
    std::shared_ptr<const EnergySpectrum> spectrum_;
    std::vector<Complex> amplitudes_;
};

// c_n ↦ c_n·e^{−iE_n τ}, phases reduced at extended precision.
QuantumState evolve(const QuantumState& state, double tau);

// The components c_n·e^{iE_n t} whose coherent sum gives the time density.
std::vector<Complex> rotated_components(const QuantumState& state, double t);

QuantumState basis_state(std::shared_ptr<const EnergySpectrum> spectrum, std::size_t n);

// The only random source in the library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double normal() { return normal_(engine_); }
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit_(engine_); }
    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> unit_{0.0, 1.0};
};

// I.i.d. complex standard normal amplitudes, normalized. Same seed, same state.
QuantumState random_state(std::shared_ptr<const EnergySpectrum> spectrum, std::uint64_t seed);

}  // namespace chronos
