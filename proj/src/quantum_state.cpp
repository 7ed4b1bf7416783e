#include "chronos/quantum_state.hpp"

#include "chronos/errors.hpp"

#include <cmath>
#include <utility>

namespace chronos {

QuantumState::QuantumState(std::shared_ptr<const EnergySpectrum> spectrum, std::vector<Complex> amplitudes)
    : spectrum_(std::move(spectrum)), amplitudes_(std::move(amplitudes)) {
    if (!spectrum_) throw ContractError("QuantumState", "state must be bound to a spectrum");
    if (amplitudes_.size() != spectrum_->size()) {
        throw ContractError("QuantumState", "amplitude count " + std::to_string(amplitudes_.size()) +
                                                " does not match spectrum size " +
                                                std::to_string(spectrum_->size()));
    }
    double norm2 = 0.0;
    for (const auto& c : amplitudes_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw ContractError("QuantumState", "amplitudes must be finite");
        }
        norm2 += std::norm(c);
    }
    if (!(norm2 > 0.0)) throw ContractError("QuantumState", "amplitude vector is zero");
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& c : amplitudes_) c *= inv;
}

std::vector<std::size_t> QuantumState::support() const {
    std::vector<std::size_t> out;
    for (std::size_t n = 0; n < amplitudes_.size(); ++n) {
        if (amplitudes_[n] != Complex{}) out.push_back(n);
    }
    return out;
}

QuantumState QuantumState::rebind(std::shared_ptr<const EnergySpectrum> spectrum) const {
    return QuantumState(std::move(spectrum), amplitudes_);
}

QuantumState evolve(const QuantumState& state, double tau) {
    if (tau == 0.0) return state;  // skip the renormalization round-off
    const auto& spectrum = state.spectrum();
    std::vector<Complex> out(state.size());
    const Extended t(tau);
    for (std::size_t n = 0; n < out.size(); ++n) {
        out[n] = state.amplitude(n) * unit_phase(-spectrum.energy(n) * t);
    }
    return QuantumState(state.spectrum_ptr(), std::move(out));
}

std::vector<Complex> rotated_components(const QuantumState& state, double t) {
    const auto& spectrum = state.spectrum();
    std::vector<Complex> out(state.size());
    const Extended te(t);
    for (std::size_t n = 0; n < out.size(); ++n) {
        const auto& c = state.amplitude(n);
        out[n] = c == Complex{} ? Complex{} : c * unit_phase(spectrum.energy(n) * te);
    }
    return out;
}

QuantumState basis_state(std::shared_ptr<const EnergySpectrum> spectrum, std::size_t n) {
    if (!spectrum || n >= spectrum->size()) throw ContractError("basis_state", "level index out of range");
    std::vector<Complex> amps(spectrum->size());
    amps[n] = 1.0;
    return QuantumState(std::move(spectrum), std::move(amps));
}

QuantumState random_state(std::shared_ptr<const EnergySpectrum> spectrum, std::uint64_t seed) {
    if (!spectrum) throw ContractError("random_state", "spectrum required");
    Rng rng(seed);
    std::vector<Complex> amps(spectrum->size());
    for (auto& c : amps) {
        const double re = rng.normal();
        const double im = rng.normal();
        c = {re, im};
    }
    return QuantumState(std::move(spectrum), std::move(amps));
}

}  // namespace chronos
