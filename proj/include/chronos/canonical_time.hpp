// canonical_time.hpp: the covariant canonical time ("age") observable.
//
// For |ψ⟩ = Σ c_n|E_n⟩ the quasiperiodic density is p(t|ψ) = |Σ_n c_n e^{iE_n t}|².
// When the spectrum is commensurate with period T, p_T(t|ψ) = p(t|ψ)/T is a
// probability density on any window of length T.

#pragma once

#include "chronos/quantum_state.hpp"

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace chronos {

enum class DensityKind { periodic, quasiperiodic };

const char* to_string(DensityKind kind);

// (1/T)·|Σ c_n e^{iE_n t}|². Throws ContractError for incommensurate spectra.
double periodic_density(const QuantumState& state, double t);

// |Σ c_n e^{iE_n t}|², valid for any discrete spectrum.
double quasiperiodic_density(const QuantumState& state, double t);

double density(const QuantumState& state, double t, DensityKind kind);

struct PovmElement {
    Eigen::MatrixXcd matrix;  // (m,n) = e^{−i(E_m−E_n)t}, times 1/T when scaled
    double time;
    bool scaled_by_inverse_period;
};

// A_t (periodic) or M_t (quasiperiodic).
PovmElement povm_element(const EnergySpectrum& spectrum, double t, DensityKind kind);

// ⟨ψ|E|ψ⟩.
double povm_probability(const PovmElement& element, const QuantumState& state);

// ∫_{t_a}^{t_b} p(t|ψ) dt of the quasiperiodic density, in closed form.
double density_integral(const QuantumState& state, double t_a, double t_b);

// ∫_{t_a}^{t_b} p_T dt in closed form; requires 0 ≤ t_b − t_a ≤ T.
double interval_probability(const QuantumState& state, double t_a, double t_b);

struct DensityTrace {
    std::vector<double> times;
    std::vector<double> values;
    DensityKind kind;
    std::optional<double> period;
};

// Uniform grid of `samples` points on [t_start, t_end]. Without an explicit kind the
// periodic density is used iff the spectrum is commensurate with a finite period.
DensityTrace density_trace(const QuantumState& state, double t_start, double t_end, std::size_t samples,
                           std::optional<DensityKind> kind = std::nullopt);

// max − min of the sampled values.
double trace_spread(const DensityTrace& trace);

// Exactly one nonzero amplitude.
bool is_energy_eigenstate(const QuantumState& state);

// Period of the state's own evolution: the fundamental period of the levels it
// occupies. Throws when those levels are incommensurate or the state is stationary.
double support_period(const QuantumState& state);

}  // namespace chronos
