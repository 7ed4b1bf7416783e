// phase_compare.hpp: the Arsenović phase construction set against the canonical
// time observable.
//
// For periodic evolution the phase density is the canonical time density with the
// period T rescaled to 2π. For quasiperiodic spectra the construction yields the
// uniform distribution for every state; the three-level experiment shows that this
// makes the phase of a periodically evolving state depend discontinuously on a level
// the state does not even occupy.

#pragma once

#include "chronos/bohr_measure.hpp"

#include <boost/rational.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace chronos {

using Rational = boost::rational<std::int64_t>;

// A real number given exactly: a rational, or one of the irrational tokens
// "sqrt2", "golden", "pi".
struct IrrationalToken {
    std::string name;
    bool operator==(const IrrationalToken&) const = default;
};
using ExactScalar = std::variant<Rational, IrrationalToken>;

// Accepts "p/q", integers, finite decimals ("0.25" is read as 1/4) and the tokens above.
ExactScalar parse_exact_scalar(const std::string& text);
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

struct RationalRatio {
    Rational nu;
};
struct IrrationalRatio {
    std::string token;
};
// Which branch of the construction produced a distribution; monostate when not applicable.
using Provenance = std::variant<std::monostate, RationalRatio, IrrationalRatio>;

class PhaseDistribution {
public:
    static PhaseDistribution uniform(Provenance provenance);

    // q(θ) = p(θT/2π|ψ)/(2π); T must be a period of the state's evolution.
    static PhaseDistribution rescaled(QuantumState state, double period, Provenance provenance);

    bool is_uniform() const noexcept { return !state_.has_value(); }
    const Provenance& provenance() const noexcept { return provenance_; }
    std::optional<double> period() const { return period_; }
    const std::optional<QuantumState>& state() const noexcept { return state_; }

    double density(double theta) const;
    // ∫_{θ_a}^{θ_b} q dθ, closed form.
    double probability(double theta_a, double theta_b) const;
    // q at θ_j = 2πj/count.
    std::vector<double> sample(std::size_t count) const;

private:
    PhaseDistribution(std::optional<QuantumState> state, std::optional<double> period, Provenance provenance);

    std::optional<QuantumState> state_;
    std::optional<double> period_;
    Provenance provenance_;
};

// Canonical periodic time density rescaled by 2π/T. Incommensurate spectra are rejected.
PhaseDistribution phase_from_periodic(const QuantumState& state);

// The quasiperiodic construction's probability for [θ_a, θ_b]: (θ_b − θ_a)/2π for
// every state. Requires an incommensurate spectrum and 0 ≤ θ_a ≤ θ_b ≤ 2π.
double arsenovic_quasi_phase_probability(const QuantumState& state, double theta_a, double theta_b);

// ½∫_0^{2π} |q_a − q_b| dθ. Sign changes are bracketed on a fine grid and refined,
// then each smooth piece is integrated with Gauss–Legendre.
double total_variation_distance(const PhaseDistribution& a, const PhaseDistribution& b);

// |(1/τ)∫_0^τ e^{iωt} p(t|ψ) dt| at each horizon. converged compares the last two.
ConvergenceReport washout_demo(const QuantumState& state, double omega, const std::vector<double>& horizons,
                               double tol = 1e-3);

// The τ → ∞ value of washout_demo when ω is the frequency of `label`: |p̂(−label)|.
double washout_limit(const QuantumState& state, const FrequencyLabel& label);

struct ThreeLevelResult {
    EnergySpectrum spectrum;          // E_0 = 0, E_1 = gap01, E_2 = gap01 + gap12 + ε
    std::optional<Rational> nu;       // ν(ε) = (E_2 + ε − E_1)/(E_1 − E_0) when rational
    PhaseDistribution arsenovic;      // nonuniform iff ν(ε) is rational
    PhaseDistribution canonical;      // state's own periodic distribution, T = 2π/(E_1 − E_0)
    double tv_distance;               // between the two distributions above
};

// State c0|E_0⟩ + c1|E_1⟩ with |c0|² + |c1|² = 1 (within 1e-8).
ThreeLevelResult three_level_experiment(Complex c0, Complex c1, const ExactScalar& epsilon, Rational gap01,
                                        Rational gap12);

}  // namespace chronos
