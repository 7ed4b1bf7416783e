// bohr_measure.hpp: expectation values under the almost-periodic (Bohr) mean
//   μ_ap[g] = lim_{τ→∞} (1/τ) ∫_0^τ g(t) dt.
//
// Quasiperiodic functions are held as exact Fourier series over integer frequency
// labels, so μ_ap is read off as the coefficient at the zero label. A numeric Cesàro
// estimator over growing horizons is provided as an independent cross-check.

#pragma once

#include "chronos/quantum_state.hpp"

#include <functional>
#include <map>
#include <vector>

namespace chronos {

class FourierSeries {
public:
    using Terms = std::map<FrequencyLabel, Complex>;

    explicit FourierSeries(BaseFrequencies bases);
    FourierSeries(BaseFrequencies bases, Terms terms);

    static FourierSeries constant(const BaseFrequencies& bases, Complex value);

    const BaseFrequencies& bases() const noexcept { return bases_; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    // Accumulates into the label's coefficient; coefficients that become exactly zero are dropped.
    void add(const FrequencyLabel& label, Complex value);
    Complex coefficient(const FrequencyLabel& label) const;

    // Σ_L f_L e^{i(L·β)t}, phases reduced at extended precision.
    Complex evaluate(double t) const;

    // coefficient(−L) == conj(coefficient(L)) for every L, within tol.
    bool is_real(double tol = 1e-12) const;

    // max |L·β| over the stored labels (0 for an empty or constant series).
    double max_abs_frequency() const;

private:
    BaseFrequencies bases_;
    Terms terms_;
};

// |Σ c_n e^{iE_n t}|² as Σ_{m,n} c_m* c_n e^{i(E_n−E_m)t}.
FourierSeries density_as_series(const QuantumState& state);

// Label convolution. Throws ContractError when the bases differ.
FourierSeries series_product(const FourierSeries& f, const FourierSeries& g);

// Zero-label coefficient.
Complex bohr_mean_analytic(const FourierSeries& f);

// μ_ap[f·p(·|ψ)]. f must be real-valued (ContractError otherwise).
double expectation(const QuantumState& state, const FourierSeries& f);

struct AveragingSchedule {
    double initial_horizon = 100.0;
    double growth = 2.0;
    int max_steps = 12;
    // Upper bound on |ω| in the integrand; panels are kept below a quarter period.
    double frequency_bound = 1.0;
};

struct HorizonEstimate {
    double horizon;
    double value;
};

struct ConvergenceReport {
    std::vector<HorizonEstimate> estimates;
    bool converged = false;
    // |Δ|/(growth − 1) for the last two horizons, the tail of a 1/τ remainder.
    double final_error_bound = 0.0;
};

using RealFunction = std::function<double(double)>;
using ComplexFunction = std::function<Complex(double)>;

// (1/τ)∫_0^τ f dt at each of the given (strictly increasing, positive) horizons.
// Integration is incremental, so the total cost is that of the last horizon.
std::vector<Complex> cesaro_averages(const ComplexFunction& f, const std::vector<double>& horizons,
                                     double frequency_bound);

// Horizons τ_0·growth^k for k < max_steps, stopping as soon as two successive
// estimates differ by less than tol. Non-convergence is reported, not thrown.
ConvergenceReport bohr_mean_numeric(const RealFunction& f, const AveragingSchedule& schedule,
                                    double tol = 1e-3);

}  // namespace chronos
