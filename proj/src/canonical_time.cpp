#include "chronos/canonical_time.hpp"

#include "chronos/errors.hpp"
#include "chronos/oscillatory.hpp"
#include "chronos/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace chronos {

namespace {

double require_period(const EnergySpectrum& spectrum, const char* contract) {
    if (!is_commensurate(spectrum)) {
        throw ContractError(contract, "spectrum is incommensurate; use quasiperiodic_density instead");
    }
    try {
        return fundamental_period(spectrum);
    } catch (const ContractError& e) {
        throw ContractError(contract, e.what());
    }
}

Complex coherent_sum(const QuantumState& state, double t) {
    const auto comps = rotated_components(state, t);
    return std::accumulate(comps.begin(), comps.end(), Complex{});
}

// |Σ c_n e^{iE_n t}|²; a single occupied level gives |c_n|² exactly, with no
// cos² + sin² round-off.
double coherent_norm(const QuantumState& state, double t) {
    std::size_t occupied = 0, last = 0;
    for (std::size_t n = 0; n < state.size() && occupied < 2; ++n) {
        if (state.amplitude(n) != Complex{}) {
            ++occupied;
            last = n;
        }
    }
    if (occupied == 1) return std::norm(state.amplitude(last));
    return std::max(0.0, std::norm(coherent_sum(state, t)));
}

}  // namespace

const char* to_string(DensityKind kind) {
    return kind == DensityKind::periodic ? "periodic" : "quasiperiodic";
}

double quasiperiodic_density(const QuantumState& state, double t) { return coherent_norm(state, t); }

double periodic_density(const QuantumState& state, double t) {
    const double period = require_period(state.spectrum(), "periodic_density");
    return coherent_norm(state, t) / period;
}

double density(const QuantumState& state, double t, DensityKind kind) {
    return kind == DensityKind::periodic ? periodic_density(state, t) : quasiperiodic_density(state, t);
}

PovmElement povm_element(const EnergySpectrum& spectrum, double t, DensityKind kind) {
    double scale = 1.0;
    if (kind == DensityKind::periodic) scale = 1.0 / require_period(spectrum, "povm_element");
    const auto n_levels = static_cast<Eigen::Index>(spectrum.size());
    // Rank one: v v† with v_m = e^{−iE_m t}.
    Eigen::VectorXcd v(n_levels);
    const Extended te(t);
    for (Eigen::Index m = 0; m < n_levels; ++m) {
        v(m) = unit_phase(-spectrum.energy(static_cast<std::size_t>(m)) * te);
    }
    Eigen::MatrixXcd matrix = scale * (v * v.adjoint());
    for (Eigen::Index m = 0; m < n_levels; ++m) matrix(m, m) = scale;
    return PovmElement{std::move(matrix), t, kind == DensityKind::periodic};
}

double povm_probability(const PovmElement& element, const QuantumState& state) {
    const auto n = static_cast<Eigen::Index>(state.size());
    if (element.matrix.rows() != n) throw ContractError("povm_probability", "dimension mismatch");
    Eigen::VectorXcd psi(n);
    for (Eigen::Index i = 0; i < n; ++i) psi(i) = state.amplitude(static_cast<std::size_t>(i));
    return std::max(0.0, psi.dot(element.matrix * psi).real());
}

double density_integral(const QuantumState& state, double t_a, double t_b) {
    const double width = t_b - t_a;
    if (!(width >= 0.0)) throw ContractError("density_integral", "t_b must not precede t_a");
    const auto& spectrum = state.spectrum();
    // Phases are referred to t_a: Σ_{m,n} conj(c_m e^{iE_m t_a}) c_n e^{iE_n t_a} ∫_0^Δ e^{iω_nm s} ds.
    const auto comps = rotated_components(state, t_a);
    const Extended delta = Extended(t_b) - Extended(t_a);
    double total = 0.0;
    for (std::size_t m = 0; m < comps.size(); ++m) {
        if (comps[m] == Complex{}) continue;
        total += std::norm(comps[m]) * width;
        for (std::size_t n = m + 1; n < comps.size(); ++n) {
            if (comps[n] == Complex{}) continue;
            const Extended omega = spectrum.energy(n) - spectrum.energy(m);
            // the (n,m) term is the conjugate of the (m,n) term
            total += 2.0 * (std::conj(comps[m]) * comps[n] * phase_integral(omega, delta)).real();
        }
    }
    return total;
}

double interval_probability(const QuantumState& state, double t_a, double t_b) {
    const double period = require_period(state.spectrum(), "interval_probability");
    const double width = t_b - t_a;
    if (!(width >= 0.0)) throw ContractError("interval_probability", "t_b must not precede t_a");
    if (width > period * (1.0 + 1e-12)) {
        throw ContractError("interval_probability", "interval is longer than the period");
    }
    return std::clamp(density_integral(state, t_a, t_b) / period, 0.0, 1.0);
}

DensityTrace density_trace(const QuantumState& state, double t_start, double t_end, std::size_t samples,
                           std::optional<DensityKind> kind) {
    if (samples < 2) throw ContractError("density_trace", "at least two samples required");
    if (!(t_end > t_start)) throw ContractError("density_trace", "t_end must exceed t_start");
    DensityKind chosen = DensityKind::quasiperiodic;
    std::optional<double> period;
    if (kind) {
        chosen = *kind;
    } else if (is_commensurate(state.spectrum()) && commensurate_structure(state.spectrum())) {
        chosen = DensityKind::periodic;
    }
    if (chosen == DensityKind::periodic) period = require_period(state.spectrum(), "density_trace");

    DensityTrace trace{std::vector<double>(samples), std::vector<double>(samples), chosen, period};
    const double step = (t_end - t_start) / static_cast<double>(samples - 1);
    const double scale = period ? 1.0 / *period : 1.0;
    parallel_for(samples, [&](std::size_t i) {
        const double t = i + 1 == samples ? t_end : t_start + step * static_cast<double>(i);
        trace.times[i] = t;
        trace.values[i] = coherent_norm(state, t) * scale;
    });
    return trace;
}

double trace_spread(const DensityTrace& trace) {
    const auto [lo, hi] = std::minmax_element(trace.values.begin(), trace.values.end());
    return *hi - *lo;
}

bool is_energy_eigenstate(const QuantumState& state) { return state.support().size() == 1; }

double support_period(const QuantumState& state) {
    const auto support = state.support();
    const auto sub = state.spectrum().restricted_to(support);
    if (!is_commensurate(sub)) {
        throw ContractError("support_period", "occupied levels are incommensurate; evolution is not periodic");
    }
    if (!commensurate_structure(sub)) {
        throw ContractError("support_period", "stationary state has no finite period");
    }
    return fundamental_period(sub);
}

}  // namespace chronos
