#include "chronos/limits.hpp"

#include "chronos/errors.hpp"
#include "chronos/oscillatory.hpp"

#include <cmath>

namespace chronos {

ComplexFunction periodize(const FourierSeries& f, double period) {
    if (!(period > 0.0)) throw ContractError("periodize", "period must be positive");
    const Extended period_ext(period);
    return [f, period_ext](double t) {
        Extended r = fmod(Extended(t), period_ext);
        if (r < 0) r += period_ext;
        const Extended reduced = r;
        Complex sum{};
        for (const auto& [label, value] : f.terms()) sum += value * unit_phase(label.value(f.bases()) * reduced);
        return sum;
    };
}

double periodic_expectation(const QuantumState& state, const FourierSeries& f, const ApproximantStep& step) {
    const auto& approx = step.spectrum;
    if (approx.size() != state.size()) throw ContractError("periodic_expectation", "level count mismatch");
    const Extended& period = step.period;
    Complex total{};
    for (const auto& [label, coefficient] : f.terms()) {
        const Extended omega_f = label.value(f.bases());
        for (std::size_t m = 0; m < state.size(); ++m) {
            const Complex cm = state.amplitude(m);
            if (cm == Complex{}) continue;
            for (std::size_t n = 0; n < state.size(); ++n) {
                const Complex cn = state.amplitude(n);
                if (cn == Complex{}) continue;
                const Extended omega = omega_f + approx.energy(n) - approx.energy(m);
                total += coefficient * std::conj(cm) * cn * phase_integral(omega, period);
            }
        }
    }
    return (total / to_double(period)).real();
}

LimitTrace expectation_sequence(const QuantumState& state, const FourierSeries& f,
                                const ApproximantSequence& approximants) {
    if (!(state.spectrum() == approximants.target)) {
        throw ContractError("expectation_sequence", "approximants were built for a different spectrum");
    }
    if (!(f.bases() == approximants.target.bases())) {
        throw ContractError("expectation_sequence", "f is not expressed over the target's base frequencies");
    }
    LimitTrace trace{{}, expectation(state, f)};
    trace.entries.reserve(approximants.steps.size());
    for (const auto& step : approximants.steps) {
        trace.entries.push_back(
            {step.index, to_double(step.period), step.denominator(), periodic_expectation(state, f, step)});
    }
    return trace;
}

FourierSeries project_onto(const FourierSeries& f, const ApproximantStep& step) {
    if (f.bases().size() != 2) throw ContractError("project_onto", "f must be over two base frequencies");
    FourierSeries out(step.spectrum.bases());
    const auto [p, q] = step.ratio;
    for (const auto& [label, value] : f.terms()) {
        const __int128 c = static_cast<__int128>(label[0]) * q + static_cast<__int128>(label[1]) * p;
        if (c > std::numeric_limits<std::int64_t>::max() || c < std::numeric_limits<std::int64_t>::min()) {
            throw ContractError("project_onto", "label overflow");
        }
        out.add(FrequencyLabel({static_cast<std::int64_t>(c)}), value);
    }
    return out;
}

}  // namespace chronos
