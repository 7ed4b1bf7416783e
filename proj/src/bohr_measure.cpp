#include "chronos/bohr_measure.hpp"

#include "chronos/errors.hpp"
#include "chronos/oscillatory.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace chronos {

FourierSeries::FourierSeries(BaseFrequencies bases) : bases_(std::move(bases)) {}

FourierSeries::FourierSeries(BaseFrequencies bases, Terms terms) : bases_(std::move(bases)) {
    for (const auto& [label, value] : terms) add(label, value);
}

FourierSeries FourierSeries::constant(const BaseFrequencies& bases, Complex value) {
    FourierSeries s(bases);
    s.add(FrequencyLabel::zero(bases.size()), value);
    return s;
}

void FourierSeries::add(const FrequencyLabel& label, Complex value) {
    if (label.size() != bases_.size()) {
        throw ContractError("FourierSeries", "label " + to_string(label) + " has wrong dimension");
    }
    auto [it, inserted] = terms_.try_emplace(label, value);
    if (!inserted) it->second += value;
    if (it->second == Complex{}) terms_.erase(it);
}

Complex FourierSeries::coefficient(const FrequencyLabel& label) const {
    auto it = terms_.find(label);
    return it == terms_.end() ? Complex{} : it->second;
}

Complex FourierSeries::evaluate(double t) const {
    const Extended te(t);
    Complex sum{};
    for (const auto& [label, value] : terms_) sum += value * unit_phase(label.value(bases_) * te);
    return sum;
}

bool FourierSeries::is_real(double tol) const {
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& term) {
        return std::abs(coefficient(-term.first) - std::conj(term.second)) <= tol;
    });
}

double FourierSeries::max_abs_frequency() const {
    double out = 0.0;
    for (const auto& [label, value] : terms_) out = std::max(out, std::abs(to_double(label.value(bases_))));
    return out;
}

FourierSeries density_as_series(const QuantumState& state) {
    const auto& spectrum = state.spectrum();
    FourierSeries series(spectrum.bases());
    for (std::size_t m = 0; m < state.size(); ++m) {
        if (state.amplitude(m) == Complex{}) continue;
        for (std::size_t n = 0; n < state.size(); ++n) {
            if (state.amplitude(n) == Complex{}) continue;
            series.add(difference_label(spectrum, n, m), std::conj(state.amplitude(m)) * state.amplitude(n));
        }
    }
    return series;
}

FourierSeries series_product(const FourierSeries& f, const FourierSeries& g) {
    if (!(f.bases() == g.bases())) throw ContractError("series_product", "series use different base frequencies");
    FourierSeries out(f.bases());
    for (const auto& [lf, vf] : f.terms()) {
        for (const auto& [lg, vg] : g.terms()) out.add(lf + lg, vf * vg);
    }
    return out;
}

Complex bohr_mean_analytic(const FourierSeries& f) {
    return f.coefficient(FrequencyLabel::zero(f.bases().size()));
}

double expectation(const QuantumState& state, const FourierSeries& f) {
    if (!f.is_real()) throw ContractError("expectation", "f must be real-valued (f_{-L} = conj f_L)");
    const Complex value = bohr_mean_analytic(series_product(f, density_as_series(state)));
    if (std::abs(value.imag()) >= 1e-12) {
        throw ContractError("expectation", "imaginary residue above 1e-12 for a real observable");
    }
    return value.real();
}

std::vector<Complex> cesaro_averages(const ComplexFunction& f, const std::vector<double>& horizons,
                                     double frequency_bound) {
    const double max_panel =
        frequency_bound > 0.0 ? 0.25 * (2.0 * M_PI / frequency_bound) : std::numeric_limits<double>::infinity();
    std::vector<Complex> out;
    out.reserve(horizons.size());
    double previous = 0.0;
    Complex integral{};
    for (double tau : horizons) {
        if (!(tau > previous)) throw ContractError("cesaro_averages", "horizons must be positive and increasing");
        integral += integrate_composite(f, previous, tau, std::min(max_panel, tau - previous));
        out.push_back(integral / tau);
        previous = tau;
    }
    return out;
}

ConvergenceReport bohr_mean_numeric(const RealFunction& f, const AveragingSchedule& schedule, double tol) {
    if (!(schedule.initial_horizon > 0.0)) throw ContractError("bohr_mean_numeric", "initial horizon must be positive");
    if (!(schedule.growth > 1.0)) throw ContractError("bohr_mean_numeric", "growth factor must exceed 1");
    if (schedule.max_steps < 1) throw ContractError("bohr_mean_numeric", "at least one step required");

    const ComplexFunction wrapped = [&f](double t) { return Complex(f(t), 0.0); };
    ConvergenceReport report;
    double previous = 0.0;
    double horizon = schedule.initial_horizon;
    Complex integral{};
    const double max_panel = schedule.frequency_bound > 0.0
                                 ? 0.25 * (2.0 * M_PI / schedule.frequency_bound)
                                 : std::numeric_limits<double>::infinity();
    for (int step = 0; step < schedule.max_steps; ++step) {
        integral += integrate_composite(wrapped, previous, horizon, std::min(max_panel, horizon - previous));
        report.estimates.push_back({horizon, integral.real() / horizon});
        const auto count = report.estimates.size();
        if (count >= 2) {
            const double delta = std::abs(report.estimates[count - 1].value - report.estimates[count - 2].value);
            report.final_error_bound = delta / (schedule.growth - 1.0);
            if (delta < tol) {
                report.converged = true;
                break;
            }
        }
        previous = horizon;
        horizon *= schedule.growth;
    }
    return report;
}

}  // namespace chronos
