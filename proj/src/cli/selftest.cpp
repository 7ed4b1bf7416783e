#include "chronos/selftest.hpp"

#include "chronos/canonical_time.hpp"
#include "chronos/classical_demo.hpp"
#include "chronos/config.hpp"
#include "chronos/fixtures.hpp"
#include "chronos/limits.hpp"
#include "chronos/oscillatory.hpp"
#include "chronos/phase_compare.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace chronos::selftest {

namespace {

using config::format_real;

CheckResult check(std::string name, bool ok, const std::string& what, double value) {
    return {std::move(name), ok, what + "=" + format_real(value)};
}

CheckResult normalization() {
    double worst = 0.0;
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        auto spectrum = fixtures::ladder(2 + seed % 6);
        const auto state = random_state(spectrum, seed);
        worst = std::max(worst, std::abs(interval_probability(state, 0.0, fundamental_period(*spectrum)) - 1.0));
    }
    return check("periodic-normalization", worst < 1e-10, "max_error", worst);
}

CheckResult bohr_normalization() {
    double worst = 0.0;
    for (const auto& name : fixtures::names()) {
        const auto fx = fixtures::by_name(name);
        worst = std::max(worst, std::abs(bohr_mean_analytic(density_as_series(fx.state)) - Complex(1.0)));
    }
    return check("bohr-normalization", worst < 1e-14, "max_error", worst);
}

CheckResult covariance() {
    double worst = 0.0;
    const auto quasi = fixtures::by_name("four-level-quasi");
    const auto ladder = fixtures::ladder(5);
    const auto periodic_state = random_state(ladder, 11);
    for (double tau : {-987.25, 0.0, 123.456}) {
        const auto q_tau = evolve(quasi.state, tau);
        const auto p_tau = evolve(periodic_state, tau);
        for (int i = 0; i < 200; ++i) {
            const double t = 0.5 * i;
            worst = std::max(worst, std::abs(quasiperiodic_density(q_tau, t) - quasiperiodic_density(quasi.state, t - tau)));
            worst = std::max(worst, std::abs(periodic_density(p_tau, t) - periodic_density(periodic_state, t - tau)));
        }
    }
    return check("covariance", worst < 1e-10, "max_residual", worst);
}

CheckResult uniformity() {
    int mismatches = 0;
    auto spectrum = fixtures::three_level_sqrt2();
    std::vector<QuantumState> states;
    for (std::size_t n = 0; n < spectrum->size(); ++n) states.push_back(basis_state(spectrum, n));
    for (std::uint64_t seed = 1; seed <= 5; ++seed) states.push_back(random_state(spectrum, seed));
    for (const auto& s : states) {
        const bool constant = trace_spread(density_trace(s, 0.0, 50.0, 501)) < 1e-12;
        if (constant != is_energy_eigenstate(s)) ++mismatches;
    }
    return check("uniform-iff-eigenstate", mismatches == 0, "mismatches", mismatches);
}

CheckResult periodic_reduction() {
    auto spectrum = fixtures::three_level_sqrt2();
    const QuantumState state(spectrum, {Complex(0.6, 0.0), Complex(0.0, 0.8), Complex{}});
    FourierSeries f(spectrum->bases());
    f.add(FrequencyLabel({1, 0}), 0.5);
    f.add(FrequencyLabel({-1, 0}), 0.5);
    f.add(FrequencyLabel({2, 0}), Complex(0.0, -0.15));
    f.add(FrequencyLabel({-2, 0}), Complex(0.0, 0.15));
    const double period = support_period(state);
    const auto integrand = [&](double t) { return Complex(f.evaluate(t).real() * quasiperiodic_density(state, t) / period, 0.0); };
    const double direct = integrate_composite(integrand, 0.0, period, period / 64).real();
    const double err = std::abs(expectation(state, f) - direct);
    return check("periodic-reduction", err < 1e-10, "abs_error", err);
}

CheckResult three_level() {
    const double h = 1.0 / std::sqrt(2.0);
    const auto rational = three_level_experiment(h, h, Rational(0), 1, 1);
    const auto irrational = three_level_experiment(h, h, IrrationalToken{"sqrt2"}, 1, 1);
    const double tv = total_variation_distance(rational.arsenovic, irrational.arsenovic);
    double canon = 0.0;
    for (int j = 0; j < 64; ++j) {
        const double theta = 2.0 * M_PI * j / 64;
        canon = std::max(canon, std::abs(rational.canonical.density(theta) - irrational.canonical.density(theta)));
    }
    const bool ok = std::abs(tv - 1.0 / M_PI) < 1e-6 && canon < 1e-12;
    return check("three-level-discontinuity", ok, "tv_distance", tv);
}

CheckResult washout() {
    const auto fx = fixtures::by_name("three-level-sqrt2");
    const double omega = 0.7;
    const auto report = washout_demo(fx.state, omega, {100.5 * 2.0 * M_PI / omega, 1000.5 * 2.0 * M_PI / omega});
    const double last = report.estimates.back().value;
    return check("washout-decay", last < 1e-2, "magnitude", last);
}

CheckResult limit() {
    const auto fx = fixtures::by_name("three-level-sqrt2");
    FourierSeries f(fx.spectrum->bases());
    f.add(FrequencyLabel({1, 0}), 0.5);
    f.add(FrequencyLabel({-1, 0}), 0.5);
    const auto trace = expectation_sequence(fx.state, f, rational_approximants(*fx.spectrum, 8));
    double err = 1.0;
    for (const auto& e : trace.entries) {
        if (e.denominator >= 100) {
            err = std::abs(e.expectation - trace.target);
            break;
        }
    }
    return check("periodic-limit", err < 1e-3, "abs_error", err);
}

CheckResult classical() {
    const double w2 = std::sqrt(2.0);
    int failures = 0;
    for (double t_star : {1.0, 1234.5678, 9876.54321}) {
        const auto c = reconstruct_time(angles_at(t_star, 1.0, w2), 1.0, w2, {0.0, 1e4}, 1e-4);
        if (c.size() != 1 || std::abs(c[0] - t_star) >= 1e-4) ++failures;
    }
    return check("classical-reconstruction", failures == 0, "failures", failures);
}

CheckResult povm() {
    const auto fx = fixtures::by_name("four-level-quasi");
    double min_eig = 0.0;
    double density_err = 0.0;
    for (double t : {0.0, 1.7, 314.159}) {
        const auto element = povm_element(*fx.spectrum, t, DensityKind::quasiperiodic);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(element.matrix);
        min_eig = std::min(min_eig, solver.eigenvalues().minCoeff());
        density_err = std::max(density_err, std::abs(povm_probability(element, fx.state) - quasiperiodic_density(fx.state, t)));
    }
    return check("povm-positive", min_eig >= -1e-12 && density_err < 1e-12, "min_eigenvalue", min_eig);
}

}  // namespace

std::vector<CheckResult> run_all() {
    return {normalization(), bohr_normalization(), covariance(), uniformity(), periodic_reduction(),
            three_level(),   washout(),            limit(),      classical(),  povm()};
}

}  // namespace chronos::selftest
