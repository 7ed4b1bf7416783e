#include "chronos/canonical_time.hpp"
#include "chronos/errors.hpp"
#include "test_support.hpp"

#include "doctest.h"

#include <Eigen/Eigenvalues>

#include <cmath>

using namespace chronos;
using chronos::testing::make_spectrum;
using chronos::testing::naive_density;
using chronos::testing::simpson;
using chronos::testing::single_base;

namespace {

std::shared_ptr<const EnergySpectrum> three_level_sqrt2() {
    return make_spectrum({Extended(1), sqrt(Extended(2))}, {{0, 0}, {1, 0}, {0, 1}});
}

QuantumState two_level() { return QuantumState(single_base({0, 1}), {{1, 0}, {1, 0}}); }

}  // namespace

TEST_CASE("periodic_density: closed forms") {
    const auto eig = basis_state(single_base({0, 2, 5}), 1);
    const double period = fundamental_period(eig.spectrum());
    for (double t : {-3.0, 0.0, 0.7, 100.0}) CHECK(periodic_density(eig, t) == doctest::Approx(1.0 / period).epsilon(1e-14));

    const auto s = two_level();
    CHECK(periodic_density(s, 0.0) == doctest::Approx(1.0 / M_PI).epsilon(1e-15));
    for (int i = 0; i < 50; ++i) {
        const double t = -10.0 + 0.4 * i;
        CHECK(std::abs(periodic_density(s, t) - (1.0 + std::cos(t)) / (2.0 * M_PI)) < 1e-15);
    }
    CHECK_THROWS_WITH_AS(periodic_density(QuantumState(three_level_sqrt2(), {{1, 0}, {1, 0}, {1, 0}}), 0.0),
                         doctest::Contains("quasiperiodic"), ContractError);
}

TEST_CASE("quasiperiodic_density of an eigenstate is 1") {
    const auto spec = three_level_sqrt2();
    for (std::size_t n = 0; n < 3; ++n) {
        const auto b = basis_state(spec, n);
        for (double t : {0.0, 1.5, -1e5, 3e7}) CHECK(quasiperiodic_density(b, t) == doctest::Approx(1.0).epsilon(1e-15));
    }
}

TEST_CASE("normalization over a period: closed form and Simpson oracle") {
    Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const auto spec = chronos::testing::random_commensurate(rng, 2 + trial % 7);
        const auto s = random_state(spec, 300 + trial);
        const double period = fundamental_period(*spec);
        const double t0 = rng.uniform(-50, 50);
        CHECK(std::abs(interval_probability(s, t0, t0 + period) - 1.0) < 1e-10);
        const double quad = simpson([&](double t) { return naive_density(s, t); }, t0, t0 + period, 20000) / period;
        CHECK(std::abs(quad - 1.0) < 1e-8);
    }
}

TEST_CASE("interval_probability: examples and contracts") {
    const auto s = two_level();
    CHECK(interval_probability(s, 0.0, 2.0 * M_PI) == doctest::Approx(1.0).epsilon(1e-14));
    // ∫_0^π (1 + cos t)/2π dt = 1/2
    CHECK(std::abs(interval_probability(s, 0.0, M_PI) - 0.5) < 1e-14);
    // the window centred on the peak carries 1/2 + 1/π
    CHECK(std::abs(interval_probability(s, -M_PI / 2, M_PI / 2) - (0.5 + 1.0 / M_PI)) < 1e-14);
    const double quad = simpson([&](double t) { return (1.0 + std::cos(t)) / (2.0 * M_PI); }, -M_PI / 2, M_PI / 2, 4000);
    CHECK(std::abs(interval_probability(s, -M_PI / 2, M_PI / 2) - quad) < 1e-12);

    const auto eig = basis_state(single_base({0, 1, 3}), 2);
    const double period = 2.0 * M_PI;
    CHECK(interval_probability(eig, 1.0, 2.5) == doctest::Approx(1.5 / period).epsilon(1e-14));

    CHECK_THROWS_AS(interval_probability(s, 0.0, 7.0), ContractError);
    CHECK_THROWS_AS(interval_probability(s, 1.0, 0.5), ContractError);
    CHECK_THROWS_AS(interval_probability(QuantumState(three_level_sqrt2(), {{1, 0}, {1, 0}, {0, 0}}), 0.0, 1.0),
                    ContractError);
}

TEST_CASE("density_integral agrees with Simpson for quasiperiodic states") {
    Rng rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        const auto s = random_state(chronos::testing::random_sqrt2(rng, 2 + trial % 6), 50 + trial);
        const double a = rng.uniform(-20, 20);
        const double b = a + rng.uniform(0.0, 15.0);
        const double quad = simpson([&](double t) { return naive_density(s, t); }, a, b, 40000);
        CHECK(std::abs(density_integral(s, a, b) - quad) < 1e-9);
    }
}

TEST_CASE("covariance: p(t|ψ_τ) = p(t − τ|ψ_0) for both kinds") {
    Rng rng(29);
    for (int trial = 0; trial < 10; ++trial) {
        const bool periodic = trial % 2 == 0;
        const auto spec = periodic ? chronos::testing::random_commensurate(rng, 2 + trial % 6)
                                   : chronos::testing::random_sqrt2(rng, 2 + trial % 6);
        const auto kind = periodic ? DensityKind::periodic : DensityKind::quasiperiodic;
        const auto s = random_state(spec, 7 * trial);
        const double tau = rng.uniform(-1e3, 1e3);
        const auto moved = evolve(s, tau);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const double t = 0.1 * i;
            worst = std::max(worst, std::abs(density(moved, t, kind) - density(s, t - tau, kind)));
        }
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("uniform iff eigenstate") {
    Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const auto spec = trial % 2 ? chronos::testing::random_sqrt2(rng, 2 + trial % 5)
                                    : chronos::testing::random_commensurate(rng, 2 + trial % 5);
        const auto s = random_state(spec, 900 + trial);
        CHECK_FALSE(is_energy_eigenstate(s));
        CHECK(trace_spread(density_trace(s, 0.0, 50.0, 2001)) > 1e-6);
        for (std::size_t n = 0; n < spec->size(); ++n) {
            const auto b = basis_state(spec, n);
            CHECK(is_energy_eigenstate(b));
            CHECK(trace_spread(density_trace(b, 0.0, 50.0, 2001)) < 1e-12);
        }
    }
}

TEST_CASE("global phase changes no density value") {
    const auto spec = three_level_sqrt2();
    const auto s = random_state(spec, 77);
    std::vector<Complex> rotated(s.amplitudes().begin(), s.amplitudes().end());
    for (auto& c : rotated) c *= std::polar(1.0, 1.234);
    const QuantumState r(spec, rotated);
    for (int i = 0; i < 200; ++i) {
        const double t = -50.0 + 0.5 * i;
        CHECK(std::abs(quasiperiodic_density(s, t) - quasiperiodic_density(r, t)) < 1e-13);
    }
}

TEST_CASE("POVM elements: t = 0, Hermitian rank-one PSD, probabilities") {
    const auto spec = single_base({0, 1, 3});
    const double period = 2.0 * M_PI;
    const auto a0 = povm_element(*spec, 0.0, DensityKind::periodic);
    CHECK(a0.matrix.isApprox(Eigen::MatrixXcd::Constant(3, 3, Complex(1.0 / period, 0)), 1e-15));
    const auto m0 = povm_element(*spec, 0.0, DensityKind::quasiperiodic);
    CHECK(m0.matrix.isApprox(Eigen::MatrixXcd::Ones(3, 3), 1e-15));

    Rng rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        const auto qspec = chronos::testing::random_sqrt2(rng, 2 + trial % 6);
        const double t = rng.uniform(-1e4, 1e4);
        const auto m = povm_element(*qspec, t, DensityKind::quasiperiodic);
        CHECK((m.matrix - m.matrix.adjoint()).norm() < 1e-12);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(m.matrix);
        const auto& ev = eig.eigenvalues();
        const auto dim = static_cast<double>(qspec->size());
        CHECK(ev.minCoeff() > -1e-12);
        CHECK(ev.maxCoeff() == doctest::Approx(dim).epsilon(1e-12));
        for (Eigen::Index i = 0; i + 1 < ev.size(); ++i) CHECK(std::abs(ev[i]) < 1e-12);

        const auto s = random_state(qspec, trial);
        CHECK(std::abs(povm_probability(m, s) - quasiperiodic_density(s, t)) < 1e-12);
    }
    CHECK_THROWS_AS(povm_element(*three_level_sqrt2(), 0.0, DensityKind::periodic), ContractError);
}

TEST_CASE("POVM completeness: (1/T)∫_0^T A_t dt = I by Simpson") {
    const auto spec = single_base({0, 1, 3, 4});
    const double period = fundamental_period(*spec);
    const auto integral = simpson([&](double t) -> Eigen::MatrixXcd { return povm_element(*spec, t, DensityKind::periodic).matrix; },
                                  0.0, period, 4000);
    CHECK((integral - Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("density_trace: grid, kind selection, periodicity, errors") {
    const auto s = two_level();
    const auto trace = density_trace(s, 0.0, 4.0 * M_PI, 801);
    CHECK(trace.kind == DensityKind::periodic);
    REQUIRE(trace.period.has_value());
    CHECK(*trace.period == doctest::Approx(2.0 * M_PI));
    REQUIRE(trace.values.size() == 801);
    CHECK(trace.times.front() == 0.0);
    CHECK(trace.times.back() == doctest::Approx(4.0 * M_PI).epsilon(1e-15));
    for (std::size_t i = 0; i < 400; ++i) CHECK(std::abs(trace.values[i + 400] - trace.values[i]) < 1e-10);

    const auto q = random_state(three_level_sqrt2(), 4);
    CHECK(density_trace(q, 0.0, 1.0, 3).kind == DensityKind::quasiperiodic);
    CHECK_FALSE(density_trace(q, 0.0, 1.0, 3).period.has_value());
    CHECK(density_trace(s, 0.0, 1.0, 3, DensityKind::quasiperiodic).values[0] == doctest::Approx(2.0));

    CHECK_THROWS_AS(density_trace(s, 1.0, 1.0, 10), ContractError);
    CHECK_THROWS_AS(density_trace(s, 0.0, 1.0, 1), ContractError);
}

TEST_CASE("quasiperiodic trace: near return without exact repetition") {
    const auto s = random_state(three_level_sqrt2(), 2024);
    constexpr std::size_t samples = 100001;  // step 1e-3 on [0, 100]
    const auto trace = density_trace(s, 0.0, 100.0, samples);
    const double p0 = trace.values.front();

    bool returned = false;
    for (std::size_t i = 0; i < samples; ++i) {
        if (trace.times[i] > 1.0 && std::abs(trace.values[i] - p0) < 1e-3) {
            returned = true;
            break;
        }
    }
    CHECK(returned);

    // The first unit of time, compared with every later shift on the grid.
    constexpr std::size_t window = 1000;
    double closest = INFINITY;
    for (std::size_t shift = window; shift + window < samples; ++shift) {
        double worst = 0.0;
        for (std::size_t i = 0; i < window && worst < closest; i += 10) {
            worst = std::max(worst, std::abs(trace.values[shift + i] - trace.values[i]));
        }
        closest = std::min(closest, worst);
    }
    CHECK(closest > 1e-10);
}

TEST_CASE("support_period") {
    const auto spec = make_spectrum({Extended(1), sqrt(Extended(2))}, {{0, 0}, {1, 0}, {0, 1}});
    const QuantumState s(spec, {{1, 0}, {1, 0}, {0, 0}});
    CHECK(support_period(s) == doctest::Approx(2.0 * M_PI).epsilon(1e-15));
    CHECK_THROWS_AS(support_period(random_state(spec, 1)), ContractError);
    CHECK_THROWS_AS(support_period(basis_state(spec, 0)), ContractError);
}
