#include "chronos/errors.hpp"
#include "chronos/spectrum.hpp"
#include "test_support.hpp"

#include "doctest.h"

#include <cmath>
#include <numeric>

using namespace chronos;
using chronos::testing::make_spectrum;
using chronos::testing::single_base;

namespace {

const Extended kSqrt2 = sqrt(Extended(2));

EnergySpectrum sqrt2_three_level() { return *make_spectrum({Extended(1), kSqrt2}, {{0, 0}, {1, 0}, {0, 1}}); }

// Continued fraction of √2 by the Pell recurrence p' = p + 2q, q' = p + q.
std::vector<Convergent> pell_convergents(int count) {
    std::vector<Convergent> out{{1, 1}};
    while (static_cast<int>(out.size()) < count) {
        const auto [p, q] = out.back();
        out.push_back({p + 2 * q, p + q});
    }
    return out;
}

}  // namespace

TEST_CASE("difference_label: identity, unit gap, √2 − 1") {
    const auto unit = single_base({0, 1});
    CHECK(difference_label(*unit, 1, 1).is_zero());
    const auto d = difference_label(*unit, 1, 0);
    CHECK(d.coefficients() == std::vector<std::int64_t>{1});
    CHECK(to_double(d.value(unit->bases())) == 1.0);

    const auto s = sqrt2_three_level();
    const auto l = difference_label(s, 2, 1);
    CHECK(l.coefficients() == std::vector<std::int64_t>{-1, 1});
    CHECK(to_double(l.value(s.bases())) == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-15));

    CHECK_THROWS_AS(difference_label(s, 3, 0), ContractError);
}

TEST_CASE("difference_label is antisymmetric") {
    Rng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        const auto s = chronos::testing::random_sqrt2(rng, 2 + trial % 5);
        for (std::size_t m = 0; m < s->size(); ++m) {
            for (std::size_t n = 0; n < s->size(); ++n) {
                CHECK(difference_label(*s, m, n) == -difference_label(*s, n, m));
            }
        }
    }
}

TEST_CASE("is_commensurate decides on the integer lattice") {
    CHECK(is_commensurate(*single_base({0, 3, 7, -2})));
    CHECK_FALSE(is_commensurate(sqrt2_three_level()));
    // second base never used
    CHECK(is_commensurate(*make_spectrum({Extended(1), kSqrt2}, {{0, 0}, {2, 0}, {5, 0}})));
    // both bases used, but only along the single direction (1,1)
    CHECK(is_commensurate(*make_spectrum({Extended(1), kSqrt2}, {{0, 0}, {1, 1}, {3, 3}})));
    CHECK_FALSE(is_commensurate(*make_spectrum({Extended(1), kSqrt2}, {{0, 0}, {1, 1}, {3, 2}})));
}

TEST_CASE("fundamental_period") {
    CHECK(fundamental_period(*single_base({0, 1, 2})) == doctest::Approx(2.0 * M_PI).epsilon(1e-15));
    CHECK(fundamental_period(*single_base({0, 2, 4})) == doctest::Approx(M_PI).epsilon(1e-15));
    // two levels with gap 1.5: T = 2π/1.5
    CHECK(fundamental_period(*single_base({0, 3}, 0.5)) == doctest::Approx(2.0 * M_PI / 1.5).epsilon(1e-15));
    // direction (1,1), gcd 2: unit = 2(1 + √2)
    const auto diag = make_spectrum({Extended(1), kSqrt2}, {{0, 0}, {2, 2}, {6, 6}});
    CHECK(fundamental_period(*diag) == doctest::Approx(2.0 * M_PI / (2.0 * (1.0 + std::sqrt(2.0)))).epsilon(1e-14));

    CHECK_THROWS_WITH_AS(fundamental_period(sqrt2_three_level()), doctest::Contains("no finite period"), ContractError);
    CHECK_THROWS_AS(fundamental_period(*single_base({4})), ContractError);
}

TEST_CASE("levels 0,2,4: density repeats with period π and not with π/2") {
    // dense-sampling oracle, independent of the gcd computation
    const auto s = single_base({0, 2, 4});
    const std::vector<std::complex<double>> c{{0.3, 0.1}, {-0.5, 0.7}, {0.2, -0.4}};
    const auto dens = [&](double t) {
        std::complex<double> sum{};
        for (std::size_t n = 0; n < 3; ++n) sum += c[n] * std::polar(1.0, 2.0 * static_cast<double>(n) * t);
        return std::norm(sum);
    };
    const double period = fundamental_period(*s);
    double worst_period = 0.0, worst_half = 0.0;
    for (int i = 0; i < 2000; ++i) {
        const double t = 0.01 * i;
        worst_period = std::max(worst_period, std::abs(dens(t + period) - dens(t)));
        worst_half = std::max(worst_half, std::abs(dens(t + period / 2) - dens(t)));
    }
    CHECK(worst_period < 1e-12);
    CHECK(worst_half > 1e-2);
}

TEST_CASE("commensurate gaps are integer multiples of 2π/T") {
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const auto s = chronos::testing::random_commensurate(rng, 2 + trial % 7);
        const Extended unit = two_pi_extended() / fundamental_period_extended(*s);
        for (std::size_t m = 0; m < s->size(); ++m) {
            for (std::size_t n = 0; n < s->size(); ++n) {
                const Extended ratio = (s->energy(m) - s->energy(n)) / unit;
                CHECK(to_double(abs(ratio - round(ratio))) < 1e-25);
            }
        }
    }
}

TEST_CASE("spectrum construction contracts") {
    CHECK_THROWS_AS(single_base({0, 1, 1}), ContractError);
    CHECK_THROWS_AS(BaseFrequencies({Extended(1), Extended(2)}, false), ContractError);
    CHECK_THROWS_AS(BaseFrequencies({Extended(-1)}, true), ContractError);
    CHECK_THROWS_AS(BaseFrequencies({}, true), ContractError);
    CHECK_THROWS_AS(EnergySpectrum(BaseFrequencies({Extended(1)}, true), {{0, 1}}), ContractError);
    CHECK_THROWS_AS(EnergySpectrum(BaseFrequencies({Extended(1)}, true), {}), ContractError);
}

TEST_CASE("continued-fraction convergents: √2 and the golden ratio") {
    const auto sqrt2 = continued_fraction_convergents(kSqrt2, 12);
    const auto pell = pell_convergents(12);
    REQUIRE(sqrt2.size() == pell.size());
    for (std::size_t k = 0; k < pell.size(); ++k) {
        CHECK(sqrt2[k].numerator == pell[k].numerator);
        CHECK(sqrt2[k].denominator == pell[k].denominator);
    }
    CHECK(sqrt2[3].numerator == 17);
    CHECK(sqrt2[3].denominator == 12);

    // Fibonacci ratios F_{k+1}/F_k
    const auto golden = continued_fraction_convergents(parse_extended("golden"), 20);
    REQUIRE(golden.size() == 20);
    std::int64_t a = 1, b = 1;
    for (const auto& c : golden) {
        CHECK(c.numerator == b);
        CHECK(c.denominator == a);
        const auto next = a + b;
        a = b;
        b = next;
    }

    // rational input terminates
    const auto half = continued_fraction_convergents(Extended(3) / 2, 10);
    REQUIRE(half.size() == 2);
    CHECK(half.back().numerator == 3);
    CHECK(half.back().denominator == 2);
}

TEST_CASE("rational_approximants: √2 steps, error bound, monotone periods") {
    const auto target = sqrt2_three_level();
    const auto seq = rational_approximants(target, 10);
    REQUIRE(seq.steps.size() == 10);
    const auto pell = pell_convergents(12);
    // 1/1 would merge E_1 and E_2, so the sequence starts at the second convergent
    for (std::size_t k = 0; k < seq.steps.size(); ++k) {
        const auto& step = seq.steps[k];
        const auto& expected = pell[k + 1];
        CHECK(step.index == static_cast<int>(k) + 2);
        CHECK(step.ratio.numerator == expected.numerator);
        CHECK(step.ratio.denominator == expected.denominator);
        CHECK(step.spectrum.dimension() == 1);
        CHECK(step.spectrum.size() == target.size());
        CHECK(is_commensurate(step.spectrum));
        CHECK(to_double(abs(step.period - fundamental_period_extended(step.spectrum))) == 0.0);
        if (k) CHECK(step.period > seq.steps[k - 1].period);
        // |E_n^(k) − E_n| ≤ |a_n2|·β_1/(q_k q_{k+1})
        for (std::size_t n = 0; n < target.size(); ++n) {
            const double err = to_double(abs(step.spectrum.energy(n) - target.energy(n)));
            const double bound = std::abs(static_cast<double>(target.level(n)[1])) /
                                 (static_cast<double>(expected.denominator) * static_cast<double>(pell[k + 2].denominator));
            CHECK(err <= bound * (1.0 + 1e-12) + 1e-30);
        }
    }
    // every other step approaches from the same side, so per-level errors shrink
    for (std::size_t k = 2; k < seq.steps.size(); ++k) {
        for (std::size_t n = 0; n < target.size(); ++n) {
            CHECK(abs(seq.steps[k].spectrum.energy(n) - target.energy(n)) <=
                  abs(seq.steps[k - 2].spectrum.energy(n) - target.energy(n)) + Extended(1e-30));
        }
    }
}

TEST_CASE("rational_approximants: convergents that merge levels are skipped") {
    // levels 0, 3, 2√2
    const auto target = make_spectrum({Extended(1), kSqrt2}, {{0, 0}, {3, 0}, {0, 2}});
    const auto seq = rational_approximants(*target, 4);
    // with 3/2 the rows become 0, 3·2, 2·3, so that convergent is absent
    for (const auto& step : seq.steps) CHECK_FALSE((step.ratio.numerator == 3 && step.ratio.denominator == 2));
    CHECK(seq.steps.front().ratio.numerator == 1);
}

TEST_CASE("rational_approximants: golden ratio keeps periods strictly increasing") {
    const auto target = make_spectrum({Extended(1), parse_extended("golden")}, {{0, 0}, {1, 0}, {0, 1}});
    const auto seq = rational_approximants(*target, 8);
    REQUIRE(seq.steps.size() == 8);
    for (std::size_t k = 1; k < seq.steps.size(); ++k) CHECK(seq.steps[k].period > seq.steps[k - 1].period);
    // 1/1 merges two levels and is skipped
    CHECK(seq.steps[0].ratio.numerator == 2);
    CHECK(seq.steps[0].ratio.denominator == 1);
}

TEST_CASE("rational_approximants: a secretly rational ratio is reproduced exactly") {
    // Declared independent, but 1.5 is rational: the expansion stops at 3/2.
    const auto target = make_spectrum({Extended(2), Extended(3)}, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    const auto seq = rational_approximants(*target, 6);
    REQUIRE_FALSE(seq.steps.empty());
    const auto& last = seq.steps.back();
    CHECK(last.ratio.numerator == 3);
    CHECK(last.ratio.denominator == 2);
    for (std::size_t n = 0; n < target->size(); ++n) CHECK(last.spectrum.energy(n) == target->energy(n));
}

TEST_CASE("rational_approximants: contract errors") {
    const auto target = sqrt2_three_level();
    CHECK_THROWS_AS(rational_approximants(target, 0), ContractError);
    CHECK_THROWS_AS(rational_approximants(*single_base({0, 1}), 3), ContractError);
    CHECK_THROWS_AS(rational_approximants(*make_spectrum({Extended(1), kSqrt2}, {{0, 0}, {2, 0}}), 3), ContractError);
    const auto three = make_spectrum({Extended(1), kSqrt2, sqrt(Extended(3))}, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}});
    CHECK_THROWS_AS(rational_approximants(*three, 3), ContractError);
}
