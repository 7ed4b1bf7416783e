#include "chronos/phase_compare.hpp"

#include "chronos/canonical_time.hpp"
#include "chronos/errors.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

namespace chronos {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

bool is_token(const std::string& text) { return text == "sqrt2" || text == "golden" || text == "pi"; }

std::int64_t parse_int(const std::string& text, const char* contract) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty()) throw ContractError(contract, "not an integer: '" + text + "'");
    return v;
}

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
    const __int128 l = static_cast<__int128>(a / std::gcd(a, b)) * b;
    if (l > std::numeric_limits<std::int64_t>::max()) throw ContractError("three_level_experiment", "denominators too large");
    return static_cast<std::int64_t>(l);
}

std::int64_t scaled(const Rational& r, std::int64_t denominator) {
    return r.numerator() * (denominator / r.denominator());
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            const auto den = parse_int(text.substr(slash + 1), "parse_rational");
            if (den == 0) throw ContractError("parse_rational", "zero denominator");
            return Rational(parse_int(text.substr(0, slash), "parse_rational"), den);
        }
        const auto dot = text.find('.');
        if (dot == std::string::npos) return Rational(parse_int(text, "parse_rational"));
        const std::string whole = text.substr(0, dot);
        const std::string frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 17 || frac.find_first_not_of("0123456789") != std::string::npos) {
            throw ContractError("parse_rational", "malformed decimal '" + text + "'");
        }
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        const bool negative = !whole.empty() && whole[0] == '-';
        const std::int64_t int_part = (whole.empty() || whole == "-" || whole == "+") ? 0 : parse_int(whole, "parse_rational");
        const std::int64_t frac_part = parse_int(frac, "parse_rational");
        const __int128 num = static_cast<__int128>(int_part < 0 ? -int_part : int_part) * scale + frac_part;
        if (num > std::numeric_limits<std::int64_t>::max()) throw ContractError("parse_rational", "value too large");
        const auto n = static_cast<std::int64_t>(num);
        return Rational(negative ? -n : n, scale);
    } catch (const boost::bad_rational&) {
        throw ContractError("parse_rational", "invalid rational '" + text + "'");
    }
}

ExactScalar parse_exact_scalar(const std::string& text) {
    if (is_token(text)) return IrrationalToken{text};
    return parse_rational(text);
}

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

PhaseDistribution::PhaseDistribution(std::optional<QuantumState> state, std::optional<double> period,
                                     Provenance provenance)
    : state_(std::move(state)), period_(period), provenance_(std::move(provenance)) {}

PhaseDistribution PhaseDistribution::uniform(Provenance provenance) {
    return PhaseDistribution(std::nullopt, std::nullopt, std::move(provenance));
}

PhaseDistribution PhaseDistribution::rescaled(QuantumState state, double period, Provenance provenance) {
    if (!(period > 0.0) || !std::isfinite(period)) throw ContractError("PhaseDistribution", "period must be positive");
    return PhaseDistribution(std::move(state), period, std::move(provenance));
}

double PhaseDistribution::density(double theta) const {
    if (!state_) return 1.0 / kTwoPi;
    return quasiperiodic_density(*state_, theta * (*period_ / kTwoPi)) / kTwoPi;
}

double PhaseDistribution::probability(double theta_a, double theta_b) const {
    if (!(theta_b >= theta_a)) throw ContractError("PhaseDistribution::probability", "θ_b must not precede θ_a");
    if (!state_) return (theta_b - theta_a) / kTwoPi;
    const double scale = *period_ / kTwoPi;
    return density_integral(*state_, theta_a * scale, theta_b * scale) / *period_;
}

std::vector<double> PhaseDistribution::sample(std::size_t count) const {
    std::vector<double> out(count);
    for (std::size_t j = 0; j < count; ++j) out[j] = density(kTwoPi * static_cast<double>(j) / static_cast<double>(count));
    return out;
}

PhaseDistribution phase_from_periodic(const QuantumState& state) {
    if (!is_commensurate(state.spectrum())) {
        throw ContractError("phase_from_periodic", "spectrum is incommensurate; no period to rescale");
    }
    double period = 0.0;
    try {
        period = fundamental_period(state.spectrum());
    } catch (const ContractError& e) {
        throw ContractError("phase_from_periodic", e.what());
    }
    return PhaseDistribution::rescaled(state, period, std::monostate{});
}

double arsenovic_quasi_phase_probability(const QuantumState& state, double theta_a, double theta_b) {
    if (is_commensurate(state.spectrum())) {
        throw ContractError("arsenovic_quasi_phase_probability", "spectrum is commensurate; use phase_from_periodic");
    }
    if (!(0.0 <= theta_a && theta_a <= theta_b && theta_b <= kTwoPi)) {
        throw ContractError("arsenovic_quasi_phase_probability", "require 0 <= θ_a <= θ_b <= 2π");
    }
    return (theta_b - theta_a) / kTwoPi;
}

double total_variation_distance(const PhaseDistribution& a, const PhaseDistribution& b) {
    const auto diff = [&](double theta) { return a.density(theta) - b.density(theta); };
    constexpr std::size_t cells = 4096;
    using rule = boost::math::quadrature::gauss<double, 20>;

    const auto abs_integral = [&](double lo, double hi) {
        if (hi <= lo) return 0.0;
        return std::abs(rule::integrate(diff, lo, hi));
    };

    double total = 0.0;
    double lo = 0.0;
    double f_lo = diff(lo);
    for (std::size_t i = 1; i <= cells; ++i) {
        const double hi = kTwoPi * static_cast<double>(i) / static_cast<double>(cells);
        const double f_hi = diff(hi);
        if ((f_lo < 0.0 && f_hi > 0.0) || (f_lo > 0.0 && f_hi < 0.0)) {
            std::uintmax_t iterations = 100;
            const auto tol = boost::math::tools::eps_tolerance<double>(52);
            const auto [r_lo, r_hi] = boost::math::tools::toms748_solve(diff, lo, hi, f_lo, f_hi, tol, iterations);
            const double root = 0.5 * (r_lo + r_hi);
            total += abs_integral(lo, root) + abs_integral(root, hi);
        } else {
            total += abs_integral(lo, hi);
        }
        lo = hi;
        f_lo = f_hi;
    }
    return 0.5 * total;
}

ConvergenceReport washout_demo(const QuantumState& state, double omega, const std::vector<double>& horizons,
                               double tol) {
    if (omega == 0.0) throw ContractError("washout_demo", "ω must be nonzero");
    double max_gap = 0.0;
    const auto& spectrum = state.spectrum();
    for (std::size_t m = 0; m < spectrum.size(); ++m) {
        for (std::size_t n = 0; n < spectrum.size(); ++n) {
            max_gap = std::max(max_gap, std::abs(to_double(spectrum.energy(n) - spectrum.energy(m))));
        }
    }
    const Extended om(omega);
    const ComplexFunction integrand = [&](double t) {
        return unit_phase(om * Extended(t)) * quasiperiodic_density(state, t);
    };
    const auto averages = cesaro_averages(integrand, horizons, std::abs(omega) + max_gap);

    ConvergenceReport report;
    for (std::size_t i = 0; i < averages.size(); ++i) report.estimates.push_back({horizons[i], std::abs(averages[i])});
    if (averages.size() >= 2) {
        const double delta = std::abs(averages.back() - averages[averages.size() - 2]);
        const double growth = horizons.back() / horizons[horizons.size() - 2];
        report.final_error_bound = delta / (growth - 1.0);
        report.converged = delta < tol;
    }
    return report;
}

double washout_limit(const QuantumState& state, const FrequencyLabel& label) {
    return std::abs(density_as_series(state).coefficient(-label));
}

ThreeLevelResult three_level_experiment(Complex c0, Complex c1, const ExactScalar& epsilon, Rational gap01,
                                        Rational gap12) {
    const double norm = std::norm(c0) + std::norm(c1);
    if (std::abs(norm - 1.0) > 1e-8) {
        throw ContractError("three_level_experiment", "|c0|^2 + |c1|^2 must equal 1");
    }
    if (gap01.numerator() <= 0) throw ContractError("three_level_experiment", "E_1 - E_0 must be positive");

    std::shared_ptr<const EnergySpectrum> spectrum;
    std::optional<Rational> nu;
    Provenance provenance;
    if (const auto* eps = std::get_if<Rational>(&epsilon)) {
        const Rational e1 = gap01;
        const Rational e2 = gap01 + gap12 + *eps;
        if (e2.numerator() == 0 || e2 == e1) {
            throw ContractError("three_level_experiment", "perturbed E_2 coincides with another level");
        }
        const std::int64_t den = lcm_checked(e1.denominator(), e2.denominator());
        spectrum = std::make_shared<const EnergySpectrum>(
            BaseFrequencies({Extended(1) / Extended(den)}, true),
            std::vector<std::vector<std::int64_t>>{{0}, {scaled(e1, den)}, {scaled(e2, den)}});
        nu = (e2 - e1) / e1;
        provenance = RationalRatio{*nu};
    } else {
        const auto& token = std::get<IrrationalToken>(epsilon);
        const Rational e1 = gap01;
        const Rational e2_rational = gap01 + gap12;
        const std::int64_t den = lcm_checked(e1.denominator(), e2_rational.denominator());
        spectrum = std::make_shared<const EnergySpectrum>(
            BaseFrequencies({Extended(1) / Extended(den), parse_extended(token.name)}, true),
            std::vector<std::vector<std::int64_t>>{{0, 0}, {scaled(e1, den), 0}, {scaled(e2_rational, den), 1}});
        provenance = IrrationalRatio{token.name};
    }

    QuantumState state(spectrum, {c0, c1, Complex{}});
    PhaseDistribution arsenovic = nu ? PhaseDistribution::rescaled(state, fundamental_period(*spectrum), provenance)
                                     : PhaseDistribution::uniform(provenance);
    // 2π/(E_1 − E_0) even when c0 or c1 vanishes and the state is stationary.
    const double own_period = kTwoPi / boost::rational_cast<double>(gap01);
    PhaseDistribution canonical = PhaseDistribution::rescaled(state, own_period, std::monostate{});
    const double tv = total_variation_distance(arsenovic, canonical);
    return ThreeLevelResult{*spectrum, nu, std::move(arsenovic), std::move(canonical), tv};
}

}  // namespace chronos
