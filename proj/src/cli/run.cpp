#include "chronos/cli.hpp"

#include "chronos/canonical_time.hpp"
#include "chronos/classical_demo.hpp"
#include "chronos/config.hpp"
#include "chronos/errors.hpp"
#include "chronos/fixtures.hpp"
#include "chronos/limits.hpp"
#include "chronos/phase_compare.hpp"
#include "chronos/selftest.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

namespace chronos::cli {

namespace {

using config::format_real;
using config::InputError;
using config::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotConverged = 2;

struct CommonOptions {
    std::string spectrum;
    std::string state;
    std::string fixture;
    std::string out;
    std::string format;
    std::uint64_t seed = 1;
    bool strict = false;
};

struct Inputs {
    std::shared_ptr<const EnergySpectrum> spectrum;
    std::optional<QuantumState> state;
};

// Loads and validates every referenced input before any computation.
Inputs load_inputs(const CommonOptions& opts, bool need_state) {
    if (!opts.fixture.empty()) {
        if (!opts.spectrum.empty() || !opts.state.empty()) {
            throw InputError("--fixture cannot be combined with --spectrum/--state");
        }
        auto fx = fixtures::by_name(opts.fixture);
        return {fx.spectrum, fx.state};
    }
    if (opts.spectrum.empty()) throw InputError("--spectrum FILE (or --fixture NAME) is required");
    Inputs in{config::spectrum_from_json(config::load_json(opts.spectrum)), std::nullopt};
    if (!opts.state.empty()) {
        in.state = config::state_from_json(config::load_json(opts.state), in.spectrum);
    } else if (need_state) {
        in.state = random_state(in.spectrum, opts.seed);
    }
    return in;
}

std::pair<double, double> parse_pair(const std::string& text, const char* what) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw InputError(std::string(what) + " expects 'a,b'");
    try {
        return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw InputError(std::string(what) + " expects two numbers 'a,b'");
    }
}

Complex parse_amplitude(const std::string& text) {
    if (text.find(',') != std::string::npos) {
        const auto [re, im] = parse_pair(text, "amplitude");
        return {re, im};
    }
    try {
        return {std::stod(text), 0.0};
    } catch (const std::exception&) {
        throw InputError("amplitude expects 're' or 're,im'");
    }
}

double max_gap(const EnergySpectrum& spectrum) {
    const auto [lo, hi] = std::minmax_element(spectrum.energies().begin(), spectrum.energies().end());
    return to_double(*hi - *lo);
}

json report_to_json(const ConvergenceReport& report) {
    json estimates = json::array();
    for (const auto& e : report.estimates) estimates.push_back({{"tau", e.horizon}, {"value", e.value}});
    return {{"estimates", estimates}, {"converged", report.converged}, {"final_error_bound", report.final_error_bound}};
}

json provenance_to_json(const Provenance& p) {
    if (const auto* r = std::get_if<RationalRatio>(&p)) return {{"type", "rational"}, {"nu", to_string(r->nu)}};
    if (const auto* i = std::get_if<IrrationalRatio>(&p)) return {{"type", "irrational"}, {"token", i->token}};
    return {{"type", "none"}};
}

json distribution_to_json(const PhaseDistribution& d, std::size_t samples) {
    json out = {{"kind", d.is_uniform() ? "uniform" : "nonuniform"}, {"provenance", provenance_to_json(d.provenance())}};
    out["period"] = d.period() ? json(*d.period()) : json(nullptr);
    json theta = json::array();
    for (std::size_t j = 0; j < samples; ++j) theta.push_back(2.0 * M_PI * static_cast<double>(j) / static_cast<double>(samples));
    out["theta"] = theta;
    out["density"] = d.sample(samples);
    return out;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

void emit(const std::string& text, const CommonOptions& opts, std::ostream& out) {
    if (opts.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(opts.out, std::ios::binary);
    if (!file) throw InputError("cannot write '" + opts.out + "'");
    file << text;
}

std::string format_or(const CommonOptions& opts, const std::string& fallback) {
    return opts.format.empty() ? fallback : opts.format;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"chronos: canonical time observables for discrete spectra", "chronos"};
    app.fallthrough();
    app.require_subcommand(1);

    CommonOptions opts;
    app.add_option("--spectrum", opts.spectrum, "Spectrum JSON file (or inline JSON)");
    app.add_option("--state", opts.state, "State JSON file (or inline JSON)");
    app.add_option("--fixture", opts.fixture, "Built-in spectrum+state: two-level, three-level-sqrt2, eigenstate, four-level-quasi");
    app.add_option("--out", opts.out, "Output file (default stdout)");
    app.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--seed", opts.seed, "Seed for generated states");
    app.add_flag("--strict", opts.strict, "Exit 2 when a numeric estimate does not converge");

    // density
    double t_start = 0.0, t_end = 10.0;
    std::size_t samples = 101;
    std::string kind = "auto";
    auto* density_cmd = app.add_subcommand("density", "Sample the canonical time density");
    density_cmd->add_option("--t-start", t_start);
    density_cmd->add_option("--t-end", t_end);
    density_cmd->add_option("--samples", samples);
    density_cmd->add_option("--kind", kind)->check(CLI::IsMember({"auto", "periodic", "quasiperiodic"}));

    // interval
    double t_a = 0.0, t_b = 0.0;
    auto* interval_cmd = app.add_subcommand("interval", "Probability of a time interval (periodic observable)");
    interval_cmd->add_option("--t-a", t_a)->required();
    interval_cmd->add_option("--t-b", t_b)->required();

    // expect
    std::string f_text;
    AveragingSchedule schedule;
    double tol = 1e-3;
    std::optional<double> freq_bound;
    auto* expect_cmd = app.add_subcommand("expect", "Bohr-mean expectation of a quasiperiodic f");
    expect_cmd->add_option("--f", f_text, "JSON list of {label, re, im} terms (inline or file)")->required();
    expect_cmd->add_option("--tau0", schedule.initial_horizon);
    expect_cmd->add_option("--growth", schedule.growth);
    expect_cmd->add_option("--max-steps", schedule.max_steps);
    expect_cmd->add_option("--tol", tol);
    expect_cmd->add_option("--freq-bound", freq_bound);

    // three-level
    std::string c0_text = "0.70710678118654752", c1_text = "0.70710678118654752", epsilon_text, gaps_text = "1,1";
    std::size_t phase_samples = 16;
    auto* three_cmd = app.add_subcommand("three-level", "Perturbed three-level comparison");
    three_cmd->add_option("--c0", c0_text);
    three_cmd->add_option("--c1", c1_text);
    three_cmd->add_option("--epsilon", epsilon_text, "p/q, integer, decimal, or sqrt2|golden|pi")->required();
    three_cmd->add_option("--gaps", gaps_text, "E1-E0,E2-E1 as exact rationals");
    three_cmd->add_option("--samples", phase_samples);

    // limit
    int depth = 8;
    auto* limit_cmd = app.add_subcommand("limit", "Periodic approximants converging to the quasiperiodic expectation");
    limit_cmd->add_option("--depth", depth);
    limit_cmd->add_option("--f", f_text)->required();

    // classical
    std::string omega1_text = "1", omega2_text = "sqrt2", window_text = "0,10000";
    double t_star = 0.0, ctol = 1e-4;
    auto* classical_cmd = app.add_subcommand("classical", "Recover time from two incommensurate angles");
    classical_cmd->add_option("--omega1", omega1_text);
    classical_cmd->add_option("--omega2", omega2_text);
    classical_cmd->add_option("--t-star", t_star)->required();
    classical_cmd->add_option("--window", window_text);
    classical_cmd->add_option("--tol", ctol);

    // covariance-check
    std::vector<std::uint64_t> seeds{1, 2, 3};
    std::vector<double> taus{0.0, 123.456, -987.25};
    std::size_t grid = 1000;
    std::string span_text = "0,100";
    auto* cov_cmd = app.add_subcommand("covariance-check", "Residual of p(t|psi_tau) = p(t - tau|psi_0)");
    cov_cmd->add_option("--seeds", seeds)->delimiter(',');
    cov_cmd->add_option("--taus", taus)->delimiter(',');
    cov_cmd->add_option("--grid", grid);
    cov_cmd->add_option("--t-span", span_text);

    auto* selftest_cmd = app.add_subcommand("selftest", "Run the invariant suite on built-in fixtures");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        if (density_cmd->parsed()) {
            const auto in = load_inputs(opts, true);
            std::optional<DensityKind> chosen;
            if (kind == "periodic") chosen = DensityKind::periodic;
            if (kind == "quasiperiodic") chosen = DensityKind::quasiperiodic;
            const auto trace = density_trace(*in.state, t_start, t_end, samples, chosen);
            if (format_or(opts, "csv") == "csv") {
                std::string text = "t,p\n";
                for (std::size_t i = 0; i < trace.times.size(); ++i) {
                    text += format_real(trace.times[i]) + "," + format_real(trace.values[i]) + "\n";
                }
                emit(text, opts, out);
            } else {
                json doc = {{"kind", to_string(trace.kind)}, {"t", trace.times}, {"p", trace.values}};
                doc["period"] = trace.period ? json(*trace.period) : json(nullptr);
                emit(dump(doc), opts, out);
            }
            return kExitOk;
        }
        if (interval_cmd->parsed()) {
            const auto in = load_inputs(opts, true);
            emit(format_real(interval_probability(*in.state, t_a, t_b)) + "\n", opts, out);
            return kExitOk;
        }
        if (expect_cmd->parsed()) {
            const auto in = load_inputs(opts, true);
            const auto f = config::series_from_json(config::load_json(f_text), in.spectrum->bases());
            const double analytic = expectation(*in.state, f);
            schedule.frequency_bound = freq_bound ? *freq_bound : f.max_abs_frequency() + max_gap(*in.spectrum);
            const QuantumState& state = *in.state;
            const auto report = bohr_mean_numeric(
                [&](double t) { return f.evaluate(t).real() * quasiperiodic_density(state, t); }, schedule, tol);
            json doc = {{"analytic", analytic},
                        {"numeric", report.estimates.empty() ? 0.0 : report.estimates.back().value},
                        {"report", report_to_json(report)}};
            emit(dump(doc), opts, out);
            return (opts.strict && !report.converged) ? kExitNotConverged : kExitOk;
        }
        if (three_cmd->parsed()) {
            const auto comma = gaps_text.find(',');
            if (comma == std::string::npos) throw InputError("--gaps expects 'g1,g2'");
            const auto result = three_level_experiment(parse_amplitude(c0_text), parse_amplitude(c1_text),
                                                       parse_exact_scalar(epsilon_text),
                                                       parse_rational(gaps_text.substr(0, comma)),
                                                       parse_rational(gaps_text.substr(comma + 1)));
            json doc = {{"epsilon", epsilon_text},
                        {"arsenovic", distribution_to_json(result.arsenovic, phase_samples)},
                        {"canonical", distribution_to_json(result.canonical, phase_samples)},
                        {"tv_distance", result.tv_distance}};
            doc["nu"] = result.nu ? json(to_string(*result.nu)) : json(nullptr);
            emit(dump(doc), opts, out);
            return kExitOk;
        }
        if (limit_cmd->parsed()) {
            const auto in = load_inputs(opts, true);
            const auto f = config::series_from_json(config::load_json(f_text), in.spectrum->bases());
            const auto trace = expectation_sequence(*in.state, f, rational_approximants(*in.spectrum, depth));
            if (format_or(opts, "csv") == "csv") {
                std::string text = "k,q_k,T_k,expectation_k,abs_error\n";
                for (const auto& e : trace.entries) {
                    text += std::to_string(e.k) + "," + std::to_string(e.denominator) + "," + format_real(e.period) +
                            "," + format_real(e.expectation) + "," + format_real(std::abs(e.expectation - trace.target)) +
                            "\n";
                }
                emit(text, opts, out);
            } else {
                json entries = json::array();
                for (const auto& e : trace.entries) {
                    entries.push_back({{"k", e.k},
                                       {"q_k", e.denominator},
                                       {"T_k", e.period},
                                       {"expectation_k", e.expectation},
                                       {"abs_error", std::abs(e.expectation - trace.target)}});
                }
                emit(dump({{"target", trace.target}, {"entries", entries}}), opts, out);
            }
            return kExitOk;
        }
        if (classical_cmd->parsed()) {
            const double w1 = to_double(parse_extended(omega1_text));
            const double w2 = to_double(parse_extended(omega2_text));
            const auto [lo, hi] = parse_pair(window_text, "--window");
            const auto target = angles_at(t_star, w1, w2);
            const auto candidates = reconstruct_time(target, w1, w2, {lo, hi}, ctol);
            json doc = {{"target", {{"phi1", target.phi1}, {"phi2", target.phi2}}}, {"candidates", candidates}};
            emit(dump(doc), opts, out);
            return kExitOk;
        }
        if (cov_cmd->parsed()) {
            const auto in = load_inputs(opts, false);
            const auto [lo, hi] = parse_pair(span_text, "--t-span");
            if (grid < 2 || !(hi > lo)) throw InputError("--grid must be >= 2 and --t-span nonempty");
            const bool periodic = is_commensurate(*in.spectrum) && commensurate_structure(*in.spectrum);
            std::vector<std::pair<std::optional<std::uint64_t>, QuantumState>> cases;
            if (in.state) {
                cases.emplace_back(std::nullopt, *in.state);
            } else {
                for (auto s : seeds) cases.emplace_back(s, random_state(in.spectrum, s));
            }
            json rows = json::array();
            double worst = 0.0;
            for (const auto& [seed, state] : cases) {
                for (double tau : taus) {
                    const auto moved = evolve(state, tau);
                    double res_q = 0.0, res_p = 0.0;
                    for (std::size_t i = 0; i < grid; ++i) {
                        const double t = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid - 1);
                        res_q = std::max(res_q, std::abs(quasiperiodic_density(moved, t) - quasiperiodic_density(state, t - tau)));
                        if (periodic) {
                            res_p = std::max(res_p, std::abs(periodic_density(moved, t) - periodic_density(state, t - tau)));
                        }
                    }
                    worst = std::max({worst, res_q, res_p});
                    json row = {{"tau", tau}, {"quasiperiodic_residual", res_q}};
                    row["seed"] = seed ? json(*seed) : json(nullptr);
                    row["periodic_residual"] = periodic ? json(res_p) : json(nullptr);
                    rows.push_back(row);
                }
            }
            emit(dump({{"cases", rows}, {"max_residual", worst}}), opts, out);
            return kExitOk;
        }
        if (selftest_cmd->parsed()) {
            const auto results = selftest::run_all();
            std::string text;
            bool all = true;
            for (const auto& r : results) {
                text += std::string(r.passed ? "PASS " : "FAIL ") + r.name + " " + r.detail + "\n";
                all = all && r.passed;
            }
            text += all ? "selftest: all checks passed\n" : "selftest: FAILED\n";
            emit(text, opts, out);
            return all ? kExitOk : kExitUsage;
        }
    } catch (const ContractError& e) {
        err << "error [" << e.contract() << "]: " << e.message() << "\n";
        return kExitUsage;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << app.help();
    return kExitUsage;
}

}  // namespace chronos::cli
