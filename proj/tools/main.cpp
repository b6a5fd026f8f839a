// ngmzi: phase sensitivity of a parity-detection Mach-Zehnder interferometer
// fed with a coherent state and a heralded non-Gaussian squeezed vacuum.
//
// Subcommands: sensitivity, sweep, grid, oracle-check.
// Exit codes: 0 success, 2 usage error, 3 internal-consistency failure,
// 4 oracle-mismatch failure.

#include <chrono>
#include <cmath>
#include <ctime>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ngmzi/explorer.hpp"
#include "ngmzi/fock.hpp"
#include "ngmzi/interferometry.hpp"
#include "ngmzi/ng_state.hpp"
#include "table_io.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

using ngmzi::MZIScenario;
using ngmzi::NGOpParams;
using ngmzi::Record;
using ngmzi::SweepAxis;

std::vector<std::pair<int, int>> parse_states(const std::string& text) {
    std::vector<std::pair<int, int>> states;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        int m = -1, n = -1;
        char comma = 0;
        std::stringstream pair_ss(item);
        if (!(pair_ss >> m >> comma >> n) || comma != ',')
            throw CLI::ValidationError("--states", "expected 'm,n[;m,n...]', got '" + text + "'");
        states.emplace_back(m, n);
    }
    if (states.empty()) throw CLI::ValidationError("--states", "no states given");
    return states;
}

void write_table(const std::vector<Record>& records, const std::string& out,
                 const std::string& format, bool no_meta, const std::string& command_line) {
    const std::string content =
        format == "json" ? ngmzi::io::to_json(records) : ngmzi::io::to_csv(records);
    if (out.empty()) {
        std::cout << content;
        return;
    }
    ngmzi::io::atomic_write(out, content);
    if (!no_meta) {
        const auto now = std::chrono::system_clock::now();
        const std::time_t tt = std::chrono::system_clock::to_time_t(now);
        char stamp[32];
        std::strftime(stamp, sizeof stamp, "%FT%TZ", std::gmtime(&tt));
        nlohmann::json meta{{"tool", "ngmzi"},
                            {"version", kVersion},
                            {"command", command_line},
                            {"rows", records.size()},
                            {"format", format},
                            {"generated_at", stamp}};
        ngmzi::io::atomic_write(out + ".meta.json", meta.dump(2) + "\n");
    }
}

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += ' ';
        s += argv[i];
    }
    return s;
}

// ---------------------------------------------------------------- sensitivity

int run_sensitivity(const MZIScenario& sc, bool with_oracle) {
    const ngmzi::Sensitivity baseline = ngmzi::phase_sensitivity(ngmzi::baseline_of(sc));
    const Record rec = ngmzi::evaluate_scenario(sc, baseline);

    nlohmann::json out{{"delta_phi", rec.delta_phi}, {"parity", rec.parity},
                       {"dparity", rec.dparity},     {"p_ng", rec.p_ng},
                       {"d_ng", rec.d_ng},           {"pxd", rec.pxd},
                       {"flags", rec.flags}};
    int exit_code = 0;
    if (with_oracle) {
        const double oracle = ngmzi::oracle_mzi_parity(sc);
        const double diff = std::abs(rec.parity - oracle);
        out["oracle_parity"] = oracle;
        out["oracle_abs_diff"] = diff;
        if (!(diff <= 1e-6)) exit_code = 4;
    }
    std::cout << out.dump(2) << "\n";
    return exit_code;
}

// ------------------------------------------------------------- sweep presets

struct SweepConfig {
    ngmzi::SweepSpec spec;
    std::string out, format = "csv", fig, states_text = "0,1";
    bool no_meta = false;
};

void apply_sweep_fig(SweepConfig& cfg) {
    auto& s = cfg.spec;
    const std::string& fig = cfg.fig;
    const std::vector<std::pair<int, int>> ps{{0, 1}, {0, 2}, {0, 3}};
    const std::vector<std::pair<int, int>> pa{{1, 0}, {2, 0}, {3, 0}};
    const std::vector<std::pair<int, int>> pc{{1, 1}, {2, 2}, {3, 3}};
    s.fixed = MZIScenario{};
    s.fixed.dx = s.fixed.dp = 2.0;
    s.fixed.phi = 0.01;
    s.points = 201;
    if (fig == "2a" || fig == "2b" || fig == "2c") {
        s.axis = SweepAxis::r;
        s.lo = 0.0;
        s.hi = 2.0;
        s.fixed.ng.tau = (fig == "2c") ? 0.1 : 0.9;
        s.states = (fig == "2a") ? ps : (fig == "2b") ? pa : pc;
    } else if (fig == "3a" || fig == "3b" || fig == "3c") {
        s.axis = SweepAxis::tau;
        s.lo = 1e-3;
        s.hi = 1.0 - 1e-3;
        s.fixed.ng.r = 0.5;
        s.states = (fig == "3a") ? ps : (fig == "3b") ? pa : pc;
    } else if (fig == "5a" || fig == "5b" || fig == "5c") {
        s.axis = SweepAxis::phi;
        s.lo = 1e-3;
        s.hi = 1.5;
        s.fixed.ng.r = 0.5;
        s.fixed.ng.tau = (fig == "5c") ? 0.1 : 0.9;
        s.states = (fig == "5a") ? ps : (fig == "5b") ? pa : pc;
    } else if (fig == "6") {
        s.axis = SweepAxis::tau;
        s.lo = 1e-3;
        s.hi = 1.0 - 1e-3;
        s.fixed.ng.r = 0.5;
        s.states = {{0, 1}, {0, 2}, {0, 3}, {1, 0}, {2, 0}, {3, 0}, {1, 1}, {2, 2}, {3, 3}};
    } else {
        throw CLI::ValidationError("--fig", "unknown sweep preset '" + fig + "'");
    }
}

// -------------------------------------------------------------- grid presets

struct GridConfig {
    ngmzi::GridSpec spec;
    std::string out, format = "csv", fig, state_text = "0,1";
    bool no_meta = false;
};

void apply_grid_fig(GridConfig& cfg) {
    auto& g = cfg.spec;
    g = ngmzi::GridSpec{};
    g.r_lo = 0.0;
    g.r_hi = 2.0;
    g.r_points = 81;
    g.tau_lo = 0.0;
    g.tau_hi = 1.0;
    g.tau_points = 81;
    g.phi = 0.01;
    g.dx = g.dp = 2.0;
    if (cfg.fig == "4a")
        g.state = {0, 1};
    else if (cfg.fig == "4b")
        g.state = {1, 0};
    else if (cfg.fig == "4c")
        g.state = {1, 1};
    else
        throw CLI::ValidationError("--fig", "unknown grid preset '" + cfg.fig + "'");
}

// -------------------------------------------------------------- oracle check

int run_oracle_check(const std::string& suite) {
    std::vector<std::pair<int, int>> states;
    std::vector<double> rs{0.3, 0.5};
    if (suite == "full") {
        for (int m = 0; m <= 3; ++m)
            for (int n = 0; n <= 3; ++n)
                if (m + n >= 1 && m + n <= 6) states.emplace_back(m, n);
        rs = {0.3, 0.5, 0.9};
    } else {
        states = {{0, 1}, {1, 0}, {1, 1}, {0, 2}, {2, 0}};
    }
    const std::vector<double> taus{0.5, 0.9};
    const std::vector<double> phis{0.01, 0.1};

    struct Case {
        MZIScenario sc;
    };
    std::vector<Case> cases;
    for (auto [m, n] : states)
        for (double r : rs)
            for (double tau : taus)
                for (double phi : phis) {
                    MZIScenario sc;
                    sc.ng = NGOpParams{r, tau, m, n};
                    sc.phi = phi;
                    cases.push_back({sc});
                }

    std::vector<double> parity_dev(cases.size());
    std::vector<double> prob_dev(cases.size());
    ngmzi::parallel_for(static_cast<int>(cases.size()), 0, [&](int i) {
        const MZIScenario& sc = cases[static_cast<std::size_t>(i)].sc;
        const double p_analytic = ngmzi::success_probability(sc.ng);
        prob_dev[static_cast<std::size_t>(i)] =
            std::abs(p_analytic - ngmzi::oracle_herald_probability(sc.ng));
        parity_dev[static_cast<std::size_t>(i)] =
            std::abs(ngmzi::parity_expectation(sc, p_analytic) - ngmzi::oracle_mzi_parity(sc));
    });

    // Wigner spot grid on a representative pair of states
    std::vector<double> wigner_dev;
    for (auto [m, n] : std::vector<std::pair<int, int>>{{0, 1}, {1, 1}}) {
        const NGOpParams p{0.5, 0.9, m, n};
        const auto h = ngmzi::heralded_state(p, ngmzi::suggest_cutoff(p.r) + p.m + 8);
        for (double q : {-1.0, 0.0, 1.0})
            for (double pp : {-1.0, 0.0, 1.0})
                wigner_dev.push_back(std::abs(ngmzi::wigner_ng(p, q, pp) -
                                              ngmzi::wigner_displaced_parity(h.state, q, pp)));
    }

    const double max_parity = *std::max_element(parity_dev.begin(), parity_dev.end());
    const double max_prob = *std::max_element(prob_dev.begin(), prob_dev.end());
    const double max_wigner = *std::max_element(wigner_dev.begin(), wigner_dev.end());

    std::printf("oracle-check (%s suite, %zu scenarios)\n", suite.c_str(), cases.size());
    std::printf("  max |parity analytic - oracle|      : %.3e (tolerance 1e-6)\n", max_parity);
    std::printf("  max |probability analytic - oracle| : %.3e (tolerance 1e-8)\n", max_prob);
    std::printf("  max |wigner analytic - oracle|      : %.3e (tolerance 1e-6)\n", max_wigner);
    const bool ok = max_parity <= 1e-6 && max_prob <= 1e-8 && max_wigner <= 1e-6;
    std::printf("%s\n", ok ? "OK" : "MISMATCH");
    return ok ? 0 : 4;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"parity-detection MZI phase sensitivity with heralded non-Gaussian "
                 "squeezed-vacuum inputs"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    const std::string command_line = join_args(argc, argv);

    // sensitivity ------------------------------------------------------------
    MZIScenario sens_sc;
    bool sens_oracle = false;
    auto* sens = app.add_subcommand("sensitivity", "evaluate one scenario, print a JSON record");
    sens->add_option("--r", sens_sc.ng.r, "squeezing parameter")->check(CLI::NonNegativeNumber);
    sens->add_option("--tau", sens_sc.ng.tau, "heralding transmissivity")
        ->check(CLI::Range(0.0, 1.0));
    sens->add_option("--m", sens_sc.ng.m, "injected Fock photon number")->check(CLI::Range(0, 10));
    sens->add_option("--n", sens_sc.ng.n, "detected photon number")->check(CLI::Range(0, 24));
    sens->add_option("--phi", sens_sc.phi, "interferometer phase (default 0.01)");
    sens->add_option("--dx", sens_sc.dx, "coherent displacement, q component (default 2)");
    sens->add_option("--dp", sens_sc.dp, "coherent displacement, p component (default 2)");
    sens->add_flag("--oracle", sens_oracle, "cross-check the parity against the Fock oracle");

    // sweep ------------------------------------------------------------------
    SweepConfig sw;
    std::string axis_text = "r";
    auto* sweep = app.add_subcommand("sweep", "1D parameter sweep, CSV/JSON table");
    sweep->add_option("--axis", axis_text, "swept axis: r, tau or phi")
        ->check(CLI::IsMember({"r", "tau", "phi"}));
    sweep->add_option("--from", sw.spec.lo, "axis start");
    sweep->add_option("--to", sw.spec.hi, "axis end");
    sweep->add_option("--points", sw.spec.points, "number of samples")->check(CLI::Range(2, 100000));
    sweep->add_option("--states", sw.states_text, "states as 'm,n;m,n;...'");
    sweep->add_option("--r", sw.spec.fixed.ng.r, "fixed squeezing");
    sweep->add_option("--tau", sw.spec.fixed.ng.tau, "fixed transmissivity");
    sweep->add_option("--phi", sw.spec.fixed.phi, "fixed phase");
    sweep->add_option("--dx", sw.spec.fixed.dx, "coherent displacement q");
    sweep->add_option("--dp", sw.spec.fixed.dp, "coherent displacement p");
    sweep->add_option("--out", sw.out, "output path (stdout when omitted)");
    sweep->add_option("--format", sw.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--fig", sw.fig, "figure preset: 2a 2b 2c 3a 3b 3c 5a 5b 5c 6");
    sweep->add_flag("--no-meta", sw.no_meta, "skip the sidecar metadata file");

    // grid ---------------------------------------------------------------------
    GridConfig gr;
    auto* grid = app.add_subcommand("grid", "dense (r, tau) grid for one state");
    grid->add_option("--r-from", gr.spec.r_lo, "squeezing start");
    grid->add_option("--r-to", gr.spec.r_hi, "squeezing end");
    grid->add_option("--r-points", gr.spec.r_points, "squeezing samples")
        ->check(CLI::Range(2, 10000));
    grid->add_option("--tau-from", gr.spec.tau_lo, "transmissivity start");
    grid->add_option("--tau-to", gr.spec.tau_hi, "transmissivity end");
    grid->add_option("--tau-points", gr.spec.tau_points, "transmissivity samples")
        ->check(CLI::Range(2, 10000));
    grid->add_option("--state", gr.state_text, "state as 'm,n'");
    grid->add_option("--phi", gr.spec.phi, "fixed phase");
    grid->add_option("--dx", gr.spec.dx, "coherent displacement q");
    grid->add_option("--dp", gr.spec.dp, "coherent displacement p");
    grid->add_option("--out", gr.out, "output path (stdout when omitted)");
    grid->add_option("--format", gr.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    grid->add_option("--fig", gr.fig, "figure preset: 4a 4b 4c");
    grid->add_flag("--no-meta", gr.no_meta, "skip the sidecar metadata file");

    // oracle-check -------------------------------------------------------------
    std::string suite = "fast";
    auto* check = app.add_subcommand("oracle-check", "cross-path agreement grid");
    check->add_option("--suite", suite, "fast or full")->check(CLI::IsMember({"fast", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sens->parsed()) return run_sensitivity(sens_sc, sens_oracle);
        if (sweep->parsed()) {
            if (!sw.fig.empty()) {
                apply_sweep_fig(sw);
            } else {
                sw.spec.axis = axis_text == "tau"   ? SweepAxis::tau
                               : axis_text == "phi" ? SweepAxis::phi
                                                    : SweepAxis::r;
                sw.spec.states = parse_states(sw.states_text);
            }
            write_table(ngmzi::run_sweep(sw.spec), sw.out, sw.format, sw.no_meta, command_line);
            return 0;
        }
        if (grid->parsed()) {
            if (!gr.fig.empty()) {
                apply_grid_fig(gr);
            } else {
                const auto states = parse_states(gr.state_text);
                gr.spec.state = states.front();
            }
            write_table(ngmzi::run_grid(gr.spec), gr.out, gr.format, gr.no_meta, command_line);
            return 0;
        }
        if (check->parsed()) return run_oracle_check(suite);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const ngmzi::ConsistencyError& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
