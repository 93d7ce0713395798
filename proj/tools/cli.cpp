#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

namespace capfee::cli {

namespace {

using nlohmann::ordered_json;

std::string fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

nlohmann::json real_json(double v) {
    if (v == kUnboundedCutoff) return "inf";
    return v;
}

ScenarioConfig resolve_config(const std::string& path) {
    return path.empty() ? ScenarioConfig{} : load_config(path);
}

std::ofstream open_output(const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ConfigError("cannot open output file '" + path + "'", 0);
    return os;
}

std::string format_oracle(const OracleReport& r) {
    std::ostringstream os;
    os << "Oracle check (grid resolution " << format_real(r.grid_resolution) << ")\n"
       << "  oracle f1 = " << fixed(r.oracle_f1, 6) << "\n"
       << "  oracle f2 = " << fixed(r.oracle_f2, 6) << "\n"
       << "  oracle insurer cost = " << fixed(r.oracle_objective, 2) << "\n"
       << "  solver f1 = " << fixed(r.solver_f1, 6) << "\n"
       << "  solver f2 = " << fixed(r.solver_f2, 6) << "\n"
       << "  solver insurer cost = " << fixed(r.solver_objective, 2) << "\n"
       << "  max deviation = " << format_real(r.max_deviation) << "\n"
       << "  agreement within 2 grid steps: " << (r.agrees(2.0) ? "yes" : "NO") << "\n";
    return os.str();
}

}  // namespace

ordered_json config_to_json(const ScenarioConfig& cfg) {
    const ModelParams& m = cfg.params;
    const BonusPolicy& b = cfg.policy;
    return ordered_json{
        {"p", m.p},
        {"n_f", m.n_f},
        {"n_c", m.n_c},
        {"r_f", m.r_f},
        {"r_c", m.r_c},
        {"h_f", m.h_f},
        {"h_c", m.h_c},
        {"c_d", m.c_d},
        {"c_n", m.c_n},
        {"alpha", b.alpha},
        {"xi", real_json(b.xi)},
        {"kappa", b.kappa},
        {"exp_f1", b.exp_f1},
        {"exp_f2", b.exp_f2},
        {"rounds", cfg.rounds},
        {"inflation_rate", cfg.inflation_rate},
        {"grid_points", cfg.settings.grid_points},
        {"refine_tol", cfg.settings.refine_tol},
        {"max_refine_iters", cfg.settings.max_refine_iters},
    };
}

ScenarioConfig config_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("config document must be an object", 0);
    ScenarioConfig cfg;
    for (const auto& [key, value] : j.items()) {
        std::string text;
        if (value.is_string()) {
            text = value.get<std::string>();
        } else if (value.is_number_unsigned() || value.is_number_integer()) {
            text = value.dump();
        } else if (value.is_number_float()) {
            text = format_real(value.get<double>());
        } else {
            throw ConfigError("value for key '" + key + "' must be a number", 0);
        }
        set_config_value(cfg, key, text);
    }
    cfg.validate();
    return cfg;
}

ordered_json report_to_json(const EquilibriumReport& r) {
    return ordered_json{
        {"f1", r.fractions.f1},
        {"f2", r.fractions.f2},
        {"z", r.z_value},
        {"bonus", r.bonus},
        {"insurer_cost_full", r.insurer_cost_full},
        {"insurer_cost_reduced", r.insurer_cost_reduced},
        {"practice_profit_full", r.practice_profit_full},
        {"practice_profit_reduced", r.practice_profit_reduced},
        {"regime", std::string(to_string(r.regime))},
    };
}

void write_sweep_csv(std::ostream& os, std::span<const SweepRow> rows) {
    os << "alpha,f1,f2,z,bonus,regime\n";
    for (const SweepRow& r : rows) {
        os << format_real(r.alpha) << ',' << format_real(r.f1) << ',' << format_real(r.f2) << ','
           << format_real(r.z_value) << ',' << format_real(r.bonus) << ',' << to_string(r.regime)
           << '\n';
    }
}

void write_trace_csv(std::ostream& os, const GameTrace& trace) {
    os << "round,f1,f2,z,bonus,insurer_cost_reduced,practice_profit_reduced\n";
    for (const RoundRecord& r : trace.rounds) {
        os << r.round_index << ',' << format_real(r.fractions.f1) << ','
           << format_real(r.fractions.f2) << ',' << format_real(r.report.z_value) << ','
           << format_real(r.report.bonus) << ',' << format_real(r.report.insurer_cost_reduced)
           << ',' << format_real(r.report.practice_profit_reduced) << '\n';
    }
}

std::string format_report(const EquilibriumReport& r) {
    std::ostringstream os;
    os << "  f1 = " << fixed(r.fractions.f1, 4) << "\n"
       << "  f2 = " << fixed(r.fractions.f2, 4) << "\n"
       << "  z = " << fixed(r.z_value, 6) << "\n"
       << "  bonus = " << fixed(r.bonus, 2) << "\n"
       << "  insurer cost (full) = " << fixed(r.insurer_cost_full, 2) << "\n"
       << "  insurer cost (reduced) = " << fixed(r.insurer_cost_reduced, 2) << "\n"
       << "  practice profit (full) = " << fixed(r.practice_profit_full, 2) << "\n"
       << "  practice profit (reduced) = " << fixed(r.practice_profit_reduced, 2) << "\n"
       << "  regime = " << to_string(r.regime) << "\n";
    return os.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Insurer/practice Stackelberg game over FFS and capitation payment shares"};
    app.require_subcommand(1);

    std::string config_path;
    bool as_json = false;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "key = value scenario file")
            ->check(CLI::ExistingFile);
        sub->add_flag("--json", as_json, "emit one JSON document");
    };

    CLI::App* solve = app.add_subcommand("solve", "one-round Stackelberg equilibrium");
    add_common(solve);

    std::optional<std::size_t> rounds;
    std::string trace_path;
    CLI::App* repeat = app.add_subcommand("repeat", "repeated game, prints the final round");
    add_common(repeat);
    repeat->add_option("--rounds", rounds, "number of rounds (default: config)");
    repeat->add_option("--trace", trace_path, "write every round as CSV");
    bool simultaneous = false;
    repeat->add_flag("--simultaneous", simultaneous,
                     "practice responds to the previous round's f1 instead of the current one");

    AlphaGrid grid;
    std::string sweep_out;
    CLI::App* sweep = app.add_subcommand("sweep-alpha", "equilibria over a grid of bonus slopes");
    add_common(sweep);
    sweep->add_option("--min", grid.min, "first alpha")->capture_default_str();
    sweep->add_option("--max", grid.max, "last alpha")->capture_default_str();
    sweep->add_option("--step", grid.step, "alpha step")->capture_default_str();
    sweep->add_option("--rounds", rounds, "rounds per alpha (default: config)");
    sweep->add_option("--out", sweep_out, "CSV destination (default: stdout)");

    CLI::App* threshold = app.add_subcommand("threshold", "h_eps at which the linear corner flips");
    add_common(threshold);

    double oracle_grid = 1e-4;
    CLI::App* oracle = app.add_subcommand("oracle-check", "brute-force check of the solver");
    add_common(oracle);
    oracle->add_option("--grid", oracle_grid, "grid resolution")->capture_default_str();

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        ScenarioConfig cfg = resolve_config(config_path);
        if (rounds) cfg.rounds = *rounds;
        cfg.validate();

        if (solve->parsed()) {
            const EquilibriumReport rep = solve_stackelberg(cfg.params, cfg.policy, cfg.settings);
            if (as_json) {
                out << ordered_json{{"command", "solve"},
                                    {"config", config_to_json(cfg)},
                                    {"result", report_to_json(rep)}}
                           .dump(2)
                    << '\n';
            } else {
                out << "Stackelberg equilibrium (1 round)\n" << format_report(rep);
            }
            return kSuccess;
        }

        if (repeat->parsed()) {
            const GameTrace trace = play_repeated(cfg.rounds, cfg.params, cfg.policy,
                                                  cfg.settings, cfg.inflation_rate,
                                                  simultaneous ? UpdateOrder::simultaneous
                                                               : UpdateOrder::sequential);
            if (!trace_path.empty()) {
                std::ofstream os = open_output(trace_path);
                write_trace_csv(os, trace);
            }
            const RoundRecord& last = trace.final_round();
            if (as_json) {
                ordered_json rounds_json = ordered_json::array();
                for (const RoundRecord& r : trace.rounds) {
                    ordered_json row = report_to_json(r.report);
                    row["round"] = r.round_index;
                    rounds_json.push_back(std::move(row));
                }
                out << ordered_json{{"command", "repeat"},
                                    {"config", config_to_json(cfg)},
                                    {"result", report_to_json(last.report)},
                                    {"rounds", std::move(rounds_json)}}
                           .dump(2)
                    << '\n';
            } else {
                out << "Repeated game, final round " << last.round_index << " of "
                    << trace.rounds.size() << "\n"
                    << format_report(last.report) << "round " << last.round_index
                    << ": f1 = " << fixed(last.fractions.f1, 4)
                    << ", f2 = " << fixed(last.fractions.f2, 4)
                    << ", bonus = " << fixed(last.report.bonus, 2) << "\n";
            }
            return kSuccess;
        }

        if (sweep->parsed()) {
            const std::vector<SweepRow> rows =
                sweep_alpha(grid, cfg.rounds, cfg.params, cfg.settings, cfg.policy);
            if (as_json) {
                ordered_json rows_json = ordered_json::array();
                for (const SweepRow& r : rows) {
                    rows_json.push_back({{"alpha", r.alpha},
                                         {"f1", r.f1},
                                         {"f2", r.f2},
                                         {"z", r.z_value},
                                         {"bonus", r.bonus},
                                         {"regime", std::string(to_string(r.regime))}});
                }
                if (!sweep_out.empty()) {
                    std::ofstream os = open_output(sweep_out);
                    write_sweep_csv(os, rows);
                }
                out << ordered_json{{"command", "sweep-alpha"},
                                    {"config", config_to_json(cfg)},
                                    {"grid", {{"min", grid.min}, {"max", grid.max},
                                              {"step", grid.step}}},
                                    {"rows", std::move(rows_json)}}
                           .dump(2)
                    << '\n';
            } else if (sweep_out.empty()) {
                write_sweep_csv(out, rows);
            } else {
                std::ofstream os = open_output(sweep_out);
                write_sweep_csv(os, rows);
                out << "wrote " << rows.size() << " rows to " << sweep_out << "\n";
            }
            return kSuccess;
        }

        if (threshold->parsed()) {
            const double t = h_eps_threshold(cfg.params);
            if (as_json) {
                out << ordered_json{{"command", "threshold"},
                                    {"config", config_to_json(cfg)},
                                    {"h_eps_threshold", t},
                                    {"h_eps", cfg.params.h_eps()}}
                           .dump(2)
                    << '\n';
            } else {
                out << "h_eps threshold = " << fixed(t, 2) << "\n"
                    << "h_eps (current) = " << fixed(cfg.params.h_eps(), 2) << "\n";
            }
            return kSuccess;
        }

        if (oracle->parsed()) {
            const OracleReport rep =
                oracle_stackelberg(cfg.params, cfg.policy, oracle_grid, cfg.settings);
            if (as_json) {
                out << ordered_json{{"command", "oracle-check"},
                                    {"config", config_to_json(cfg)},
                                    {"grid_resolution", rep.grid_resolution},
                                    {"oracle_f1", rep.oracle_f1},
                                    {"oracle_f2", rep.oracle_f2},
                                    {"oracle_objective", rep.oracle_objective},
                                    {"solver_f1", rep.solver_f1},
                                    {"solver_f2", rep.solver_f2},
                                    {"solver_objective", rep.solver_objective},
                                    {"max_deviation", rep.max_deviation},
                                    {"agrees", rep.agrees(2.0)}}
                           .dump(2)
                    << '\n';
            } else {
                out << format_oracle(rep);
            }
            return rep.agrees(2.0) ? kSuccess : kOracleDisagreement;
        }
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const InvariantError& e) {
        err << "error: " << e.what() << "\n";
        return kInvariantViolation;
    }
    return kUsageError;
}

}  // namespace capfee::cli
