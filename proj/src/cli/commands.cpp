#include <cmath>
#include <deque>
#include <fstream>
#include <future>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "rgdiff/analysis.hpp"
#include "rgdiff/cli.hpp"
#include "rgdiff/errors.hpp"

namespace rgdiff::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Trajectory run_oracle(const ExperimentConfig& cfg) {
    const auto kind = cfg.nonlinearity();
    const auto params = cfg.scheme_params();
    if (cfg.scheme == Scheme::Mickens) {
        // Exact mode of the nonstandard linear scheme is e^{i h n}.
        const Complex a0 = cfg.a0();
        const double z1 = 2.0 * (a0 * std::polar(1.0, cfg.dt)).real();
        return iterate_mickens(kind, cfg.dt, cfg.eps, 2.0 * a0.real(), z1, cfg.steps(),
                               cfg.stride);
    }
    const auto [z0, z1] = init_from_amplitude(cfg.a0(), params);
    return iterate(kind, params, z0, z1, cfg.steps(), cfg.stride);
}

GlobalSolution global_solution(const ExperimentConfig& cfg) {
    return GlobalSolution(cfg.nonlinearity(), cfg.scheme_params(), cfg.a0(), cfg.kappa_convention);
}

double max_of(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) {
        m = std::max(m, x);
    }
    return m;
}

std::vector<double> abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        d[i] = std::abs(a[i] - b[i]);
    }
    return d;
}

void set_sweep_param(ExperimentConfig& cfg, const std::string& param, double value) {
    if (param == "dt") {
        cfg.dt = value;
    } else if (param == "eps") {
        cfg.eps = value;
    } else if (param == "a0_re" || param == "a0-re") {
        cfg.a0_re = value;
    } else {
        throw ConfigError("unknown sweep parameter '" + param + "' (expected dt, eps or a0_re)");
    }
}

double max_naive_residual(const ExperimentConfig& cfg) {
    const auto kind = cfg.nonlinearity();
    const auto params = cfg.scheme_params();
    const NaiveExpansion naive(kind, AmplitudePair::real(cfg.a0()), params);
    const long steps = cfg.steps();
    double prev = naive(0);
    double cur = naive(1);
    double worst = 0.0;
    for (long n = 1; n < steps; ++n) {
        const double next = naive(n + 1);
        worst = std::max(worst, std::abs(nonlinear_residual(kind, params, {prev, cur, next})));
        prev = cur;
        cur = next;
    }
    return worst;
}

}  // namespace

Table simulate_table(const ExperimentConfig& cfg) {
    validate(cfg);
    const Trajectory traj = run_oracle(cfg);
    Table table{{"n", "t", "z"}, {}};
    table.rows.reserve(traj.size());
    for (std::size_t i = 0; i < traj.size(); ++i) {
        table.rows.push_back({static_cast<double>(traj.index(i)), traj.time(i), traj.values[i]});
    }
    return table;
}

ComparisonResult compare_run(const ExperimentConfig& cfg) {
    validate(cfg);
    const auto kind = cfg.nonlinearity();
    const auto params = cfg.scheme_params();
    const Trajectory oracle = run_oracle(cfg);
    const NaiveExpansion naive(kind, AmplitudePair::real(cfg.a0()), params);
    const GlobalSolution sol = global_solution(cfg);

    ComparisonResult result;
    result.table.columns = {"n",          "t",        "z_oracle", "z_naive", "z_renorm_discrete",
                            "z_renorm_continuum", "err_naive", "err_renorm"};
    result.table.rows.reserve(oracle.size());
    for (std::size_t i = 0; i < oracle.size(); ++i) {
        const long n = oracle.index(i);
        const double t = oracle.time(i);
        const double zo = oracle.values[i];
        const double zn = naive(n);
        const double zd = eval_discrete(sol, n);
        const double zc = eval_continuum_waveform(sol, t);
        result.table.rows.push_back({static_cast<double>(n), t, zo, zn, zd, zc, std::abs(zo - zn),
                                     std::abs(zo - zd)});
    }
    result.summary = summarize_comparison(result.table, cfg);
    return result;
}

Summary summarize_comparison(const Table& table, const ExperimentConfig& cfg) {
    const double spacing = cfg.dt * static_cast<double>(cfg.stride);
    const auto oracle = table.column("z_oracle");
    const auto err_naive = table.column("err_naive");
    const auto err_renorm = table.column("err_renorm");
    const auto err_cont = abs_diff(oracle, table.column("z_renorm_continuum"));

    Trajectory traj{cfg.dt, cfg.stride, oracle};
    double period = kNaN;
    try {
        period = zero_crossing_period(traj).mean;
    } catch (const TooFewCrossingsError&) {
    }
    double limit_amp = kNaN;
    try {
        const auto peaks = envelope(traj);
        const double t_last = traj.time(traj.size() - 1);
        double sum = 0.0;
        int count = 0;
        for (const auto& p : peaks) {
            if (p.time >= 0.9 * t_last) {
                sum += p.amplitude;
                ++count;
            }
        }
        if (count > 0) {
            limit_amp = sum / count;
        }
    } catch (const TooFewPeaksError&) {
    }

    const GlobalSolution sol = global_solution(cfg);
    const double t_last = table.rows.empty() ? 0.0 : table.rows.back()[1];
    const double predicted_period =
        cfg.kind == Nonlinearity::Cubic ? 2.0 * std::numbers::pi / frequency_shift(sol)
                                        : 2.0 * std::numbers::pi;
    return {
        {"max_err_naive", max_of(err_naive)},
        {"max_err_renorm", max_of(err_renorm)},
        {"max_err_renorm_continuum", max_of(err_cont)},
        {"slope_err_naive", running_max_slope(err_naive, spacing)},
        {"slope_err_renorm", running_max_slope(err_renorm, spacing)},
        {"slope_err_renorm_continuum", running_max_slope(err_cont, spacing)},
        {"measured_period", period},
        {"predicted_period", predicted_period},
        {"measured_limit_amplitude", limit_amp},
        {"predicted_limit_amplitude", envelope_amplitude(sol, t_last)},
    };
}

Table sweep_table(const ExperimentConfig& cfg, const std::string& param,
                  const std::vector<double>& values) {
    if (values.empty()) {
        throw ConfigError("sweep values must not be empty");
    }
    std::vector<ExperimentConfig> configs;
    for (double v : values) {
        ExperimentConfig c = cfg;
        set_sweep_param(c, param, v);
        validate(c);
        configs.push_back(std::move(c));
    }

    std::vector<std::future<std::vector<double>>> jobs;
    jobs.reserve(configs.size());
    for (std::size_t i = 0; i < configs.size(); ++i) {
        jobs.push_back(std::async(std::launch::async, [&c = configs[i], v = values[i]] {
            const auto r = compare_run(c);
            const auto& s = r.summary;
            return std::vector<double>{v,
                                       summary_value(s, "max_err_naive"),
                                       summary_value(s, "max_err_renorm"),
                                       summary_value(s, "max_err_renorm_continuum"),
                                       summary_value(s, "slope_err_naive"),
                                       summary_value(s, "slope_err_renorm"),
                                       max_naive_residual(c),
                                       summary_value(s, "measured_period"),
                                       summary_value(s, "measured_limit_amplitude")};
        }));
    }
    Table table{{param == "a0-re" ? "a0_re" : param, "max_err_naive", "max_err_renorm",
                 "max_err_renorm_continuum", "slope_err_naive", "slope_err_renorm",
                 "max_residual_naive", "measured_period", "measured_limit_amplitude"},
                {}};
    for (auto& j : jobs) {
        table.rows.push_back(j.get());
    }
    return table;
}

namespace {

struct Overrides {
    std::string config_path;
    std::vector<std::pair<std::string, std::string>> values;
};

// Every ExperimentConfig field becomes a string flag, applied after the
// config file so that flags win. `storage` must not move while `cmd` lives.
void add_config_flags(CLI::App& cmd, Overrides& ov, std::vector<std::pair<CLI::Option*, std::string>>& opts,
                      std::deque<std::string>& storage) {
    static const char* const kFields[] = {"kind",      "dt",          "eps",
                                          "a0-re",     "a0-im",       "t-max",
                                          "root-convention", "kappa-convention", "vdp-halving",
                                          "scheme",    "output-path", "summary-path",
                                          "output-format", "stride"};
    cmd.add_option("--config", ov.config_path, "key=value configuration file");
    for (const char* f : kFields) {
        storage.emplace_back();
        auto* opt = cmd.add_option(std::string("--") + f, storage.back());
        opts.emplace_back(opt, f);
    }
    storage.emplace_back();
    opts.emplace_back(cmd.add_option("-o,--output", storage.back(), "alias of --output-path"),
                      "output-path");
}

ExperimentConfig resolve_config(const Overrides& ov,
                                const std::vector<std::pair<CLI::Option*, std::string>>& opts,
                                const std::deque<std::string>& storage) {
    ExperimentConfig cfg;
    if (!ov.config_path.empty()) {
        cfg = load_config_file(ov.config_path);
    }
    for (std::size_t i = 0; i < opts.size(); ++i) {
        if (opts[i].first->count() > 0) {
            set_config_value(cfg, opts[i].second, storage[i]);
        }
    }
    validate(cfg);
    return cfg;
}

std::vector<double> parse_values(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto first = item.find_first_not_of(' ');
        if (first == std::string::npos) {
            continue;
        }
        ExperimentConfig scratch;
        set_config_value(scratch, "dt", item);
        out.push_back(scratch.dt);
    }
    return out;
}

// Opens the configured destination, or falls back to `fallback`.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) {
                throw ConfigError("cannot open output file " + path);
            }
            stream_ = &file_;
        }
    }
    std::ostream& get() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

void emit(const Table& table, const Summary* summary, const ExperimentConfig& cfg,
          std::ostream& out, std::ostream& err) {
    Sink sink(cfg.output_path, out);
    if (cfg.output_format == OutputFormat::Json) {
        write_json(table, summary, sink.get());
        return;
    }
    write_csv(table, sink.get());
    if (summary == nullptr) {
        return;
    }
    std::string path = cfg.summary_path;
    if (path.empty() && !cfg.output_path.empty()) {
        path = cfg.output_path + ".summary.json";
    }
    if (path.empty()) {
        err << "summary: ";
        write_summary_json(*summary, err);
        err << '\n';
        return;
    }
    Sink summary_sink(path, out);
    write_summary_json(*summary, summary_sink.get());
    summary_sink.get() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Renormalized asymptotics for weakly nonlinear difference oscillators"};
    app.require_subcommand(1);

    Overrides sim_ov, cmp_ov, swp_ov;
    std::vector<std::pair<CLI::Option*, std::string>> sim_opts, cmp_opts, swp_opts;
    std::deque<std::string> sim_store, cmp_store, swp_store;

    auto* simulate = app.add_subcommand("simulate", "iterate the nonlinear scheme and write z(n)");
    add_config_flags(*simulate, sim_ov, sim_opts, sim_store);
    auto* compare = app.add_subcommand(
        "compare", "compare oracle, naive and renormalized solutions");
    add_config_flags(*compare, cmp_ov, cmp_opts, cmp_store);
    auto* sweep = app.add_subcommand("sweep", "one comparison summary per parameter value");
    add_config_flags(*sweep, swp_ov, swp_opts, swp_store);
    std::string sweep_param;
    std::string sweep_values;
    sweep->add_option("--param", sweep_param, "dt, eps or a0_re")->required();
    sweep->add_option("--values", sweep_values, "comma-separated values")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    }

    try {
        if (*simulate) {
            const auto cfg = resolve_config(sim_ov, sim_opts, sim_store);
            if (cfg.scheme_params().eps_is_large()) {
                err << "warning: eps > " << kEpsWarnThreshold << " is outside the weakly nonlinear regime\n";
            }
            emit(simulate_table(cfg), nullptr, cfg, out, err);
        } else if (*compare) {
            const auto cfg = resolve_config(cmp_ov, cmp_opts, cmp_store);
            const auto result = compare_run(cfg);
            emit(result.table, &result.summary, cfg, out, err);
        } else if (*sweep) {
            const auto cfg = resolve_config(swp_ov, swp_opts, swp_store);
            emit(sweep_table(cfg, sweep_param, parse_values(sweep_values)), nullptr, cfg, out, err);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const DivergenceError& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const SingularStepError& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
    return kExitOk;
}

}  // namespace rgdiff::cli
