#pragma once

/**
 * @file cli.hpp
 * @brief Experiment configuration and the simulate / compare / sweep commands.
 *
 * Configuration comes from a key=value file ('#' starts a comment) and
 * command-line flags; flags win. Exit codes: 0 success, 2 configuration or
 * I/O error, 3 numerical failure.
 */

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rgdiff/asymptotic.hpp"

namespace rgdiff::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Scheme { Paper, Mickens };
enum class OutputFormat { Csv, Json };

struct ExperimentConfig {
    Nonlinearity kind = Nonlinearity::Cubic;
    double dt = 0.01;
    double eps = 0.0;
    double a0_re = 0.5;
    double a0_im = 0.0;
    double t_max = 50.0;
    RootConvention root_convention = RootConvention::ExactUnitModulus;
    KappaConvention kappa_convention = KappaConvention::OnePlusCSquared;
    bool vdp_halving = false;
    Scheme scheme = Scheme::Paper;
    std::string output_path;  ///< empty: standard output
    std::string summary_path; ///< compare/CSV only; defaults to <output_path>.summary.json
    OutputFormat output_format = OutputFormat::Csv;
    std::size_t stride = 1;

    [[nodiscard]] NonlinearityKind nonlinearity() const {
        return {kind, kind == Nonlinearity::VanDerPol && vdp_halving};
    }
    [[nodiscard]] SchemeParams scheme_params() const { return {dt, eps, root_convention}; }
    [[nodiscard]] Complex a0() const { return {a0_re, a0_im}; }
    /// round(t_max / dt)
    [[nodiscard]] long steps() const;
};

/// Sets one field from its textual form. Keys accept '-' or '_'.
void set_config_value(ExperimentConfig& cfg, std::string_view key, std::string_view value);

/// Applies key=value lines on top of `base`.
[[nodiscard]] ExperimentConfig parse_config_text(std::string_view text, ExperimentConfig base = {});
[[nodiscard]] ExperimentConfig load_config_file(const std::filesystem::path& path,
                                                ExperimentConfig base = {});

/// Throws ConfigError with a one-line message on the first violated constraint.
void validate(const ExperimentConfig& cfg);

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    [[nodiscard]] std::vector<double> column(std::string_view name) const;
};

/// Ordered name/value pairs; NaN means "not measurable" and serializes as null.
using Summary = std::vector<std::pair<std::string, double>>;

[[nodiscard]] double summary_value(const Summary& s, std::string_view name);

/// %.17g; nan/inf spelled out.
[[nodiscard]] std::string format_number(double v);

void write_csv(const Table& table, std::ostream& out);
void write_json(const Table& table, const Summary* summary, std::ostream& out);
void write_summary_json(const Summary& summary, std::ostream& out);

/// Oracle trajectory: n, t, z.
[[nodiscard]] Table simulate_table(const ExperimentConfig& cfg);

struct ComparisonResult {
    Table table;
    Summary summary;
};

/// n, t, z_oracle, z_naive, z_renorm_discrete, z_renorm_continuum, err_naive,
/// err_renorm, with err_renorm measured against the discrete renormalized solution.
[[nodiscard]] ComparisonResult compare_run(const ExperimentConfig& cfg);

/// Summary statistics derived from a comparison table alone.
[[nodiscard]] Summary summarize_comparison(const Table& table, const ExperimentConfig& cfg);

/// One summary row per value of `param` (dt, eps or a0_re), in input order.
[[nodiscard]] Table sweep_table(const ExperimentConfig& cfg, const std::string& param,
                                const std::vector<double>& values);

/// Entry point shared by the executable and the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rgdiff::cli
