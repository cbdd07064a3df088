#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "rgdiff/cli.hpp"

namespace rgdiff::cli {

namespace {

std::string normalize_key(std::string_view key) {
    std::string k(key);
    std::replace(k.begin(), k.end(), '-', '_');
    return k;
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view value) {
    double v = 0.0;
    const auto* end = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(value.data(), end, v);
    if (ec != std::errc{} || ptr != end) {
        throw ConfigError(std::string(key) + " expects a number, got '" + std::string(value) + "'");
    }
    return v;
}

bool parse_bool(std::string_view key, std::string_view value) {
    if (value == "true" || value == "1" || value == "yes" || value == "on") {
        return true;
    }
    if (value == "false" || value == "0" || value == "no" || value == "off") {
        return false;
    }
    throw ConfigError(std::string(key) + " expects true or false, got '" + std::string(value) + "'");
}

[[noreturn]] void bad_choice(std::string_view key, std::string_view value, std::string_view allowed) {
    throw ConfigError(std::string(key) + " must be one of " + std::string(allowed) + ", got '" +
                      std::string(value) + "'");
}

}  // namespace

long ExperimentConfig::steps() const {
    return std::lround(t_max / dt);
}

void set_config_value(ExperimentConfig& cfg, std::string_view raw_key, std::string_view raw_value) {
    const std::string key = normalize_key(trim(raw_key));
    const std::string_view value = trim(raw_value);
    std::string v(value);
    std::replace(v.begin(), v.end(), '-', '_');

    if (key == "kind") {
        if (v == "cubic") {
            cfg.kind = Nonlinearity::Cubic;
        } else if (v == "vdp" || v == "van_der_pol") {
            cfg.kind = Nonlinearity::VanDerPol;
        } else {
            bad_choice(key, value, "cubic|vdp");
        }
    } else if (key == "dt") {
        cfg.dt = parse_double(key, value);
    } else if (key == "eps") {
        cfg.eps = parse_double(key, value);
    } else if (key == "a0_re") {
        cfg.a0_re = parse_double(key, value);
    } else if (key == "a0_im") {
        cfg.a0_im = parse_double(key, value);
    } else if (key == "t_max") {
        cfg.t_max = parse_double(key, value);
    } else if (key == "root_convention") {
        if (v == "paper") {
            cfg.root_convention = RootConvention::PaperFirstOrder;
        } else if (v == "exact") {
            cfg.root_convention = RootConvention::ExactUnitModulus;
        } else {
            bad_choice(key, value, "paper|exact");
        }
    } else if (key == "kappa_convention") {
        if (v == "one_plus_c" || v == "paper") {
            cfg.kappa_convention = KappaConvention::PaperOnePlusC;
        } else if (v == "one_plus_c_squared") {
            cfg.kappa_convention = KappaConvention::OnePlusCSquared;
        } else {
            bad_choice(key, value, "one-plus-c|one-plus-c-squared");
        }
    } else if (key == "vdp_halving") {
        cfg.vdp_halving = parse_bool(key, value);
    } else if (key == "scheme") {
        if (v == "paper") {
            cfg.scheme = Scheme::Paper;
        } else if (v == "mickens") {
            cfg.scheme = Scheme::Mickens;
        } else {
            bad_choice(key, value, "paper|mickens");
        }
    } else if (key == "output_path" || key == "output") {
        cfg.output_path = std::string(value);
    } else if (key == "summary_path") {
        cfg.summary_path = std::string(value);
    } else if (key == "output_format") {
        if (v == "csv") {
            cfg.output_format = OutputFormat::Csv;
        } else if (v == "json") {
            cfg.output_format = OutputFormat::Json;
        } else {
            bad_choice(key, value, "csv|json");
        }
    } else if (key == "stride") {
        const double s = parse_double(key, value);
        if (!(s >= 1.0) || s != std::floor(s)) {
            throw ConfigError("stride must be >= 1");
        }
        cfg.stride = static_cast<std::size_t>(s);
    } else {
        throw ConfigError("unknown configuration key '" + std::string(raw_key) + "'");
    }
}

ExperimentConfig parse_config_text(std::string_view text, ExperimentConfig base) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view l = line;
        if (const auto hash = l.find('#'); hash != std::string_view::npos) {
            l = l.substr(0, hash);
        }
        l = trim(l);
        if (l.empty()) {
            continue;
        }
        const auto eq = l.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("config line " + std::to_string(lineno) + " is not key=value");
        }
        set_config_value(base, l.substr(0, eq), l.substr(eq + 1));
    }
    return base;
}

ExperimentConfig load_config_file(const std::filesystem::path& path, ExperimentConfig base) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read config file " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), std::move(base));
}

void validate(const ExperimentConfig& cfg) {
    if (!(cfg.dt > 0.0)) {
        throw ConfigError("dt must be positive");
    }
    if (cfg.scheme == Scheme::Paper && !(cfg.dt < 2.0)) {
        throw ConfigError("dt must be less than 2");
    }
    if (cfg.scheme == Scheme::Mickens && !(cfg.dt < std::numbers::pi)) {
        throw ConfigError("dt must be less than pi for the mickens scheme");
    }
    if (!(cfg.eps >= 0.0)) {
        throw ConfigError("eps must be non-negative");
    }
    if (!(cfg.t_max > 0.0)) {
        throw ConfigError("t_max must be positive");
    }
    if (cfg.stride < 1) {
        throw ConfigError("stride must be >= 1");
    }
    if (!std::isfinite(cfg.a0_re) || !std::isfinite(cfg.a0_im)) {
        throw ConfigError("a0 must be finite");
    }
    if (cfg.steps() < 2) {
        throw ConfigError("t_max / dt must be at least 2 steps");
    }
}

}  // namespace rgdiff::cli
