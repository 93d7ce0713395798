#include "capfee/config.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <variant>

namespace capfee {

namespace {

// Ordered as written by to_config_text.
constexpr std::array<std::string_view, 19> kKeys = {
    "p",     "n_f",    "n_c",    "r_f",    "r_c",    "h_f",        "h_c",
    "c_d",   "c_n",    "alpha",  "xi",     "kappa",  "exp_f1",     "exp_f2",
    "rounds", "inflation_rate", "grid_points", "refine_tol", "max_refine_iters"};

std::variant<double*, std::size_t*> lookup(ScenarioConfig& c, std::string_view key) {
    if (key == "p") return &c.params.p;
    if (key == "n_f") return &c.params.n_f;
    if (key == "n_c") return &c.params.n_c;
    if (key == "r_f") return &c.params.r_f;
    if (key == "r_c") return &c.params.r_c;
    if (key == "h_f") return &c.params.h_f;
    if (key == "h_c") return &c.params.h_c;
    if (key == "c_d") return &c.params.c_d;
    if (key == "c_n") return &c.params.c_n;
    if (key == "alpha") return &c.policy.alpha;
    if (key == "xi") return &c.policy.xi;
    if (key == "kappa") return &c.policy.kappa;
    if (key == "exp_f1") return &c.policy.exp_f1;
    if (key == "exp_f2") return &c.policy.exp_f2;
    if (key == "rounds") return &c.rounds;
    if (key == "inflation_rate") return &c.inflation_rate;
    if (key == "grid_points") return &c.settings.grid_points;
    if (key == "refine_tol") return &c.settings.refine_tol;
    if (key == "max_refine_iters") return &c.settings.max_refine_iters;
    throw ConfigError("unknown key '" + std::string(key) + "'", 0);
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool is_infinity_word(std::string_view v) {
    std::string lower(v);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    return lower == "inf" || lower == "+inf" || lower == "infinity";
}

double parse_real(std::string_view key, std::string_view v) {
    if (key == "xi" && is_infinity_word(v)) return kUnboundedCutoff;
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size() || !std::isfinite(out)) {
        throw ConfigError("unparsable value '" + std::string(v) + "' for key '" +
                              std::string(key) + "'",
                          0);
    }
    return out;
}

std::size_t parse_count(std::string_view key, std::string_view v) {
    std::size_t out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size()) {
        throw ConfigError("unparsable value '" + std::string(v) + "' for key '" +
                              std::string(key) + "' (expected a non-negative integer)",
                          0);
    }
    return out;
}

}  // namespace

void ScenarioConfig::validate() const {
    params.validate();
    policy.validate();
    settings.validate();
    if (rounds < 1) throw InvariantError("constraint violated: rounds >= 1");
    if (!(inflation_rate > 0.0) || !std::isfinite(inflation_rate)) {
        throw InvariantError("constraint violated: inflation_rate > 0");
    }
}

void set_config_value(ScenarioConfig& cfg, std::string_view key, std::string_view value) {
    std::visit(
        [&](auto* field) {
            using T = std::remove_pointer_t<decltype(field)>;
            if constexpr (std::is_same_v<T, double>) {
                *field = parse_real(key, value);
            } else {
                *field = parse_count(key, value);
            }
        },
        lookup(cfg, key));
}

ScenarioConfig parse_config(std::string_view text) {
    ScenarioConfig cfg;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'",
                              line_no);
        }
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        try {
            set_config_value(cfg, key, value);
        } catch (const ConfigError& e) {
            throw ConfigError("line " + std::to_string(line_no) + ": " + e.what(), line_no);
        }
    }
    cfg.validate();
    return cfg;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path + "'", 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string format_real(double v) {
    if (v == kUnboundedCutoff) return "inf";
    std::array<char, 400> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed);
    return {buf.data(), ptr};
}

std::string to_config_text(const ScenarioConfig& cfg) {
    ScenarioConfig copy = cfg;
    std::string out;
    for (std::string_view key : kKeys) {
        out += key;
        out += " = ";
        std::visit(
            [&](auto* field) {
                using T = std::remove_pointer_t<decltype(field)>;
                if constexpr (std::is_same_v<T, double>) {
                    out += format_real(*field);
                } else {
                    out += std::to_string(*field);
                }
            },
            lookup(copy, key));
        out += '\n';
    }
    return out;
}

}  // namespace capfee
