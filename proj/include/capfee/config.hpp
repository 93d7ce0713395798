#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "capfee/model.hpp"
#include "capfee/solver.hpp"

namespace capfee {

/// Malformed configuration text. `line()` is 1-based, 0 when not tied to a line.
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& what, std::size_t line)
        : std::runtime_error(what), line_(line) {}
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

struct ScenarioConfig {
    ModelParams params;
    BonusPolicy policy;
    SolveSettings settings;
    std::size_t rounds = 1;
    double inflation_rate = 1.0;

    void validate() const;

    bool operator==(const ScenarioConfig&) const = default;
};

/// Parses `key = value` lines. `#` starts a comment; blank lines are skipped.
/// Unknown keys and unparsable values raise ConfigError; values that parse
/// but violate an invariant raise InvariantError.
[[nodiscard]] ScenarioConfig parse_config(std::string_view text);

/// Reads and parses a file; I/O failures raise ConfigError.
[[nodiscard]] ScenarioConfig load_config(const std::string& path);

/// Every key, one per line, in a form parse_config reads back exactly.
[[nodiscard]] std::string to_config_text(const ScenarioConfig& cfg);

/// Shortest plain (non-exponent) decimal that round-trips to `v`; "inf" for +infinity.
[[nodiscard]] std::string format_real(double v);

/// Applies one key. Throws ConfigError (line 0) for unknown keys or bad values.
void set_config_value(ScenarioConfig& cfg, std::string_view key, std::string_view value);

}  // namespace capfee
