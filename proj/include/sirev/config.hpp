#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sirev/errors.hpp"
#include "sirev/model.hpp"

namespace sirev {

// Minimal declarative config format: [section] headers (dots allowed),
// key = value lines, # comments.  Values: "strings", numbers, booleans and
// one-line arrays of those.  Exact fields (roots) are written as "p/q"
// strings so they never pass through floating point.
struct ConfigValue {
    enum Kind { Str, Num, Bool, Arr } kind = Num;
    std::string s;
    double num = 0.0;
    bool b = false;
    std::vector<ConfigValue> arr;
    int line = 0;
};

class Config {
public:
    void set(const std::string& key, ConfigValue v) { values_[key] = std::move(v); }
    bool has(const std::string& key) const { return values_.count(key) > 0; }

    const ConfigValue& at(const std::string& key) const;
    std::string get_string(const std::string& key) const;
    double get_number(const std::string& key, double fallback) const;
    double get_number(const std::string& key) const;
    bool get_bool(const std::string& key, bool fallback) const;
    std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
    std::vector<ConfigValue> get_array(const std::string& key) const;

    const std::map<std::string, ConfigValue>& entries() const { return values_; }

private:
    std::map<std::string, ConfigValue> values_;
};

Config parse_config(const std::string& text);
Config parse_config_file(const std::string& path);

struct SuiteSelection {
    bool ode = true;
    bool defining = true;
    bool brackets = true;
    bool algebraic = true;
    bool independence = true;
    bool drift = true;
};

struct RunConfig {
    ModelSpec model;
    SuiteSelection suite;
    double tol = 1e-9;           // shared residual tolerance
    double drift_tol = 1e-10;    // integrator tolerance
    double drift_T = 10.0;
    int points = 200;
    std::uint64_t seed = 42;
    std::string out_dir;
    std::string format = "text";
};

// Builds the model (throws ConfigError with line/field diagnostics on bad
// input, and surfaces model validation failures as ConfigError too).
RunConfig load_run_config(const std::string& path);
RunConfig run_config_from(const Config& cfg);

}  // namespace sirev
