#include "sirev/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "sirev/rational.hpp"

namespace sirev {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

ConfigValue parse_scalar(const std::string& tok, int line) {
    ConfigValue v;
    v.line = line;
    if (tok.size() >= 2 && tok.front() == '"' && tok.back() == '"') {
        v.kind = ConfigValue::Str;
        v.s = tok.substr(1, tok.size() - 2);
        return v;
    }
    if (tok == "true" || tok == "false") {
        v.kind = ConfigValue::Bool;
        v.b = (tok == "true");
        return v;
    }
    char* end = nullptr;
    v.num = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() || *end != '\0')
        throw ConfigError(line, tok, "not a string, boolean or number");
    v.kind = ConfigValue::Num;
    return v;
}

std::vector<std::string> split_top_level(const std::string& body, int line) {
    std::vector<std::string> parts;
    std::string cur;
    bool in_str = false;
    for (char c : body) {
        if (c == '"') in_str = !in_str;
        if (c == ',' && !in_str) {
            parts.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (in_str) throw ConfigError(line, body, "unterminated string");
    if (!trim(cur).empty()) parts.push_back(trim(cur));
    return parts;
}

}  // namespace

const ConfigValue& Config::at(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) throw ConfigError(0, key, "missing required field");
    return it->second;
}

std::string Config::get_string(const std::string& key) const {
    const auto& v = at(key);
    if (v.kind != ConfigValue::Str) throw ConfigError(v.line, key, "expected a string");
    return v.s;
}

double Config::get_number(const std::string& key) const {
    const auto& v = at(key);
    if (v.kind != ConfigValue::Num) throw ConfigError(v.line, key, "expected a number");
    return v.num;
}

double Config::get_number(const std::string& key, double fallback) const {
    return has(key) ? get_number(key) : fallback;
}

bool Config::get_bool(const std::string& key, bool fallback) const {
    if (!has(key)) return fallback;
    const auto& v = at(key);
    if (v.kind != ConfigValue::Bool) throw ConfigError(v.line, key, "expected true/false");
    return v.b;
}

std::int64_t Config::get_int(const std::string& key, std::int64_t fallback) const {
    if (!has(key)) return fallback;
    const double d = get_number(key);
    return std::int64_t(d);
}

std::vector<ConfigValue> Config::get_array(const std::string& key) const {
    const auto& v = at(key);
    if (v.kind != ConfigValue::Arr) throw ConfigError(v.line, key, "expected an array");
    return v.arr;
}

Config parse_config(const std::string& text) {
    Config cfg;
    std::istringstream in(text);
    std::string raw;
    std::string section;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        // comments start at # outside quotes
        std::string line;
        bool in_str = false;
        for (char c : raw) {
            if (c == '"') in_str = !in_str;
            if (c == '#' && !in_str) break;
            line += c;
        }
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError(line_no, line, "malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty()) throw ConfigError(line_no, line, "empty section name");
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(line_no, line, "expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError(line_no, line, "empty key");
        if (val.empty()) throw ConfigError(line_no, key, "empty value");
        const std::string full = section.empty() ? key : section + "." + key;

        ConfigValue v;
        if (val.front() == '[') {
            if (val.back() != ']') throw ConfigError(line_no, key, "array must close on one line");
            v.kind = ConfigValue::Arr;
            v.line = line_no;
            for (const auto& tok : split_top_level(val.substr(1, val.size() - 2), line_no))
                v.arr.push_back(parse_scalar(tok, line_no));
        } else {
            v = parse_scalar(val, line_no);
        }
        cfg.set(full, v);
    }
    return cfg;
}

Config parse_config_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError(0, path, "cannot open config file");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str());
}

namespace {

Rational rational_field(const ConfigValue& v, const std::string& field) {
    if (v.kind == ConfigValue::Str) {
        try {
            return parse_rational(v.s);
        } catch (const Error& e) {
            throw ConfigError(v.line, field, e.what());
        }
    }
    if (v.kind == ConfigValue::Num && v.num == std::floor(v.num)) return Rational(int(v.num));
    throw ConfigError(v.line, field, "exact field: write \"p/q\" (or an integer)");
}

}  // namespace

RunConfig run_config_from(const Config& cfg) {
    RunConfig rc;

    const std::string parity_s = cfg.get_string("model.parity");
    Parity parity;
    if (parity_s == "even")
        parity = Parity::Even;
    else if (parity_s == "odd")
        parity = Parity::Odd;
    else
        throw ConfigError(cfg.at("model.parity").line, "model.parity", "must be \"even\" or \"odd\"");

    StructurePoly F;
    F.leading = cfg.get_number("model.leading", 1.0);

    if (cfg.has("model.roots")) {
        auto roots = cfg.get_array("model.roots");
        auto eps = cfg.get_array("model.eps");
        auto xi = cfg.get_array("model.xi");
        if (eps.size() != roots.size())
            throw ConfigError(cfg.at("model.eps").line, "model.eps", "length must match roots");
        if (xi.size() != roots.size())
            throw ConfigError(cfg.at("model.xi").line, "model.xi", "length must match roots");
        for (size_t i = 0; i < roots.size(); ++i) {
            SimpleRoot r;
            r.a = rational_field(roots[i], "model.roots");
            if (eps[i].kind != ConfigValue::Num || std::abs(eps[i].num) != 1.0)
                throw ConfigError(eps[i].line, "model.eps", "entries must be +1 or -1");
            r.eps = int(eps[i].num);
            if (xi[i].kind != ConfigValue::Num)
                throw ConfigError(xi[i].line, "model.xi", "entries must be numbers");
            r.xi = xi[i].num;
            F.simple.push_back(r);
        }
    }

    if (cfg.has("model.multiple.root")) {
        MultipleBlock blk;
        blk.a = rational_field(cfg.at("model.multiple.root"), "model.multiple.root");
        blk.eps = int(cfg.get_number("model.multiple.eps", 1.0));
        for (const auto& v : cfg.get_array("model.multiple.mu")) {
            if (v.kind != ConfigValue::Num)
                throw ConfigError(v.line, "model.multiple.mu", "entries must be numbers");
            blk.mu.push_back(v.num);
        }
        blk.r = int(blk.mu.size());
        F.multiple = blk;
    }

    if (cfg.has("model.pair.scale")) {
        ComplexBlock blk;
        blk.scale = cfg.get_number("model.pair.scale");
        for (const auto& v : cfg.get_array("model.pair.mu_plus")) blk.mu_plus.push_back(v.num);
        for (const auto& v : cfg.get_array("model.pair.mu_minus")) blk.mu_minus.push_back(v.num);
        if (blk.mu_plus.size() != blk.mu_minus.size())
            throw ConfigError(cfg.at("model.pair.scale").line, "model.pair",
                              "mu_plus and mu_minus lengths differ");
        blk.r = int(blk.mu_plus.size());
        F.pairs.push_back(blk);
    }

    auto dom = cfg.get_array("model.domain");
    if (dom.size() != 2 || dom[0].kind != ConfigValue::Num || dom[1].kind != ConfigValue::Num)
        throw ConfigError(cfg.at("model.domain").line, "model.domain", "expected [lo, hi]");
    const Interval domain{dom[0].num, dom[1].num};
    const double nu = cfg.get_number("model.nu", 0.0);

    try {
        rc.model = make_model(parity, F, nu, domain);
    } catch (const ConfigError&) {
        throw;
    } catch (const DuplicateRoot& e) {
        throw ConfigError(cfg.has("model.roots") ? cfg.at("model.roots").line : 0, "model.roots",
                          e.what());
    } catch (const DegenerateSpec& e) {
        throw ConfigError(cfg.has("model.xi") ? cfg.at("model.xi").line : 0, "model.xi", e.what());
    } catch (const Error& e) {
        throw ConfigError(cfg.at("model.parity").line, "model", e.what());
    }

    rc.suite.ode = cfg.get_bool("suite.ode", true);
    rc.suite.defining = cfg.get_bool("suite.defining", true);
    rc.suite.brackets = cfg.get_bool("suite.brackets", true);
    rc.suite.algebraic = cfg.get_bool("suite.algebraic", true);
    rc.suite.independence = cfg.get_bool("suite.independence", true);
    rc.suite.drift = cfg.get_bool("suite.drift", true);

    rc.tol = cfg.get_number("tolerances.residual", 1e-9);
    rc.drift_tol = cfg.get_number("tolerances.drift", 1e-10);
    rc.drift_T = cfg.get_number("run.drift_T", 10.0);
    rc.points = int(cfg.get_int("run.points", 200));
    rc.seed = std::uint64_t(cfg.get_int("run.seed", 42));
    if (cfg.has("run.out")) rc.out_dir = cfg.get_string("run.out");
    if (cfg.has("run.format")) rc.format = cfg.get_string("run.format");
    return rc;
}

RunConfig load_run_config(const std::string& path) {
    return run_config_from(parse_config_file(path));
}

}  // namespace sirev
