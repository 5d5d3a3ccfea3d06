#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sirev {

struct Check {
    std::string name;
    std::string status;      // "pass", "fail" or "skip"
    double residual = 0.0;
    double tolerance = 0.0;
    std::int64_t samples = 0;
    double wall_ms = 0.0;    // excluded from the determinism contract
    std::string detail;

    static Check make(const std::string& name, double residual, double tol,
                      std::int64_t samples, const std::string& detail = "") {
        return {name, residual <= tol ? "pass" : "fail", residual, tol, samples, 0.0, detail};
    }
    static Check boolean(const std::string& name, bool ok, const std::string& detail = "") {
        return {name, ok ? "pass" : "fail", ok ? 0.0 : 1.0, 0.0, 0, 0.0, detail};
    }
    static Check skip(const std::string& name, const std::string& why) {
        return {name, "skip", 0.0, 0.0, 0, 0.0, why};
    }
    bool failed() const { return status == "fail"; }
};

struct Report {
    static constexpr int schema_version = 1;
    std::string command;
    std::uint64_t seed = 0;
    std::vector<Check> checks;

    void add(Check c) { checks.push_back(std::move(c)); }
    bool all_pass() const {
        for (const auto& c : checks)
            if (c.failed()) return false;
        return true;
    }
    std::string verdict() const { return all_pass() ? "pass" : "fail"; }

    std::string to_json() const;  // stable field order, deterministic given seed
    std::string to_text() const;  // aligned human-readable rendering
};

}  // namespace sirev
