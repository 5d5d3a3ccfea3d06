#include "sirev/report.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace sirev {

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["schema_version"] = schema_version;
    j["command"] = command;
    j["seed"] = seed;
    j["verdict"] = verdict();
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["status"] = c.status;
        jc["residual"] = c.residual;
        jc["tolerance"] = c.tolerance;
        jc["samples"] = c.samples;
        jc["wall_ms"] = c.wall_ms;
        if (!c.detail.empty()) jc["detail"] = c.detail;
        j["checks"].push_back(jc);
    }
    return j.dump(2) + "\n";
}

std::string Report::to_text() const {
    std::ostringstream os;
    size_t w = 10;
    for (const auto& c : checks) w = std::max(w, c.name.size());
    os << "== " << command << " (seed " << seed << ") ==\n";
    for (const auto& c : checks) {
        os << "  " << std::left << std::setw(int(w) + 2) << c.name << " "
           << std::setw(5) << c.status;
        if (c.status != "skip") {
            os << "  residual " << std::scientific << std::setprecision(3) << c.residual
               << "  tol " << c.tolerance << std::defaultfloat;
            if (c.samples > 0) os << "  n=" << c.samples;
        }
        if (!c.detail.empty()) os << "  [" << c.detail << "]";
        os << "\n";
    }
    os << "verdict: " << verdict() << "\n";
    return os.str();
}

}  // namespace sirev
