#include "voa/report.hpp"

#include <nlohmann/json.hpp>

namespace voa {

std::string Report::text() const {
    std::string out;
    for (const auto& c : checks) {
        out += (c.pass ? "PASS " : "FAIL ") + c.id;
        if (!c.detail.empty()) out += "  [" + c.detail + "]";
        out += "\n";
    }
    return out;
}

std::string Report::json() const {
    nlohmann::json j;
    j["name"] = name;
    j["pass"] = all_pass();
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json jc;
        jc["id"] = c.id;
        jc["pass"] = c.pass;
        if (!c.detail.empty()) jc["detail"] = c.detail;
        if (!c.order.empty()) jc["order"] = c.order;
        if (!c.first_mismatch.empty()) jc["first_mismatch"] = c.first_mismatch;
        j["checks"].push_back(jc);
    }
    return j.dump(2);
}

}  // namespace voa
