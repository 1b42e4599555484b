#pragma once
// Uniform pass/fail reporting for the verification suites, printable as text
// lines or a JSON array.

#include <string>
#include <vector>

namespace voa {

struct Check {
    std::string id;
    bool pass = false;
    std::string detail;  // witness / extra info, may be empty
    // set by the q-series identity checks
    std::string order;
    std::string first_mismatch;
};

struct Report {
    std::string name;
    std::vector<Check> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(std::string id, bool pass, std::string detail = "") {
        Check c;
        c.id = std::move(id);
        c.pass = pass;
        c.detail = std::move(detail);
        checks.push_back(std::move(c));
    }
    void merge(const Report& other) {
        for (const auto& c : other.checks) checks.push_back(c);
    }

    std::string text() const;
    std::string json() const;
};

}  // namespace voa
