#pragma once

#include <string>
#include <vector>

namespace tmir {

// Named pass/fail checks produced by the validators.
struct Check {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct Report {
    std::vector<Check> checks;

    void add(std::string name, bool ok, std::string detail = {}) {
        checks.push_back({std::move(name), ok, std::move(detail)});
    }
    bool ok() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
    const Check* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

}  // namespace tmir
