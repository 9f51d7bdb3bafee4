#pragma once

#include "qsd/centralizer.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qsd {

/// Parameters of one verification run. Unset fields mean "use the check's
/// built-in parameter grid"; set fields pin a single configuration.
struct RunConfig {
    std::optional<Mode> mode;
    std::optional<int> m, n, d, k;
    std::optional<Rational> specialize;
    int dim_cap = 64;
};

struct CheckResult {
    std::string name;
    std::string status;  // "pass" | "fail" | "skipped"
    std::string detail;
    std::optional<DualityReport> report;
};

struct CheckDef {
    std::string name;
    std::string description;
    bool classical = false;  // touches the classical side
    bool quantum = false;    // touches the quantum side
    std::function<CheckResult(const RunConfig&)> run;

    bool matches_mode(const std::optional<Mode>& mode) const {
        if (!mode)
            return true;
        return *mode == Mode::Classical ? classical : quantum;
    }
};

/// The registry, ordered by check name.
const std::vector<CheckDef>& all_checks();
/// Lookup by name; nullptr if unknown.
const CheckDef* find_check(const std::string& name);

}  // namespace qsd
