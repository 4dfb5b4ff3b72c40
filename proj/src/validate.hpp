#pragma once

#include "common.hpp"
#include "config.hpp"

#include <string>
#include <vector>

namespace srbm {

struct ValidationRow {
    std::string name;
    std::string status;  // PASS, FAIL, SKIPPED
    double value = 0.0;
    double tolerance = 0.0;
};

struct ValidationReport {
    std::vector<ValidationRow> rows;
    int failures() const {
        int n = 0;
        for (const auto& r : rows) n += (r.status == "FAIL");
        return n;
    }
};

// Invariant battery across the modules. Recurrent instances run the
// kernel/gluing checks and report the transform checks as SKIPPED.
ValidationReport run_validate(const RunConfig& cfg);

}  // namespace srbm
