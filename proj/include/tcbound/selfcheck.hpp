#pragma once

#include <string>
#include <vector>

namespace tcb::selfcheck {

struct CheckResult {
    std::string name;    // "module.check"
    bool passed = false;
    std::string detail;
};

struct Options {
    // Module or full check name; empty runs everything.
    std::string only;
    // Corrupts a preset ring before the preset checks run (tests the harness).
    bool inject_fault = false;
};

std::vector<std::string> check_names();

std::vector<CheckResult> run(const Options& opts = {});

std::string render_table(const std::vector<CheckResult>& results);

} // namespace tcb::selfcheck
