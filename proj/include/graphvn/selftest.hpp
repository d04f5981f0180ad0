#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace graphvn {

// One line per property exercised by the condensed self-check.
struct SelfTestItem {
    std::string name;
    bool passed = false;
    std::string detail;  // empty unless failed
};

struct SelfTestReport {
    std::vector<SelfTestItem> items;
    bool all_passed() const;
};

// Runs a condensed deterministic property sweep over randomly generated
// graphs: validation, weight-group invariance, the eigenvalue identity,
// mass conservation, rotation validity and a small dual-oracle moment check.
SelfTestReport run_selftest(std::uint64_t seed = 20260815);

}  // namespace graphvn
