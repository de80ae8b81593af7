#pragma once

// Named property suites, numbered 1-12, each returning pass/fail counts.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zariski/sampling.hpp"

namespace zariski {

struct SuiteInfo {
    int id;
    std::string name;
    std::string description;
};

struct SuiteReport {
    SuiteInfo info;
    CheckReport result;
    double seconds = 0;
};

const std::vector<SuiteInfo>& suite_catalog();

/// Accepts the number ("7") or the name.
std::optional<int> find_suite(std::string_view key);

SuiteReport run_suite(int id, std::uint64_t seed = kDefaultSeed);

} // namespace zariski
