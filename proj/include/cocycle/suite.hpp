#pragma once

// Acceptance criteria as runnable checks. Each criterion reports pass/fail,
// wall time and the numbers it compared.

#include <cstdint>
#include <string>
#include <vector>

#include "cocycle/io.hpp"

namespace cocycle {

inline constexpr int kCriterionCount = 9;

struct CriterionReport {
    int id = 0;
    std::string title;
    bool pass = false;
    double seconds = 0;
    Json details = Json::object();
    std::vector<std::string> failures;  // first few mismatches

    Json to_json() const;
};

struct SuiteOptions {
    uint64_t seed = 1;
};

// Throws InputError for ids outside 1..kCriterionCount.
CriterionReport run_criterion(int id, const SuiteOptions& opts = {});
std::vector<CriterionReport> run_suite(const std::vector<int>& ids, const SuiteOptions& opts = {});

// "PASS  3  cohomology oracle equivalence  (1.23 s)"
std::string summary_line(const CriterionReport& r);

}  // namespace cocycle
