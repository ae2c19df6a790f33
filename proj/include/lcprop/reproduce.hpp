#pragma once

/// Scripted end-to-end verifications, one per headline result, runnable from
/// the CLI (`lcprop reproduce <id>`) and from the acceptance suite. Each
/// check recomputes everything from scratch with exact arithmetic and either
/// passes or reports the first discrepancy.

#include <cstdint>
#include <string>
#include <vector>

namespace lcprop {

struct CriterionResult {
    std::string id;
    std::string name;
    bool passed = false;
    std::string detail;  // summary on success, first discrepancy on failure
};

const std::vector<std::string>& criterion_ids();

/// Runs one criterion; throws std::invalid_argument for an unknown id.
CriterionResult run_criterion(const std::string& id, std::uint64_t seed);

std::vector<CriterionResult> run_all_criteria(std::uint64_t seed);

}  // namespace lcprop
