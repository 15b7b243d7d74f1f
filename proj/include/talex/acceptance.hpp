#pragma once

#include <optional>
#include <string>
#include <vector>

namespace talex {

// One self-check criterion of the released corpus: golden values, theorem
// property checks and randomized laws.  'detail' holds counts/values for
// the report; failures explain what was expected.
struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

// Runs all criteria (or a single one).  Ids are 1..12 and stable.
std::vector<CriterionResult> run_acceptance(std::optional<int> only = std::nullopt);

} // namespace talex
