#pragma once

#include <string>
#include <vector>

namespace mpcalc {

struct CaseCheck {
    std::string description;
    bool pass = false;
};

struct CaseResult {
    std::string id;
    bool pass = false;
    std::vector<CaseCheck> checks;
};

/// Built-in fixed scenarios with pinned expected outputs.
const std::vector<std::string>& casebook_ids();

CaseResult run_case(const std::string& id);

std::string render_case(const CaseResult& r);

} // namespace mpcalc
