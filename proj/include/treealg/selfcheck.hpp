#pragma once

#include <string>
#include <vector>

#include "treealg/forest.hpp"

namespace treealg {

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;  // short failure description, empty on success
};

// Runs the cross-module invariant sweep up to the given weight. Checks that
// rely on the undecorated golden data are skipped unless the decoration set
// is the default singleton.
std::vector<CheckResult> run_selfcheck(int max_weight, const DecorationSet& decor,
                                       const Limits& limits = {});

}  // namespace treealg
