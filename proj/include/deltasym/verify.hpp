#pragma once

#include <string>
#include <vector>

namespace dsym {

/// Outcome of one acceptance criterion: 1-based index, a short name, the
/// verdict, and a one-line detail describing what was measured.
struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Runs the full acceptance suite in order. The seed drives every randomized
/// criterion; for a fixed seed the results, including every detail string,
/// are deterministic.
std::vector<CriterionResult> run_acceptance(long long seed);

}  // namespace dsym
