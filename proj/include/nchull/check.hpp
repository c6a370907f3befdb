#pragma once

#include <functional>
#include <string>

namespace nchull {

/// Cross-validation suite driven by `nchull check`: combinatorial predicates
/// against the exact-geometry oracle, chain decompositions against the
/// verifier, Boolean bijection/union counts, and H(n) enumeration formulas.
/// Stops at the first failure. Returns true iff everything passed;
/// `report(line)` receives one line per group plus any counterexample.
bool run_check_suite(int max_n, const std::function<void(const std::string&)>& report);

} // namespace nchull
