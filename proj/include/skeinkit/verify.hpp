#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace skeinkit {

struct SuiteLine {
    int criterion = 0;
    std::string label;
    std::string status;  // "PASS", "FAIL", or "SKIPPED-BUDGET"
    std::string detail;  // observed-vs-expected summary, no timing data
};

struct SuiteResult {
    std::vector<SuiteLine> lines;
    bool ok = true;           // false when any line FAILs
    bool budget_hit = false;  // true when any line was SKIPPED-BUDGET
};

// The eight-point acceptance battery: unknot axiom, trefoil baseline against
// the brute-force oracle, flat-double degree stability, the Whitehead-double
// base case, the canonical-surface census, desk-scale Whitehead degrees, the
// bound-ledger chain, and the randomized property suite. budget feeds the
// ordinary engine runs; extended_budget the two deep Whitehead runs, which
// report SKIPPED-BUDGET instead of FAIL when it runs out. Output is
// deterministic byte-for-byte at fixed budgets: details carry expansion
// counts, never wall times.
SuiteResult run_acceptance_suite(std::uint64_t budget = 8'000'000,
                                 std::uint64_t extended_budget = 64'000'000);

// One line per criterion: "criterion N  <label>  <STATUS>  <detail>".
std::string format_suite(const SuiteResult& r);

}  // namespace skeinkit
