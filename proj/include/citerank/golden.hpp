#pragma once

#include <string>
#include <vector>

namespace citerank {

// ============================================================================
// Golden checks against the embedded published ranking
// ============================================================================

struct GoldenCheck {
    std::string name;
    bool pass = false;
    std::string detail;   // measured values, for the pass/fail report
};

// Replays the published pipeline on the embedded fixture and compares every
// reproducible number against its published value: score recompute, worked
// example, refits, correlation table, joint and top-62 models, group split,
// rank column, reputation arithmetic, and the size correlation.
std::vector<GoldenCheck> run_golden_checks(double min_usn = 2.0, double split = 2.7);

bool all_pass(const std::vector<GoldenCheck>& checks);

// One "PASS name — detail" / "FAIL name — detail" line per check.
std::string format_golden_report(const std::vector<GoldenCheck>& checks);

} // namespace citerank
