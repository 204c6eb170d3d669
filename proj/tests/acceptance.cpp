#include <cstdio>
#include <map>

#include "pie/checks.hpp"

// Runs every verification suite once and prints one line per criterion.
// Suites with a wall-time budget fail the run when they exceed it.
int main() {
    const std::map<int, double> time_budget = {{1, 10.0},  {5, 30.0},  {7, 60.0},
                                               {10, 60.0}, {12, 120.0}, {14, 5.0}};
    const auto results = pie::run_all_checks();
    bool all = true;
    for (const auto& r : results) {
        const auto budget = time_budget.find(r.index);
        const bool in_budget = budget == time_budget.end() || r.seconds < budget->second;
        const bool ok = r.pass && in_budget;
        all = all && ok;
        std::printf("[%2d] %-18s %s  %7.2fs  %s%s\n", r.index, r.name.c_str(),
                    ok ? "PASS" : "FAIL", r.seconds, r.detail.c_str(),
                    in_budget ? "" : " [over time budget]");
    }
    std::printf("%s\n", all ? "acceptance: all criteria pass" : "acceptance: failures present");
    return all ? 0 : 1;
}
