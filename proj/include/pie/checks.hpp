#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace pie {

// One verification suite outcome. detail is a short factual summary of what
// was covered; seconds is wall time for the suite body.
struct check_result {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// Suite bodies. Each runs a self-contained battery and reports pass/fail
// plus a coverage summary; none of them throws on a mere verification
// failure (that is reported through pass), only on internal misuse.
check_result check_mobius_agreement();
check_result check_mobius_inversion();
check_result check_centers();
check_result check_retractions();
check_result check_rank_ss();
check_result check_punctual();
check_result check_skeletal_banerjee();
check_result check_series();
check_result check_koszul();
check_result check_point_counts();
check_result check_vw();
check_result check_smooth_density();
check_result check_ie_residual();
check_result check_stable_betti();

struct check_entry {
    std::string name;
    std::function<check_result()> run;
};

// Registry in fixed order; indices are 1-based and stable.
const std::vector<check_entry>& check_registry();

// Runs every suite in registry order.
std::vector<check_result> run_all_checks();

// Runs one suite by name; throws std::invalid_argument for unknown names.
check_result run_check(const std::string& name);

// {"version", "pass", "checks": [{"index","name","pass","detail"}...]}.
// Timing is excluded so identical configurations serialize identically.
nlohmann::json checks_to_json(const std::vector<check_result>& results);

}  // namespace pie
