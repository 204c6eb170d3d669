#include <stdexcept>

#include "pie/checks.hpp"
#include "pie/version.hpp"

namespace pie {

const std::vector<check_entry>& check_registry() {
    static const std::vector<check_entry> registry = {
        {"mobius-agreement", check_mobius_agreement},
        {"mobius-inversion", check_mobius_inversion},
        {"centers", check_centers},
        {"retractions", check_retractions},
        {"rank-ss", check_rank_ss},
        {"punctual", check_punctual},
        {"skeletal-banerjee", check_skeletal_banerjee},
        {"series", check_series},
        {"koszul", check_koszul},
        {"point-counts", check_point_counts},
        {"vw", check_vw},
        {"smooth-density", check_smooth_density},
        {"ie-residual", check_ie_residual},
        {"stable-betti", check_stable_betti},
    };
    return registry;
}

std::vector<check_result> run_all_checks() {
    std::vector<check_result> out;
    for (const check_entry& e : check_registry()) out.push_back(e.run());
    return out;
}

check_result run_check(const std::string& name) {
    for (const check_entry& e : check_registry())
        if (e.name == name) return e.run();
    std::string known;
    for (const check_entry& e : check_registry()) known += " " + e.name;
    throw std::invalid_argument("unknown check suite " + name + "; known:" + known);
}

nlohmann::json checks_to_json(const std::vector<check_result>& results) {
    nlohmann::json checks = nlohmann::json::array();
    bool all = true;
    for (const check_result& r : results) {
        checks.push_back({{"index", r.index},
                          {"name", r.name},
                          {"pass", r.pass},
                          {"detail", r.detail}});
        all = all && r.pass;
    }
    return {{"version", std::string(version)}, {"pass", all}, {"checks", checks}};
}

}  // namespace pie
