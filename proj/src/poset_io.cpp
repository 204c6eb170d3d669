#include "pie/poset_io.hpp"

#include <stdexcept>

namespace pie {

finite_poset read_poset(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("elements"))
        throw std::invalid_argument("poset json: object with \"elements\" required");
    std::vector<std::string> elements = j.at("elements").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> pairs;
    if (j.contains("leq"))
        for (const auto& e : j.at("leq")) {
            if (!e.is_array() || e.size() != 2) throw std::invalid_argument("poset json: leq entries are pairs");
            pairs.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
        }
    std::map<std::string, long long> rank;
    if (j.contains("rank")) rank = j.at("rank").get<std::map<std::string, long long>>();
    std::map<std::string, std::string> base;
    if (j.contains("base")) base = j.at("base").get<std::map<std::string, std::string>>();
    // reserved sentinel ids are accepted here so emitted posets round-trip
    return finite_poset(std::move(elements), pairs, std::move(rank), std::move(base), true);
}

nlohmann::json write_poset(const finite_poset& p) {
    nlohmann::json j;
    j["elements"] = p.elements();
    nlohmann::json leq = nlohmann::json::array();
    for (const auto& [a, b] : p.covers()) leq.push_back({p.id(a), p.id(b)});
    j["leq"] = leq;
    if (p.ranked()) {
        nlohmann::json r = nlohmann::json::object();
        for (int i = 0; i < p.size(); ++i) r[p.id(i)] = p.rank_of(i);
        j["rank"] = r;
    }
    if (p.fibered()) {
        nlohmann::json b = nlohmann::json::object();
        for (int i = 0; i < p.size(); ++i) b[p.id(i)] = p.base_of(i);
        j["base"] = b;
    }
    return j;
}

}
