#pragma once

#include <json.hpp>

#include "pie/poset.hpp"

namespace pie {

// {"elements": [...], "leq": [[a,b],...], "rank": {...}?, "base": {...}?}
// Covering pairs are enough; the relation is closed on construction.
finite_poset read_poset(const nlohmann::json& j);

// Emits covering pairs only.
nlohmann::json write_poset(const finite_poset& p);

}
