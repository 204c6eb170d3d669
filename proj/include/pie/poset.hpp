#pragma once

#include <bitset>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pie/numbers.hpp"

namespace pie {

// Finite partial order on string ids, at most 512 elements. The relation is
// closed reflexively and transitively at construction; antisymmetry failures
// throw. Ids starting with "__" are reserved for library-made sentinels.
class finite_poset {
public:
    static constexpr int max_elements = 512;
    using row = std::bitset<max_elements>;

    finite_poset() = default;
    finite_poset(std::vector<std::string> elements,
                 const std::vector<std::pair<std::string, std::string>>& leq_pairs,
                 std::map<std::string, long long> rank = {},
                 std::map<std::string, std::string> base = {},
                 bool allow_reserved_ids = false);

    int size() const { return static_cast<int>(ids_.size()); }
    const std::vector<std::string>& elements() const { return ids_; }
    const std::string& id(int i) const { return ids_[i]; }
    int index_of(const std::string& id) const;  // -1 when absent
    bool contains(const std::string& id) const { return index_of(id) >= 0; }

    bool leq(int a, int b) const { return rel_[a][b]; }
    bool less(int a, int b) const { return a != b && rel_[a][b]; }
    bool leq(const std::string& a, const std::string& b) const;
    bool comparable(int a, int b) const { return rel_[a][b] || rel_[b][a]; }

    bool ranked() const { return !rank_.empty(); }
    long long rank_of(int i) const;
    bool fibered() const { return !base_.empty(); }
    const std::string& base_of(int i) const;
    std::vector<std::string> fiber_ids() const;
    std::vector<int> fiber(const std::string& base_id) const;

    std::vector<int> strict_down(int x) const;
    std::vector<int> strict_up(int x) const;
    std::vector<std::pair<int, int>> covers() const;

    // Subposet on the given indices; rank and base restrict.
    finite_poset induced(const std::vector<int>& keep) const;

private:
    std::vector<std::string> ids_;
    std::map<std::string, int> index_;
    std::vector<row> rel_;
    std::vector<long long> rank_;
    std::vector<std::string> base_;
};

// Closed endpoints given as nullopt materialize a "__bot__" / "__top__"
// sentinel; open missing endpoints add nothing. Named endpoints must exist.
finite_poset interval(const finite_poset& p, const std::optional<std::string>& lo,
                      const std::optional<std::string>& hi, bool open_lo, bool open_hi);

// Element comparable to every element; lexicographically least such id.
std::optional<std::string> find_center(const finite_poset& p);
std::optional<std::string> find_maximum(const finite_poset& p);
std::optional<std::string> find_minimum(const finite_poset& p);

// Per-fiber variants over the base map.
std::map<std::string, std::optional<std::string>> fiber_centers(const finite_poset& p);

// r(t) = max { s in sub : s <= t }, defined when every such set has one.
// sub must be an induced sub-poset of p.
std::optional<std::map<std::string, std::string>> falling_retraction(const finite_poset& p,
                                                                     const finite_poset& sub);

struct nerve_complex {
    const finite_poset* poset = nullptr;
    // simplices[d] lists the strict chains with d+1 elements, each a vector of
    // element indices increasing in the order; lists are lexicographic.
    std::vector<std::vector<std::vector<int>>> simplices;

    int dim() const { return static_cast<int>(simplices.size()) - 1; }
    bigint total_size() const;
    std::string label(int d, int i) const;
};

// All strict chains up to max_dim (inclusive); guard throws when the count
// would pass max_simplices.
nerve_complex nerve(const finite_poset& p, std::optional<int> max_dim = std::nullopt,
                    long long max_simplices = 5'000'000);

struct euler_characteristics_t {
    bigint chi;          // unreduced
    bigint chi_reduced;  // chi - 1
    std::vector<bigint> chains_by_size;  // [m-1] = number of m-element chains
};

// Alternating chain count; no simplex list is materialized.
euler_characteristics_t euler_characteristics(const finite_poset& p);

// Reduced alternating chain count of the subposet on the given indices.
bigint chi_reduced_of_subset(const finite_poset& p, const std::vector<int>& subset);

// Exhaustive order-axiom scan, for tests.
bool verify_order_axioms(const finite_poset& p);

}
