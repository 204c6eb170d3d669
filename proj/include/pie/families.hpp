#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pie/poset.hpp"

namespace pie {

finite_poset chain_poset(int n);
finite_poset antichain_poset(int n);

// Subsets of {1..n} ordered by inclusion; ids "-" for the empty set, else the
// concatenated digits. n <= 9.
finite_poset boolean_poset(int n);

// Divisors of n ordered by divisibility; rank = number of prime factors
// counted with multiplicity.
finite_poset divisor_poset(long long n);

// Nonempty subsets of the alphabet with at most k letters, ordered by
// inclusion, ranked by cardinality.
finite_poset config_poset(const std::vector<std::string>& alphabet, int k);

// Nonempty multisets over the alphabet with at most k letters, ordered by
// multiset containment, ranked by cardinality. with_bottom adjoins a
// "__bot__" below everything at rank 0.
finite_poset multiset_poset(const std::vector<std::string>& alphabet, int k, bool with_bottom);

// Elements are the nonempty strict chains of p, ordered by refinement,
// ranked by chain length.
finite_poset barycentric(const finite_poset& p);

// Disjoint union with everything in a below everything in b; ids prefixed
// "a:" and "b:".
finite_poset join_posets(const finite_poset& a, const finite_poset& b);

finite_poset cone_below(const finite_poset& p);   // adjoin "__bot__"
finite_poset cone_above(const finite_poset& p);   // adjoin "__top__"

// Random order: edges i < j kept with the given percentage, transitively
// closed. Ids are zero padded so iteration order matches index order.
finite_poset random_poset(int n, unsigned long long seed, int density_percent);
finite_poset random_ranked_poset(int n, unsigned long long seed, int density_percent);

std::vector<std::string> default_alphabet(int n);

// {"family": "chain", "n": 3} style descriptions; "of"/"a"/"b" nest.
finite_poset build_family(const nlohmann::json& spec);

}
