#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "pie/qmatrix.hpp"
#include "pie/spectral.hpp"

namespace pie {

// Sorted multisets of size m over letters {0..letters-1}, lexicographic.
std::vector<std::vector<int>> multisets_of(int letters, int m);

// Tuples of `parts` positive integers with sum <= max_total, ordered by sum
// then lexicographically.
std::vector<std::vector<int>> compositions_upto(int parts, int max_total);

// Rational functions on tuples of multisets, one summand per composition,
// with the alternating merge / drop-last pullback differential. Stored in
// chain orientation (boundary = transposed pullback matrix) so the complex
// checks and the spectral engine apply unchanged.
struct composition_complex {
    int letters = 0;
    int cutoff = 0;

    // comps[p] = the compositions (a_0..a_p) with p+1 parts and sum <= cutoff
    std::vector<std::vector<std::vector<int>>> comps;

    struct basis_element {
        int comp = 0;                         // index into comps[degree]
        std::vector<std::vector<int>> parts;  // parts[i] sorted, size a_i
    };
    // basis[p] lists summands consecutively, tuples in lexicographic order
    std::vector<std::vector<basis_element>> basis;
    std::vector<std::vector<long long>> comp_offset;  // first index per summand

    // level of a basis element = sum of its composition - 1
    filtered_chain_complex_q filtered;

    int degrees() const { return static_cast<int>(basis.size()); }
    long long dim_at(int degree) const;
    long long summand_dim(int degree, int comp_index) const;
};

composition_complex skeletal_e1(int letters, int cutoff);

// Antisymmetric functions on ordered tuples over the alphabet; the basis in
// degree p is indexed by (p+1)-subsets, the differential is the alternating
// sum of coordinate-forgetting pullbacks. Same transposed storage.
struct banerjee_complex_finite {
    int letters = 0;
    std::vector<std::vector<std::vector<int>>> basis;  // basis[p]: sorted subsets
    chain_complex_q complex;

    int degrees() const { return static_cast<int>(basis.size()); }
    long long dim_at(int degree) const;
};

banerjee_complex_finite banerjee_complex(int letters, int max_degree);

struct graded_piece_report {
    long long level = 0;
    std::map<int, long long> source_homology;  // degree -> dim on the source side
    long long target_dim = 0;
    long long map_rank = 0;
    bool quasi_iso = false;
};

struct asym_result {
    banerjee_complex_finite target;
    std::vector<qmatrix> maps;  // per degree; rows = target, cols = source
    bool commutes = false;
    bool filtration_preserved = false;
    std::vector<graded_piece_report> pieces;
    bool filtered_quasi_iso = false;
};

// Signed sum over coordinate permutations on the all-singletons summand, zero
// on every other summand. The result carries exact verification artifacts:
// commutation with the differentials, level preservation of every nonzero
// column, and a rank-based quasi-isomorphism verdict per filtration level.
asym_result asym(const composition_complex& e);
asym_result asym(const composition_complex& e, const banerjee_complex_finite& target);

nlohmann::json asym_to_json(const asym_result& a);

struct punctual_report {
    std::string target;
    bool is_set = false;
    std::map<int, long long> betti;  // reduced, nonzero entries only
    bool concentration_ok = false;
    bool transpositions_ok = false;
    bool pass = false;
};

// Reduced homology of the open lower interval below the given multiset inside
// the poset of nonempty multisets of at most |t| letters. For a genuine set of
// size k the homology must be one line in degree k-2 and every adjacent
// letter swap must act by -1; with a repeated letter it must vanish.
punctual_report punctual_graded_check(const std::vector<std::string>& alphabet,
                                      std::vector<int> t);

}
