#pragma once

#include <map>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "pie/chain.hpp"

namespace pie {

// Chain complex with a finite filtration index per basis element; boundaries
// may not decrease membership in the level sets.
struct filtered_chain_complex_q {
    chain_complex_q complex;
    std::vector<std::vector<long long>> level;  // aligned with complex.dims
    long long min_level = 0;
    long long max_level = 0;
};

// Throws when the filtration is not by subcomplexes.
void verify_filtration(const filtered_chain_complex_q& f);

// Number of basis elements (all degrees) of level <= i, for i = min..max.
std::vector<long long> filtration_sizes(const filtered_chain_complex_q& f);

// Nerve chain complex filtered by the maximum rank in a chain.
filtered_chain_complex_q rank_filtration(const finite_poset& p);

struct spectral_result {
    // pages[r-1] holds the nonzero E_r^{p,q} dimensions
    std::vector<std::map<std::pair<int, int>, long long>> pages;
    // d_r acting out of E_r^{p,q}, bidegree (r, 1-r); zero maps omitted
    std::map<std::tuple<int, int, int>, qmatrix> differentials;
    std::map<std::pair<int, int>, long long> limit;
    std::map<int, long long> total_betti;  // homology of the underlying complex
    bool converges = false;                // E_inf graded sums equal total_betti
    bool bookkeeping_ok = false;           // E_{r+1} = H(E_r, d_r) per entry
    bool euler_page_invariant = false;
    int stabilized_at = 1;
};

// Cohomologically indexed pages of the dual complex, with decreasing
// filtration Fil^p spanned by duals of elements of level >= p.
spectral_result spectral_sequence(const filtered_chain_complex_q& f);

nlohmann::json ss_to_json(const spectral_result& s);

struct rank_e1_report_t {
    spectral_result ss;
    // expected E_1 from the strict lower intervals: an element x of rank p
    // with reduced interval Betti in degree d contributes at (p, d + 1 - p)
    std::map<std::pair<int, int>, long long> expected_e1;
    bool e1_match = false;
    bool converges = false;
    std::map<std::string, std::map<int, long long>> interval_betti;
};

rank_e1_report_t rank_e1_report(const finite_poset& p);

nlohmann::json rank_e1_to_json(const rank_e1_report_t& r);

}
