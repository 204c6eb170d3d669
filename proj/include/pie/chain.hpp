#pragma once

#include <map>
#include <string>
#include <vector>

#include "pie/poset.hpp"
#include "pie/qmatrix.hpp"

namespace pie {

// Chain complex over Q with named basis. boundary[i] maps degree
// lowest_degree+i to the degree below; boundary[0] has zero rows.
struct chain_complex_q {
    int lowest_degree = 0;
    std::vector<int> dims;
    std::vector<qmatrix> boundary;
    std::vector<std::vector<std::string>> labels;

    int terms() const { return static_cast<int>(dims.size()); }
    int top_degree() const { return lowest_degree + terms() - 1; }
    int dim_at(int degree) const;
    // map out of C_degree, or null when the degree is absent / lowest
    const qmatrix* boundary_from(int degree) const;
};

// Basis = nondegenerate chains; boundary = alternating vertex deletion.
chain_complex_q chain_complex(const nerve_complex& n);

// Shape and d∘d = 0 checks.
bool verify_complex(const chain_complex_q& c);

// Adjoins a one-dimensional degree -1 with the sum-of-vertices augmentation.
// Requires lowest_degree == 0 (or an empty complex).
chain_complex_q augmented(const chain_complex_q& c);

// Nonzero Betti numbers over Q.
std::map<int, long long> betti(const chain_complex_q& c, bool reduced);

// Homology of degree `degree`: coset representatives and the span of
// boundaries followed by those representatives.
struct homology_space {
    std::vector<std::vector<rat>> reps;
    column_space span{0};
    int boundary_rank = 0;
};
homology_space homology_basis(const chain_complex_q& c, int degree);

struct induced_map_result {
    bool chain_map_ok = false;
    std::map<int, qmatrix> homology_action;
    std::map<int, long long> source_betti;
    std::map<int, long long> target_betti;
};

// Functorial action of an order-preserving map on nerve homology; chains with
// a repeated image vertex die in the normalized complex.
induced_map_result induced_map(const finite_poset& from, const finite_poset& to,
                               const std::map<std::string, std::string>& f, bool reduced);

}
