#pragma once

#include <vector>

#include "pie/numbers.hpp"

namespace pie {

bool is_prime(long long q);

// Monic polynomials of degree d over F_q with no repeated factor. gcd(f, 0)
// is f, so a vanishing derivative (p-th powers) counts as not squarefree.
long long count_squarefree_monic(long long q, int d);

// Tuples (f_1..f_m), f_i monic of degree parts[i], with squarefree product.
long long count_colored_configs(long long q, const std::vector<int>& parts);

// Same on the projective line: tuples of reduced effective divisors with
// disjoint supports, counted via normalized binary forms; at most one simple
// zero at infinity across the whole tuple.
long long count_colored_configs_p1(long long q, const std::vector<int>& parts);

// All effective degree-k divisors, counted one by one.
long long count_divisors_a1(long long q, int k);
long long count_divisors_p1(long long q, int k);

// Nonzero degree-d binary forms whose zero locus is reduced, the point at
// infinity included.
long long count_smooth_sections_p1(long long q, int d);

struct vw_report {
    long long q = 0;
    int N = 0;
    std::vector<long long> counted;      // 1 + signed colored-config sums per degree
    std::vector<long long> specialized;  // series inverse of the zeta of A^1 at L = q
    bool pass = false;
};

// Coefficient-wise comparison of the two inversion routes through degree N.
vw_report vw_inversion_check(long long q, int N);

struct ie_report {
    long long q = 0;
    int d = 0;
    int k = 0;
    long long truncated_sum = 0;  // strata with total multiplicity <= k
    long long exact = 0;          // q^{d+1} minus the smooth count; zero form included
    long long residual = 0;
};

// Truncated inclusion-exclusion count of the degree-d discriminant in the
// bundle-rank regime d >= 2k+1.
ie_report truncated_ie_discriminant(long long q, int d, int k);

struct density_row {
    int d = 0;
    long long smooth = 0;
    rat density;
};

struct density_result {
    long long q = 0;
    std::vector<density_row> rows;  // d = 1..d_max
    rat limit;                      // (1 - 1/q)(1 - 1/q^2)
    int first_exact_d = -1;         // smallest d with density == limit, -1 if absent
};

density_result density_report(long long q, int d_max);

}
