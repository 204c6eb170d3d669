#pragma once

#include <map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pie/lpoly.hpp"
#include "pie/qmatrix.hpp"

namespace pie {

// Finite table of dimensions indexed by (degree, weight).
class graded_weighted_space {
public:
    graded_weighted_space() = default;

    static graded_weighted_space unit();  // one line at (0,0)

    void set(int degree, int weight, long long dim);
    long long dim(int degree, int weight) const;
    const std::map<std::pair<int, int>, long long>& entries() const { return d_; }

    long long total_dim() const;
    bool pure() const;  // weight equals degree on the support
    int max_degree() const;
    int min_degree() const;

    bool operator==(const graded_weighted_space& o) const { return d_ == o.d_; }

private:
    std::map<std::pair<int, int>, long long> d_;
};

// {"pure":true,"dims":{"0":1,"2":1}} infers weight = degree; otherwise dims
// keys are "degree,weight".
graded_weighted_space table_from_json(const nlohmann::json& j);
nlohmann::json table_to_json(const graded_weighted_space& v);

// Graded exterior power: exterior on even degrees, symmetric on odd degrees,
// summed over splittings; degrees and weights add.
graded_weighted_space lambda_gr(const graded_weighted_space& v, int p);

// Graded symmetric power: the mirror rule.
graded_weighted_space sym_gr(const graded_weighted_space& v, int p);

// (sum_k sym_gr t^k) * (sum_k (-1)^k lambda_gr t^k) = 1 through degree N,
// computed on signed tables.
bool koszul_inverse_check(const graded_weighted_space& v, int N);

// Per k: lambda_gr(V,k) shifted by +k in degree, then degree and weight both
// lowered by 2nk. Input must be pure.
std::map<int, graded_weighted_space> special_value(const graded_weighted_space& v, int dim_x,
                                                   int n, int k_max);

// Alternating sum over all entries with u-power = -weight/2; weights must be
// even. Matches the motivic stable limit under L -> q.
lpoly special_value_euler(const std::map<int, graded_weighted_space>& sv);

struct stable_homology_result {
    // (homological degree i, rank index k) -> dimension; the honest weight of
    // an entry is -(i+k)
    std::map<std::pair<int, int>, long long> table;
    lpoly poincare;  // sum over i of total dimension times t^i
    int k_max = 0;
};

// Row k collects the dual of lambda_gr(V,k) placed at i = k + degree.
stable_homology_result stable_homology_table(const graded_weighted_space& v, int dim_x,
                                             int k_max);

// Alternating sum with v-power i + k (v = formal square root of q).
lpoly stable_euler_v(const stable_homology_result& t);

struct graded_complex_result {
    std::vector<graded_weighted_space> terms;  // term p = lambda_gr(V, p+1)
    std::vector<long long> dims;
    std::vector<qmatrix> d;  // d[p] maps term p-1 into term p; d[0] has no columns
    std::vector<long long> homology;
    bool d_squared_zero = false;
    bool euler_consistent = false;  // alternating dims equal alternating homology
};

// Wedge-with-the-unit-class differential on graded exterior powers. The input
// needs a line at (0,0) to serve as the unit.
graded_complex_result banerjee_complex_graded(const graded_weighted_space& v, int p_max);

}
