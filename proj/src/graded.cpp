#include "pie/graded.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>

namespace pie {

namespace {

using table_t = std::map<std::pair<int, int>, long long>;  // signed scratch tables

void add_into(table_t& dst, const table_t& src, int dd, int dw, long long scale) {
    for (const auto& [key, n] : src) {
        auto& slot = dst[{key.first + dd, key.second + dw}];
        slot += n * scale;
        if (slot == 0) dst.erase({key.first + dd, key.second + dw});
    }
}

table_t convolve_tables(const table_t& a, const table_t& b) {
    table_t out;
    for (const auto& [ka, na] : a) add_into(out, b, ka.first, ka.second, na);
    return out;
}

// lines of the even or odd part, one entry per dimension
std::vector<std::pair<int, int>> lines_of(const graded_weighted_space& v, bool odd) {
    std::vector<std::pair<int, int>> out;
    for (const auto& [key, n] : v.entries())
        if ((std::abs(key.first) % 2 == 1) == odd)
            for (long long i = 0; i < n; ++i) out.push_back(key);
    return out;
}

// dp[j] = table of j-element selections; distinct = exterior, else symmetric
std::vector<table_t> power_dp(const std::vector<std::pair<int, int>>& lines, int top,
                              bool distinct) {
    std::vector<table_t> dp(top + 1);
    dp[0][{0, 0}] = 1;
    for (const auto& [d, w] : lines) {
        if (distinct) {
            for (int j = top; j >= 1; --j) add_into(dp[j], dp[j - 1], d, w, 1);
        } else {
            for (int j = 1; j <= top; ++j) add_into(dp[j], dp[j - 1], d, w, 1);
        }
    }
    return dp;
}

graded_weighted_space from_table(const table_t& t) {
    graded_weighted_space v;
    for (const auto& [key, n] : t) {
        if (n < 0) throw std::logic_error("graded power produced a negative dimension");
        v.set(key.first, key.second, n);
    }
    return v;
}

graded_weighted_space graded_power(const graded_weighted_space& v, int p, bool ext_on_even) {
    if (p < 0) throw std::invalid_argument("graded power: negative exponent");
    auto even = lines_of(v, false);
    auto odd = lines_of(v, true);
    auto dist = power_dp(ext_on_even ? even : odd, p, true);
    auto rep = power_dp(ext_on_even ? odd : even, p, false);
    table_t total;
    for (int r = 0; r <= p; ++r) add_into(total, convolve_tables(dist[r], rep[p - r]), 0, 0, 1);
    return from_table(total);
}

}  // namespace

graded_weighted_space graded_weighted_space::unit() {
    graded_weighted_space v;
    v.set(0, 0, 1);
    return v;
}

void graded_weighted_space::set(int degree, int weight, long long dim) {
    if (dim < 0) throw std::invalid_argument("graded_weighted_space: negative dimension");
    if (dim == 0)
        d_.erase({degree, weight});
    else
        d_[{degree, weight}] = dim;
}

long long graded_weighted_space::dim(int degree, int weight) const {
    auto it = d_.find({degree, weight});
    return it == d_.end() ? 0 : it->second;
}

long long graded_weighted_space::total_dim() const {
    long long t = 0;
    for (const auto& [key, n] : d_) t += n;
    return t;
}

bool graded_weighted_space::pure() const {
    for (const auto& [key, n] : d_)
        if (key.first != key.second) return false;
    return true;
}

int graded_weighted_space::max_degree() const {
    int m = 0;
    for (const auto& [key, n] : d_) m = std::max(m, key.first);
    return m;
}

int graded_weighted_space::min_degree() const {
    int m = 0;
    for (const auto& [key, n] : d_) m = std::min(m, key.first);
    return m;
}

graded_weighted_space table_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("dims") || !j["dims"].is_object())
        throw std::invalid_argument("table_from_json: need {\"dims\":{...}}");
    bool pure = j.value("pure", false);
    graded_weighted_space v;
    for (const auto& [key, val] : j["dims"].items()) {
        long long n = val.get<long long>();
        if (pure) {
            int d = std::stoi(key);
            v.set(d, d, n);
        } else {
            auto comma = key.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("table_from_json: keys are \"degree,weight\"");
            v.set(std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1)), n);
        }
    }
    return v;
}

nlohmann::json table_to_json(const graded_weighted_space& v) {
    nlohmann::json dims = nlohmann::json::object();
    if (v.pure()) {
        for (const auto& [key, n] : v.entries()) dims[std::to_string(key.first)] = n;
        return {{"pure", true}, {"dims", dims}};
    }
    for (const auto& [key, n] : v.entries())
        dims[std::to_string(key.first) + "," + std::to_string(key.second)] = n;
    return {{"pure", false}, {"dims", dims}};
}

graded_weighted_space lambda_gr(const graded_weighted_space& v, int p) {
    return graded_power(v, p, true);
}

graded_weighted_space sym_gr(const graded_weighted_space& v, int p) {
    return graded_power(v, p, false);
}

bool koszul_inverse_check(const graded_weighted_space& v, int N) {
    if (N < 1) throw std::invalid_argument("koszul_inverse_check: N must be >= 1");
    auto even = lines_of(v, false);
    auto odd = lines_of(v, true);
    auto ext_even = power_dp(even, N, true);
    auto sym_odd = power_dp(odd, N, false);
    auto ext_odd = power_dp(odd, N, true);
    auto sym_even = power_dp(even, N, false);
    std::vector<table_t> sym(N + 1), ext(N + 1);
    for (int k = 0; k <= N; ++k)
        for (int r = 0; r <= k; ++r) {
            add_into(sym[k], convolve_tables(sym_even[r], ext_odd[k - r]), 0, 0, 1);
            add_into(ext[k], convolve_tables(ext_even[r], sym_odd[k - r]), 0, 0,
                     k % 2 == 0 ? 1 : -1);
        }
    for (int m = 0; m <= N; ++m) {
        table_t coeff;
        for (int j = 0; j <= m; ++j) add_into(coeff, convolve_tables(sym[j], ext[m - j]), 0, 0, 1);
        if (m == 0) {
            if (coeff != table_t{{{0, 0}, 1}}) return false;
        } else if (!coeff.empty()) {
            return false;
        }
    }
    return true;
}

std::map<int, graded_weighted_space> special_value(const graded_weighted_space& v, int dim_x,
                                                   int n, int k_max) {
    if (!v.pure()) throw std::invalid_argument("special_value: input must be pure");
    if (n < 1) throw std::invalid_argument("special_value: n must be >= 1");
    if (k_max < 0) throw std::invalid_argument("special_value: negative k_max");
    if (v.max_degree() > 2 * dim_x || v.min_degree() < 0)
        throw std::invalid_argument("special_value: degrees exceed the variety dimension");
    std::map<int, graded_weighted_space> out;
    for (int k = 0; k <= k_max; ++k) {
        graded_weighted_space shifted;
        graded_weighted_space lam = lambda_gr(v, k);
        for (const auto& [key, c] : lam.entries())
            shifted.set(key.first + k - 2 * n * k, key.second - 2 * n * k, c);
        out[k] = shifted;
    }
    return out;
}

lpoly special_value_euler(const std::map<int, graded_weighted_space>& sv) {
    lpoly chi;
    for (const auto& [k, tab] : sv)
        for (const auto& [key, n] : tab.entries()) {
            if (key.second % 2 != 0)
                throw std::invalid_argument("special_value_euler: odd weight");
            int sign = key.first % 2 == 0 ? 1 : -1;
            chi += lpoly::monomial(-key.second / 2, bigint(sign * n));
        }
    return chi;
}

stable_homology_result stable_homology_table(const graded_weighted_space& v, int dim_x,
                                             int k_max) {
    if (!v.pure()) throw std::invalid_argument("stable_homology_table: input must be pure");
    if (k_max < 0) throw std::invalid_argument("stable_homology_table: negative k_max");
    if (v.max_degree() > 2 * dim_x || v.min_degree() < 0)
        throw std::invalid_argument("stable_homology_table: degrees exceed the variety dimension");
    stable_homology_result out;
    out.k_max = k_max;
    for (int k = 0; k <= k_max; ++k) {
        graded_weighted_space lam = lambda_gr(v, k);
        for (const auto& [key, n] : lam.entries()) out.table[{k + key.first, k}] += n;
    }
    for (const auto& [key, n] : out.table) out.poincare += lpoly::monomial(key.first, bigint(n));
    return out;
}

lpoly stable_euler_v(const stable_homology_result& t) {
    lpoly chi;
    for (const auto& [key, n] : t.table) {
        int sign = key.first % 2 == 0 ? 1 : -1;
        chi += lpoly::monomial(key.first + key.second, bigint(sign * n));
    }
    return chi;
}

graded_complex_result banerjee_complex_graded(const graded_weighted_space& v, int p_max) {
    if (p_max < 0) throw std::invalid_argument("banerjee_complex_graded: negative p_max");
    auto even = lines_of(v, false);
    auto odd = lines_of(v, true);
    auto unit_it = std::find(even.begin(), even.end(), std::pair<int, int>{0, 0});
    if (unit_it == even.end())
        throw std::invalid_argument("banerjee_complex_graded: no unit line at (0,0)");
    std::rotate(even.begin(), unit_it, unit_it + 1);

    // monomial = (set of even line indices, multiset of odd line indices)
    using monomial = std::pair<std::vector<int>, std::vector<int>>;
    auto enumerate = [&](int size) {
        std::vector<monomial> out;
        std::vector<std::vector<std::vector<int>>> subsets(size + 1), multis(size + 1);
        for (int r = 0; r <= size; ++r) {
            std::vector<int> cur;
            std::function<void(int, int)> subs = [&](int lo, int left) {
                if (left == 0) {
                    subsets[r].push_back(cur);
                    return;
                }
                for (int i = lo; i + left <= static_cast<int>(even.size()); ++i) {
                    cur.push_back(i);
                    subs(i + 1, left - 1);
                    cur.pop_back();
                }
            };
            subs(0, r);
            std::function<void(int, int)> mult = [&](int lo, int left) {
                if (left == 0) {
                    multis[r].push_back(cur);
                    return;
                }
                for (int i = lo; i < static_cast<int>(odd.size()); ++i) {
                    cur.push_back(i);
                    mult(i, left - 1);
                    cur.pop_back();
                }
            };
            mult(0, r);
        }
        for (int r = 0; r <= size; ++r)
            for (const auto& s : subsets[r])
                for (const auto& m : multis[size - r]) out.emplace_back(s, m);
        return out;
    };

    graded_complex_result res;
    std::vector<std::vector<monomial>> basis;
    std::vector<std::map<monomial, int>> index;
    for (int p = 0; p <= p_max; ++p) {
        res.terms.push_back(lambda_gr(v, p + 1));
        basis.push_back(enumerate(p + 1));
        res.dims.push_back(static_cast<long long>(basis.back().size()));
        if (res.terms.back().total_dim() != res.dims.back())
            throw std::logic_error("banerjee_complex_graded: basis and table disagree");
        std::map<monomial, int> idx;
        for (int i = 0; i < static_cast<int>(basis.back().size()); ++i) idx[basis.back()[i]] = i;
        index.push_back(std::move(idx));
    }

    res.d.emplace_back(static_cast<int>(res.dims[0]), 0);
    for (int p = 1; p <= p_max; ++p) {
        qmatrix m(static_cast<int>(res.dims[p]), static_cast<int>(res.dims[p - 1]));
        for (int c = 0; c < static_cast<int>(basis[p - 1].size()); ++c) {
            const auto& mono = basis[p - 1][c];
            // the unit is even line 0; wedging it in front costs no sign
            if (!mono.first.empty() && mono.first.front() == 0) continue;
            monomial img = mono;
            img.first.insert(img.first.begin(), 0);
            m.at(index[p].at(img), c) = 1;
        }
        res.d.push_back(std::move(m));
    }

    res.d_squared_zero = true;
    for (int p = 1; p + 1 <= p_max; ++p)
        if (!(res.d[p + 1] * res.d[p]).is_zero()) res.d_squared_zero = false;

    long long chi_dims = 0, chi_h = 0;
    for (int p = 0; p <= p_max; ++p) {
        long long in = p >= 1 ? rank(res.d[p]) : 0;
        long long out = p + 1 <= p_max ? rank(res.d[p + 1]) : 0;
        res.homology.push_back(res.dims[p] - in - out);
        chi_dims += (p % 2 == 0 ? 1 : -1) * res.dims[p];
        chi_h += (p % 2 == 0 ? 1 : -1) * res.homology.back();
    }
    res.euler_consistent = chi_dims == chi_h;
    return res;
}

}
