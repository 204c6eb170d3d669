#include "pie/ffield.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "pie/motivic.hpp"

namespace pie {

namespace {

constexpr long long kGuard = 100'000'000;

void require_prime(long long q) {
    if (!is_prime(q)) throw std::invalid_argument("q must be a prime");
}

// q^e, refusing budgets beyond the enumeration guard
long long checked_pow(long long q, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) {
        r *= q;
        if (r > kGuard)
            throw cost_guard_error("enumeration budget exceeded: " + std::to_string(q) + "^" +
                                   std::to_string(e));
    }
    return r;
}

// dense residues, low to high, no trailing zeros; the zero poly is empty
using fq_poly = std::vector<int>;

void trim(fq_poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const fq_poly& f) { return static_cast<int>(f.size()) - 1; }

int inv_mod(int a, long long q) {
    for (long long i = 1; i < q; ++i)
        if (a * i % q == 1) return static_cast<int>(i);
    throw std::logic_error("not invertible");
}

fq_poly multiply(const fq_poly& a, const fq_poly& b, long long q) {
    if (a.empty() || b.empty()) return {};
    fq_poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = static_cast<int>((out[i + j] + static_cast<long long>(a[i]) * b[j]) % q);
    trim(out);
    return out;
}

fq_poly remainder(fq_poly a, const fq_poly& b, long long q) {
    int lead_inv = inv_mod(b.back(), q);
    while (degree(a) >= degree(b)) {
        int shift = degree(a) - degree(b);
        int c = static_cast<int>(static_cast<long long>(a.back()) * lead_inv % q);
        for (std::size_t i = 0; i < b.size(); ++i) {
            long long v = a[i + shift] - static_cast<long long>(c) * b[i];
            a[i + shift] = static_cast<int>(((v % q) + q) % q);
        }
        trim(a);
    }
    return a;
}

fq_poly poly_gcd(fq_poly a, fq_poly b, long long q) {
    while (!b.empty()) {
        fq_poly r = remainder(a, b, q);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

fq_poly derivative(const fq_poly& f, long long q) {
    fq_poly out;
    for (std::size_t i = 1; i < f.size(); ++i)
        out.push_back(static_cast<int>(static_cast<long long>(i % q) * f[i] % q));
    trim(out);
    return out;
}

bool is_squarefree(const fq_poly& f, long long q) {
    if (f.empty()) return false;
    if (degree(f) == 0) return true;
    return degree(poly_gcd(f, derivative(f, q), q)) == 0;
}

// odometer over residue vectors, lexicographic in the coefficient order
bool next_vector(std::vector<int>& v, long long q) {
    for (auto& digit : v) {
        if (++digit < q) return true;
        digit = 0;
    }
    return false;
}

fq_poly monic_from(const std::vector<int>& free_coeffs, int lo, int d) {
    fq_poly f(free_coeffs.begin() + lo, free_coeffs.begin() + lo + d);
    f.push_back(1);
    return f;
}

// all compositions (parts >= 1) of every total in [1, max_total]
std::vector<std::vector<int>> compositions_upto_total(int max_total) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> emit = [&](int left) {
        if (!cur.empty()) out.push_back(cur);
        for (int a = 1; a <= left; ++a) {
            cur.push_back(a);
            emit(left - a);
            cur.pop_back();
        }
    };
    emit(max_total);
    return out;
}

long long smooth_sections_p1_impl(long long q, int d) {
    std::vector<int> c(d + 1, 0);
    long long count = 0;
    while (next_vector(c, q)) {
        int m = d;
        while (m >= 0 && c[m] == 0) --m;
        if (d - m > 1) continue;
        fq_poly f(c.begin(), c.begin() + m + 1);
        if (is_squarefree(f, q)) ++count;
    }
    return count;
}

}  // namespace

bool is_prime(long long q) {
    if (q < 2) return false;
    for (long long p = 2; p * p <= q; ++p)
        if (q % p == 0) return false;
    return true;
}

long long count_squarefree_monic(long long q, int d) {
    require_prime(q);
    if (d < 0) throw std::invalid_argument("degree must be >= 0");
    checked_pow(q, d);
    std::vector<int> c(d, 0);
    long long count = 0;
    do {
        if (is_squarefree(monic_from(c, 0, d), q)) ++count;
    } while (next_vector(c, q));
    return count;
}

long long count_colored_configs(long long q, const std::vector<int>& parts) {
    require_prime(q);
    if (parts.empty()) throw std::invalid_argument("empty composition");
    for (int a : parts)
        if (a < 1) throw std::invalid_argument("composition parts must be >= 1");
    int total = std::accumulate(parts.begin(), parts.end(), 0);
    checked_pow(q, total);
    std::vector<int> c(total, 0);
    long long count = 0;
    do {
        fq_poly prod{1};
        int lo = 0;
        for (int a : parts) {
            prod = multiply(prod, monic_from(c, lo, a), q);
            lo += a;
        }
        if (is_squarefree(prod, q)) ++count;
    } while (next_vector(c, q));
    return count;
}

long long count_colored_configs_p1(long long q, const std::vector<int>& parts) {
    require_prime(q);
    if (parts.empty()) throw std::invalid_argument("empty composition");
    for (int a : parts)
        if (a < 1) throw std::invalid_argument("composition parts must be >= 1");
    int total = std::accumulate(parts.begin(), parts.end(), 0);
    checked_pow(q, total);
    int m = static_cast<int>(parts.size());
    long long count = 0;
    // at_infinity = which divisor carries the simple zero at infinity, if any
    for (int at_infinity = -1; at_infinity < m; ++at_infinity) {
        std::vector<int> affine_deg(parts.begin(), parts.end());
        if (at_infinity >= 0) --affine_deg[at_infinity];
        int free_total = std::accumulate(affine_deg.begin(), affine_deg.end(), 0);
        std::vector<int> c(free_total, 0);
        do {
            fq_poly prod{1};
            int lo = 0;
            for (int a : affine_deg) {
                prod = multiply(prod, monic_from(c, lo, a), q);
                lo += a;
            }
            if (is_squarefree(prod, q)) ++count;
        } while (next_vector(c, q));
    }
    return count;
}

long long count_divisors_a1(long long q, int k) {
    require_prime(q);
    if (k < 0) throw std::invalid_argument("degree must be >= 0");
    checked_pow(q, k);
    std::vector<int> c(k, 0);
    long long count = 0;
    do {
        ++count;
    } while (next_vector(c, q));
    return count;
}

long long count_divisors_p1(long long q, int k) {
    require_prime(q);
    if (k < 0) throw std::invalid_argument("degree must be >= 0");
    checked_pow(q, k);
    long long count = 0;
    for (int m = 0; m <= k; ++m) {
        std::vector<int> c(m, 0);
        do {
            ++count;
        } while (next_vector(c, q));
    }
    return count;
}

long long count_smooth_sections_p1(long long q, int d) {
    require_prime(q);
    if (d < 1) throw std::invalid_argument("degree must be >= 1");
    checked_pow(q, d + 1);
    return smooth_sections_p1_impl(q, d);
}

vw_report vw_inversion_check(long long q, int N) {
    require_prime(q);
    if (N < 0) throw std::invalid_argument("N must be >= 0");
    if (N > 6) throw cost_guard_error("vw_inversion_check is limited to N <= 6");
    vw_report r;
    r.q = q;
    r.N = N;
    r.counted.assign(N + 1, 0);
    r.counted[0] = 1;
    for (const auto& parts : compositions_upto_total(N)) {
        int total = std::accumulate(parts.begin(), parts.end(), 0);
        long long sign = parts.size() % 2 == 0 ? 1 : -1;
        r.counted[total] += sign * count_colored_configs(q, parts);
    }
    mot_series inv = invert(kapranov_zeta(cellular_variety{{1}}, N));
    for (int k = 0; k <= N; ++k)
        r.specialized.push_back(inv.at(k).eval_int(bigint(q)).convert_to<long long>());
    r.pass = r.counted == r.specialized;
    return r;
}

ie_report truncated_ie_discriminant(long long q, int d, int k) {
    require_prime(q);
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    if (d < 2 * k + 1) throw std::invalid_argument("need d >= 2k+1");
    long long sections = checked_pow(q, d + 1);
    ie_report r;
    r.q = q;
    r.d = d;
    r.k = k;
    r.exact = sections - smooth_sections_p1_impl(q, d);
    for (const auto& parts : compositions_upto_total(k)) {
        int total = std::accumulate(parts.begin(), parts.end(), 0);
        long long sign = parts.size() % 2 == 1 ? 1 : -1;
        r.truncated_sum +=
            sign * count_colored_configs_p1(q, parts) * checked_pow(q, d + 1 - 2 * total);
    }
    r.residual = r.exact - r.truncated_sum;
    return r;
}

density_result density_report(long long q, int d_max) {
    require_prime(q);
    if (d_max < 1) throw std::invalid_argument("d_max must be >= 1");
    checked_pow(q, d_max + 1);
    density_result out;
    out.q = q;
    out.limit = rat(q - 1, q) * rat(q * q - 1, q * q);
    for (int d = 1; d <= d_max; ++d) {
        density_row row;
        row.d = d;
        row.smooth = smooth_sections_p1_impl(q, d);
        row.density = rat(row.smooth, checked_pow(q, d + 1));
        if (out.first_exact_d < 0 && row.density == out.limit) out.first_exact_d = d;
        out.rows.push_back(row);
    }
    return out;
}

}
