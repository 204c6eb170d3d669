#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace pie {

using bigint = boost::multiprecision::cpp_int;
using rat = boost::multiprecision::cpp_rational;

// Enumeration budget exceeded; callers map this to a dedicated exit code.
struct cost_guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bigint numerator(const rat& q) { return boost::multiprecision::numerator(q); }
inline bigint denominator(const rat& q) { return boost::multiprecision::denominator(q); }

inline bigint binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    bigint r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// Number of multisets of size k drawn from n symbols.
inline bigint multichoose(long long n, long long k) {
    if (k == 0) return 1;
    return binomial(n + k - 1, k);
}

inline bigint pow_bigint(const bigint& b, long long e) {
    if (e < 0) throw std::invalid_argument("pow_bigint: negative exponent");
    bigint r = 1, p = b;
    while (e > 0) {
        if (e & 1) r *= p;
        p *= p;
        e >>= 1;
    }
    return r;
}

inline std::string str(const bigint& v) { return v.str(); }
inline std::string str(const rat& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

}
