#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "pie/numbers.hpp"

namespace pie {

// Laurent polynomial in one formal symbol with arbitrary-precision integer
// coefficients; zero coefficients are never stored.
class lpoly {
public:
    lpoly() = default;
    lpoly(long long n) { set(0, bigint(n)); }
    explicit lpoly(const bigint& n) { set(0, n); }

    static lpoly monomial(int exp, bigint coeff = bigint(1)) {
        lpoly p;
        p.set(exp, std::move(coeff));
        return p;
    }

    const std::map<int, bigint>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bigint coeff(int exp) const {
        auto it = c_.find(exp);
        return it == c_.end() ? bigint(0) : it->second;
    }
    int min_exp() const;
    int max_exp() const;

    lpoly& operator+=(const lpoly& o);
    lpoly& operator-=(const lpoly& o);
    friend lpoly operator+(lpoly a, const lpoly& b) { return a += b; }
    friend lpoly operator-(lpoly a, const lpoly& b) { return a -= b; }
    friend lpoly operator*(const lpoly& a, const lpoly& b);
    lpoly operator-() const;
    bool operator==(const lpoly& o) const { return c_ == o.c_; }

    bigint eval_int(const bigint& q) const;  // needs min_exp >= 0
    rat eval_rat(const rat& q) const;        // any exponents, q != 0

    std::string str() const;
    nlohmann::json to_json() const;  // {"exp": "coeff", ...}
    static lpoly from_json(const nlohmann::json& j);

private:
    std::map<int, bigint> c_;
    void set(int exp, bigint v) {
        if (v == 0)
            c_.erase(exp);
        else
            c_[exp] = std::move(v);
    }
};

}
