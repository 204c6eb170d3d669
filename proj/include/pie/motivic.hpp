#pragma once

#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "pie/lpoly.hpp"

namespace pie {

// Multiset of affine cell dimensions; the class is the sum of L^a.
struct cellular_variety {
    std::vector<int> cells;  // sorted, nonempty, entries >= 0

    int dim() const;
    lpoly class_of() const;
};

cellular_variety variety_from_json(const nlohmann::json& j);
nlohmann::json variety_to_json(const cellular_variety& x);

// Power series in t with Laurent-polynomial coefficients; indices 0..trunc
// are valid, everything above is unknown. Ring ops keep the tightest valid
// truncation of their inputs.
struct mot_series {
    std::vector<lpoly> coeff;  // size trunc + 1
    int trunc = -1;

    static mot_series one(int trunc);
    const lpoly& at(int k) const;

    bool operator==(const mot_series& o) const {
        return trunc == o.trunc && coeff == o.coeff;
    }
};

mot_series operator+(const mot_series& a, const mot_series& b);
mot_series operator*(const mot_series& a, const mot_series& b);

// Drop coefficients above new_trunc; cannot extend.
mot_series truncate(const mot_series& s, int new_trunc);

// t -> L^e t
mot_series scale_t(const mot_series& s, int e);

// t -> t^m for m >= 1; the result is valid up to m*(trunc+1)-1
mot_series substitute_power(const mot_series& s, int m);

// Multiplicative inverse; the constant term must be 1.
mot_series invert(const mot_series& s);

// Product over cells of (1 - L^a t)^{-1}, truncated at N.
mot_series kapranov_zeta(const cellular_variety& x, int N);

// Z(t) / Z(t^2). The identity is validated against point counts downstream,
// not asserted abstractly; reports label it accordingly.
mot_series config_gf(const cellular_variety& x, int N);

// Signed sum over the compositions (a_0..a_p) of k of
// (-1)^{p+1} * prod_i [S^{a_i} X]; matches the series inverse coefficient.
lpoly mu_terms_gamma(const cellular_variety& x, int k);

struct truncation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct stable_limit_t {
    lpoly series;   // exponent = power of L^{-1}
    int trunc = 0;  // powers above this are not determined
};

// invert(kapranov_zeta) evaluated at t = L^{-n}, collected by powers of
// L^{-1} up to trunc. Needs n > dim X so that only finitely many degrees
// reach any given power; otherwise truncation_error.
stable_limit_t stable_limit(const cellular_variety& x, int n, int trunc);

nlohmann::json series_to_json(const mot_series& s);

}
