#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "pie/numbers.hpp"
#include "pie/poset.hpp"

namespace pie {

// Comparable-pair table of a poset with memoized closed intervals; incidence
// elements index into one shared context.
class incidence_context {
public:
    explicit incidence_context(finite_poset poset);

    const finite_poset& poset() const { return p_; }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    // elements x with a <= x <= b, in index order
    const std::vector<int>& between(int pair) const { return between_[pair]; }
    int pair_index(int a, int b) const;  // -1 when incomparable
    // pair indices sorted by closed-interval size, then lexicographically
    const std::vector<int>& by_interval_size() const { return by_size_; }

private:
    finite_poset p_;
    std::vector<std::pair<int, int>> pairs_;
    std::map<std::pair<int, int>, int> index_;
    std::vector<std::vector<int>> between_;
    std::vector<int> by_size_;
};

// Function on the comparable pairs of the context, with values in a
// commutative coefficient ring.
template <class R>
struct incidence_element {
    const incidence_context* ctx = nullptr;
    std::vector<R> value;

    const R& at(int a, int b) const {
        const int i = ctx->pair_index(a, b);
        if (i < 0) throw std::invalid_argument("incidence element: incomparable pair");
        return value[i];
    }
    bool operator==(const incidence_element& o) const { return ctx == o.ctx && value == o.value; }
};

template <class R>
incidence_element<R> delta_element(const incidence_context& ctx) {
    incidence_element<R> e{&ctx, {}};
    for (const auto& [a, b] : ctx.pairs()) e.value.push_back(a == b ? R(1) : R(0));
    return e;
}

template <class R>
incidence_element<R> zeta_element(const incidence_context& ctx) {
    incidence_element<R> e{&ctx, {}};
    e.value.assign(ctx.pairs().size(), R(1));
    return e;
}

template <class R>
incidence_element<R> convolve(const incidence_element<R>& f, const incidence_element<R>& g) {
    if (f.ctx != g.ctx) throw std::invalid_argument("convolve: elements live on different posets");
    const incidence_context& ctx = *f.ctx;
    incidence_element<R> out{&ctx, std::vector<R>(ctx.pairs().size(), R(0))};
    for (size_t i = 0; i < ctx.pairs().size(); ++i) {
        const auto [a, b] = ctx.pairs()[i];
        R s(0);
        for (int x : ctx.between(static_cast<int>(i))) s += f.at(a, x) * g.at(x, b);
        out.value[i] = s;
    }
    return out;
}

// mu(a,a) = 1 and mu(a,b) = -sum_{a <= x < b} mu(a,x), filled in increasing
// interval-size order.
template <class R>
incidence_element<R> mobius_by_inversion(const incidence_context& ctx) {
    incidence_element<R> mu{&ctx, std::vector<R>(ctx.pairs().size(), R(0))};
    for (int i : ctx.by_interval_size()) {
        const auto [a, b] = ctx.pairs()[i];
        if (a == b) {
            mu.value[i] = R(1);
            continue;
        }
        R s(0);
        for (int x : ctx.between(i))
            if (x != b) s += mu.at(a, x);
        mu.value[i] = R(0) - s;
    }
    return mu;
}

// mu(a,b) = reduced alternating chain count of the open interval (a,b).
incidence_element<bigint> mobius_topological(const incidence_context& ctx);

// Two-sided convolution inverse of f; requires f = 1 on the diagonal.
template <class R>
incidence_element<R> convolution_inverse(const incidence_element<R>& f) {
    const incidence_context& ctx = *f.ctx;
    for (size_t i = 0; i < ctx.pairs().size(); ++i)
        if (ctx.pairs()[i].first == ctx.pairs()[i].second && !(f.value[i] == R(1)))
            throw std::invalid_argument("convolution_inverse: diagonal must be 1");
    incidence_element<R> g{&ctx, std::vector<R>(ctx.pairs().size(), R(0))};
    for (int i : ctx.by_interval_size()) {
        const auto [a, b] = ctx.pairs()[i];
        if (a == b) {
            g.value[i] = R(1);
            continue;
        }
        R s(0);
        for (int x : ctx.between(i))
            if (x != a) s += f.at(a, x) * g.at(x, b);
        g.value[i] = R(0) - s;
    }
    return g;
}

}
