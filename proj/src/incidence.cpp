#include "pie/incidence.hpp"

namespace pie {

incidence_context::incidence_context(finite_poset poset) : p_(std::move(poset)) {
    for (int a = 0; a < p_.size(); ++a)
        for (int b = 0; b < p_.size(); ++b)
            if (p_.leq(a, b)) {
                index_[{a, b}] = static_cast<int>(pairs_.size());
                pairs_.emplace_back(a, b);
                between_.emplace_back();
                for (int x = 0; x < p_.size(); ++x)
                    if (p_.leq(a, x) && p_.leq(x, b)) between_.back().push_back(x);
            }
    by_size_.resize(pairs_.size());
    for (size_t i = 0; i < pairs_.size(); ++i) by_size_[i] = static_cast<int>(i);
    std::sort(by_size_.begin(), by_size_.end(), [&](int i, int j) {
        if (between_[i].size() != between_[j].size()) return between_[i].size() < between_[j].size();
        return pairs_[i] < pairs_[j];
    });
}

int incidence_context::pair_index(int a, int b) const {
    auto it = index_.find({a, b});
    return it == index_.end() ? -1 : it->second;
}

incidence_element<bigint> mobius_topological(const incidence_context& ctx) {
    incidence_element<bigint> mu{&ctx, std::vector<bigint>(ctx.pairs().size(), bigint(0))};
    for (size_t i = 0; i < ctx.pairs().size(); ++i) {
        const auto [a, b] = ctx.pairs()[i];
        if (a == b) {
            mu.value[i] = 1;
            continue;
        }
        std::vector<int> open;
        for (int x : ctx.between(static_cast<int>(i)))
            if (x != a && x != b) open.push_back(x);
        mu.value[i] = chi_reduced_of_subset(ctx.poset(), open);
    }
    return mu;
}

}
