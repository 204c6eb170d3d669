#include "pie/poset.hpp"

#include <algorithm>
#include <stdexcept>

namespace pie {

namespace {

bool reserved_id(const std::string& s) { return s.size() >= 2 && s[0] == '_' && s[1] == '_'; }

}

finite_poset::finite_poset(std::vector<std::string> elements,
                           const std::vector<std::pair<std::string, std::string>>& leq_pairs,
                           std::map<std::string, long long> rank,
                           std::map<std::string, std::string> base, bool allow_reserved_ids) {
    std::sort(elements.begin(), elements.end());
    if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
        throw std::invalid_argument("poset: duplicate element id");
    if (static_cast<int>(elements.size()) > max_elements)
        throw std::invalid_argument("poset: more than 512 elements");
    for (const auto& id : elements) {
        if (id.empty()) throw std::invalid_argument("poset: empty element id");
        if (!allow_reserved_ids && reserved_id(id))
            throw std::invalid_argument("poset: id prefix __ is reserved: " + id);
    }
    ids_ = std::move(elements);
    for (int i = 0; i < size(); ++i) index_[ids_[i]] = i;

    rel_.assign(ids_.size(), row{});
    for (int i = 0; i < size(); ++i) rel_[i][i] = true;
    for (const auto& [a, b] : leq_pairs) {
        const int ia = index_of(a), ib = index_of(b);
        if (ia < 0 || ib < 0) throw std::invalid_argument("poset: relation on unknown id");
        rel_[ia][ib] = true;
    }

    // transitive closure by repeated squaring
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < size(); ++i) {
            row acc = rel_[i];
            for (int j = 0; j < size(); ++j)
                if (rel_[i][j]) acc |= rel_[j];
            if (acc != rel_[i]) {
                rel_[i] = acc;
                changed = true;
            }
        }
    }

    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (rel_[i][j] && rel_[j][i])
                throw std::invalid_argument("poset: antisymmetry violated by " + ids_[i] + "," + ids_[j]);

    if (!rank.empty()) {
        rank_.resize(ids_.size());
        for (int i = 0; i < size(); ++i) {
            auto it = rank.find(ids_[i]);
            if (it == rank.end()) throw std::invalid_argument("poset: rank missing for " + ids_[i]);
            rank_[i] = it->second;
        }
        for (int i = 0; i < size(); ++i)
            for (int j = 0; j < size(); ++j)
                if (less(i, j) && !(rank_[i] < rank_[j]))
                    throw std::invalid_argument("poset: rank not strictly increasing");
    }
    if (!base.empty()) {
        base_.resize(ids_.size());
        for (int i = 0; i < size(); ++i) {
            auto it = base.find(ids_[i]);
            if (it == base.end()) throw std::invalid_argument("poset: base missing for " + ids_[i]);
            base_[i] = it->second;
        }
        for (int i = 0; i < size(); ++i)
            for (int j = 0; j < size(); ++j)
                if (less(i, j) && base_[i] != base_[j])
                    throw std::invalid_argument("poset: comparable elements in distinct fibers");
    }
}

int finite_poset::index_of(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? -1 : it->second;
}

bool finite_poset::leq(const std::string& a, const std::string& b) const {
    const int ia = index_of(a), ib = index_of(b);
    if (ia < 0 || ib < 0) throw std::invalid_argument("leq: unknown id");
    return leq(ia, ib);
}

long long finite_poset::rank_of(int i) const {
    if (!ranked()) throw std::logic_error("rank_of: poset is unranked");
    return rank_[i];
}

const std::string& finite_poset::base_of(int i) const {
    if (!fibered()) throw std::logic_error("base_of: poset has no base map");
    return base_[i];
}

std::vector<std::string> finite_poset::fiber_ids() const {
    std::vector<std::string> out(base_.begin(), base_.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> finite_poset::fiber(const std::string& base_id) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (base_[i] == base_id) out.push_back(i);
    return out;
}

std::vector<int> finite_poset::strict_down(int x) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (less(i, x)) out.push_back(i);
    return out;
}

std::vector<int> finite_poset::strict_up(int x) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (less(x, i)) out.push_back(i);
    return out;
}

std::vector<std::pair<int, int>> finite_poset::covers() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < size(); ++a)
        for (int b = 0; b < size(); ++b) {
            if (!less(a, b)) continue;
            bool covering = true;
            for (int c = 0; c < size() && covering; ++c)
                if (less(a, c) && less(c, b)) covering = false;
            if (covering) out.emplace_back(a, b);
        }
    return out;
}

finite_poset finite_poset::induced(const std::vector<int>& keep) const {
    std::vector<std::string> els;
    std::vector<std::pair<std::string, std::string>> pairs;
    std::map<std::string, long long> rk;
    std::map<std::string, std::string> bs;
    for (int i : keep) els.push_back(ids_[i]);
    for (int i : keep)
        for (int j : keep)
            if (less(i, j)) pairs.emplace_back(ids_[i], ids_[j]);
    if (ranked())
        for (int i : keep) rk[ids_[i]] = rank_[i];
    if (fibered())
        for (int i : keep) bs[ids_[i]] = base_[i];
    return finite_poset(std::move(els), pairs, std::move(rk), std::move(bs), true);
}

finite_poset interval(const finite_poset& p, const std::optional<std::string>& lo,
                      const std::optional<std::string>& hi, bool open_lo, bool open_hi) {
    int ilo = -1, ihi = -1;
    if (lo) {
        ilo = p.index_of(*lo);
        if (ilo < 0) throw std::invalid_argument("interval: unknown lower endpoint " + *lo);
    }
    if (hi) {
        ihi = p.index_of(*hi);
        if (ihi < 0) throw std::invalid_argument("interval: unknown upper endpoint " + *hi);
    }
    const bool make_bot = !lo && !open_lo;
    const bool make_top = !hi && !open_hi;
    if ((make_bot || make_top) && p.fibered())
        throw std::invalid_argument("interval: sentinel endpoints need an unfibered poset");

    std::vector<int> keep;
    for (int x = 0; x < p.size(); ++x) {
        if (lo && !(open_lo ? p.less(ilo, x) : p.leq(ilo, x))) continue;
        if (hi && !(open_hi ? p.less(x, ihi) : p.leq(x, ihi))) continue;
        keep.push_back(x);
    }
    if (!make_bot && !make_top) return p.induced(keep);

    std::vector<std::string> els;
    std::vector<std::pair<std::string, std::string>> pairs;
    std::map<std::string, long long> rk;
    for (int i : keep) els.push_back(p.id(i));
    for (int i : keep)
        for (int j : keep)
            if (p.less(i, j)) pairs.emplace_back(p.id(i), p.id(j));
    if (p.ranked())
        for (int i : keep) rk[p.id(i)] = p.rank_of(i);
    long long rmin = 0, rmax = 0;
    if (p.ranked())
        for (int i = 0; i < p.size(); ++i) {
            rmin = std::min(rmin, p.rank_of(i));
            rmax = std::max(rmax, p.rank_of(i));
        }
    if (make_bot) {
        els.push_back("__bot__");
        for (int i : keep) pairs.emplace_back("__bot__", p.id(i));
        if (p.ranked() || p.size() == 0) rk["__bot__"] = rmin - 1;
    }
    if (make_top) {
        els.push_back("__top__");
        for (int i : keep) pairs.emplace_back(p.id(i), "__top__");
        if (make_bot) pairs.emplace_back("__bot__", "__top__");
        if (p.ranked() || p.size() == 0) rk["__top__"] = rmax + 1;
    }
    if (!p.ranked() && p.size() > 0) rk.clear();
    return finite_poset(std::move(els), pairs, std::move(rk), {}, true);
}

std::optional<std::string> find_center(const finite_poset& p) {
    for (int x = 0; x < p.size(); ++x) {
        bool ok = true;
        for (int y = 0; y < p.size() && ok; ++y)
            if (!p.comparable(x, y)) ok = false;
        if (ok) return p.id(x);
    }
    return std::nullopt;
}

std::optional<std::string> find_maximum(const finite_poset& p) {
    for (int x = 0; x < p.size(); ++x) {
        bool ok = true;
        for (int y = 0; y < p.size() && ok; ++y)
            if (!p.leq(y, x)) ok = false;
        if (ok) return p.id(x);
    }
    return std::nullopt;
}

std::optional<std::string> find_minimum(const finite_poset& p) {
    for (int x = 0; x < p.size(); ++x) {
        bool ok = true;
        for (int y = 0; y < p.size() && ok; ++y)
            if (!p.leq(x, y)) ok = false;
        if (ok) return p.id(x);
    }
    return std::nullopt;
}

std::map<std::string, std::optional<std::string>> fiber_centers(const finite_poset& p) {
    if (!p.fibered()) throw std::invalid_argument("fiber_centers: poset has no base map");
    std::map<std::string, std::optional<std::string>> out;
    for (const auto& f : p.fiber_ids()) out[f] = find_center(p.induced(p.fiber(f)));
    return out;
}

std::optional<std::map<std::string, std::string>> falling_retraction(const finite_poset& p,
                                                                     const finite_poset& sub) {
    std::vector<int> s;
    for (const auto& id : sub.elements()) {
        const int i = p.index_of(id);
        if (i < 0) throw std::invalid_argument("falling_retraction: unknown id " + id);
        s.push_back(i);
    }
    for (int a = 0; a < sub.size(); ++a)
        for (int b = 0; b < sub.size(); ++b)
            if (sub.leq(a, b) != p.leq(s[a], s[b]))
                throw std::invalid_argument("falling_retraction: sub order is not induced");
    std::map<std::string, std::string> r;
    for (int t = 0; t < p.size(); ++t) {
        std::vector<int> below;
        for (int x : s)
            if (p.leq(x, t)) below.push_back(x);
        int best = -1;
        for (int m : below) {
            bool top = true;
            for (int x : below)
                if (!p.leq(x, m)) {
                    top = false;
                    break;
                }
            if (top) {
                best = m;
                break;
            }
        }
        if (best < 0) return std::nullopt;
        r[p.id(t)] = p.id(best);
    }
    return r;
}

bigint nerve_complex::total_size() const {
    bigint n = 0;
    for (const auto& level : simplices) n += static_cast<long long>(level.size());
    return n;
}

std::string nerve_complex::label(int d, int i) const {
    std::string s;
    for (size_t k = 0; k < simplices[d][i].size(); ++k) {
        if (k) s += "<";
        s += poset->id(simplices[d][i][k]);
    }
    return s;
}

namespace {

void extend_chain(const finite_poset& p, std::vector<int>& chain, int max_len, long long max_simplices,
                  long long& count, std::vector<std::vector<std::vector<int>>>& out) {
    const int d = static_cast<int>(chain.size()) - 1;
    if (static_cast<int>(out.size()) <= d) out.emplace_back();
    out[d].push_back(chain);
    if (++count > max_simplices) throw cost_guard_error("nerve: simplex budget exceeded");
    if (static_cast<int>(chain.size()) == max_len) return;
    const int last = chain.back();
    for (int j = 0; j < p.size(); ++j)
        if (p.less(last, j)) {
            chain.push_back(j);
            extend_chain(p, chain, max_len, max_simplices, count, out);
            chain.pop_back();
        }
}

}

nerve_complex nerve(const finite_poset& p, std::optional<int> max_dim, long long max_simplices) {
    nerve_complex n;
    n.poset = &p;
    const int max_len = max_dim ? *max_dim + 1 : p.size();
    long long count = 0;
    std::vector<int> chain;
    for (int i = 0; i < p.size() && max_len > 0; ++i) {
        chain.assign(1, i);
        extend_chain(p, chain, max_len, max_simplices, count, n.simplices);
    }
    return n;
}

euler_characteristics_t euler_characteristics(const finite_poset& p) {
    euler_characteristics_t e;
    std::vector<bigint> ending(p.size(), bigint(1));  // chains of current size ending at x
    while (true) {
        bigint total = 0;
        for (const auto& v : ending) total += v;
        if (total == 0) break;
        e.chains_by_size.push_back(total);
        std::vector<bigint> next(p.size(), bigint(0));
        for (int x = 0; x < p.size(); ++x) {
            if (ending[x] == 0) continue;
            for (int y = 0; y < p.size(); ++y)
                if (p.less(x, y)) next[y] += ending[x];
        }
        ending = std::move(next);
    }
    e.chi = 0;
    for (size_t m = 0; m < e.chains_by_size.size(); ++m)
        e.chi += (m % 2 == 0 ? 1 : -1) * e.chains_by_size[m];
    e.chi_reduced = e.chi - 1;
    return e;
}

bigint chi_reduced_of_subset(const finite_poset& p, const std::vector<int>& subset) {
    bigint chi = 0;
    std::map<int, bigint> ending;
    for (int x : subset) ending[x] = 1;
    int sign = 1;
    while (!ending.empty()) {
        bigint total = 0;
        for (const auto& [x, v] : ending) total += v;
        chi += sign * total;
        sign = -sign;
        std::map<int, bigint> next;
        for (const auto& [x, v] : ending)
            for (int y : subset)
                if (p.less(x, y)) next[y] += v;
        ending = std::move(next);
    }
    return chi - 1;
}

bool verify_order_axioms(const finite_poset& p) {
    const int n = p.size();
    for (int a = 0; a < n; ++a)
        if (!p.leq(a, a)) return false;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a != b && p.leq(a, b) && p.leq(b, a)) return false;
            for (int c = 0; c < n; ++c)
                if (p.leq(a, b) && p.leq(b, c) && !p.leq(a, c)) return false;
        }
    return true;
}

}
