#include "pie/spectral.hpp"

#include <algorithm>
#include <stdexcept>

namespace pie {

void verify_filtration(const filtered_chain_complex_q& f) {
    const chain_complex_q& c = f.complex;
    if (static_cast<int>(f.level.size()) != c.terms())
        throw std::invalid_argument("filtration: level table shape mismatch");
    for (int i = 0; i < c.terms(); ++i) {
        if (static_cast<int>(f.level[i].size()) != c.dims[i])
            throw std::invalid_argument("filtration: level table shape mismatch");
        for (long long l : f.level[i])
            if (l < f.min_level || l > f.max_level)
                throw std::invalid_argument("filtration: level outside bounds");
    }
    for (int i = 1; i < c.terms(); ++i)
        for (int j = 0; j < c.dims[i]; ++j)
            for (int r = 0; r < c.dims[i - 1]; ++r)
                if (c.boundary[i].at(r, j) != 0 && f.level[i - 1][r] > f.level[i][j])
                    throw std::invalid_argument("filtration: boundary leaves the level set");
}

std::vector<long long> filtration_sizes(const filtered_chain_complex_q& f) {
    std::vector<long long> out;
    for (long long i = f.min_level; i <= f.max_level; ++i) {
        long long n = 0;
        for (const auto& lv : f.level)
            for (long long l : lv)
                if (l <= i) ++n;
        out.push_back(n);
    }
    return out;
}

filtered_chain_complex_q rank_filtration(const finite_poset& p) {
    if (!p.ranked()) throw std::invalid_argument("rank_filtration: poset is unranked");
    filtered_chain_complex_q f;
    const nerve_complex n = nerve(p);
    f.complex = chain_complex(n);
    bool first = true;
    for (int d = 0; d <= n.dim(); ++d) {
        f.level.emplace_back();
        for (const auto& chain : n.simplices[d]) {
            // ranks increase along a chain, so the top element carries the max
            const long long l = p.rank_of(chain.back());
            f.level.back().push_back(l);
            if (first || l < f.min_level) f.min_level = l;
            if (first || l > f.max_level) f.max_level = l;
            first = false;
        }
    }
    verify_filtration(f);
    return f;
}

namespace {

struct engine {
    const filtered_chain_complex_q& f;
    const chain_complex_q& c;
    int pmin, pmax;
    std::vector<qmatrix> delta;  // delta[i]: degree i -> i+1 of the dual
    std::map<std::tuple<int, int, int>, std::vector<std::vector<rat>>> z_cache;

    explicit engine(const filtered_chain_complex_q& fil) : f(fil), c(fil.complex) {
        pmin = static_cast<int>(f.min_level);
        pmax = static_cast<int>(f.max_level);
        delta.resize(c.terms());
        for (int i = 0; i + 1 < c.terms(); ++i) delta[i] = c.boundary[i + 1].transpose();
        if (c.terms() > 0) delta[c.terms() - 1] = qmatrix(0, c.dims[c.terms() - 1]);
    }

    // spanning columns of { x in Fil^p C^i : delta x in Fil^{p+r} }
    const std::vector<std::vector<rat>>& Z(int r, int p, int i) {
        const auto key = std::make_tuple(r, p, i);
        auto it = z_cache.find(key);
        if (it != z_cache.end()) return it->second;

        std::vector<std::vector<rat>> out;
        if (i >= 0 && i < c.terms()) {
            std::vector<int> cols;
            for (int j = 0; j < c.dims[i]; ++j)
                if (f.level[i][j] >= p) cols.push_back(j);
            std::vector<int> rows;
            if (i + 1 < c.terms())
                for (int k = 0; k < c.dims[i + 1]; ++k)
                    if (f.level[i + 1][k] < static_cast<long long>(p) + r) rows.push_back(k);
            qmatrix a(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
            for (size_t rr = 0; rr < rows.size(); ++rr)
                for (size_t cc = 0; cc < cols.size(); ++cc)
                    a.at(static_cast<int>(rr), static_cast<int>(cc)) = delta[i].at(rows[rr], cols[cc]);
            qmatrix k = kernel_basis(a);
            for (int j = 0; j < k.cols(); ++j) {
                std::vector<rat> v(c.dims[i], rat(0));
                for (size_t cc = 0; cc < cols.size(); ++cc) v[cols[cc]] = k.at(static_cast<int>(cc), j);
                out.push_back(std::move(v));
            }
        }
        return z_cache.emplace(key, std::move(out)).first->second;
    }

    struct entry {
        column_space cs{0};
        int wrank = 0;
        std::vector<std::vector<rat>> reps;
    };

    // E_r^{p,*} in dual degree i: Z_r / (delta Z_{r-1}^{p-r+1} + Z_{r-1}^{p+1})
    entry page_entry(int r, int p, int i) {
        entry e;
        if (i < 0 || i >= c.terms()) return e;
        e.cs = column_space(c.dims[i]);
        if (i > 0)
            for (const auto& y : Z(r - 1, p - r + 1, i - 1)) e.cs.add(delta[i - 1].apply(y));
        for (const auto& x : Z(r - 1, p + 1, i)) e.cs.add(x);
        e.wrank = e.cs.rank();
        for (const auto& x : Z(r, p, i))
            if (e.cs.add(x)) e.reps.push_back(x);
        return e;
    }
};

}

spectral_result spectral_sequence(const filtered_chain_complex_q& f) {
    verify_filtration(f);
    spectral_result res;
    res.total_betti = betti(f.complex, false);
    if (f.complex.terms() == 0) {
        res.pages.emplace_back();
        res.converges = true;
        res.bookkeeping_ok = true;
        res.euler_page_invariant = true;
        res.stabilized_at = 1;
        return res;
    }

    engine eng(f);
    const int width = eng.pmax - eng.pmin;
    const int r_stab = width + 1;
    res.stabilized_at = r_stab;
    res.bookkeeping_ok = true;
    res.euler_page_invariant = true;

    bigint chi_complex = 0;
    for (int i = 0; i < f.complex.terms(); ++i) {
        const int n = f.complex.lowest_degree + i;
        chi_complex += (n % 2 == 0 ? 1 : -1) * bigint(f.complex.dims[i]);
    }

    // per page: entry tables keyed by (p, dual index i)
    std::map<std::pair<int, int>, engine::entry> cur;
    std::map<std::pair<int, int>, long long> out_rank, in_rank;

    for (int r = 1; r <= r_stab; ++r) {
        std::map<std::pair<int, int>, engine::entry> next;
        for (int p = eng.pmin; p <= eng.pmax; ++p)
            for (int i = 0; i < f.complex.terms(); ++i) {
                engine::entry e = eng.page_entry(r, p, i);
                if (!e.reps.empty() || r == 1) next[{p, i}] = std::move(e);
            }

        std::map<std::pair<int, int>, long long> table;
        bigint chi_page = 0;
        for (const auto& [key, e] : next) {
            if (e.reps.empty()) continue;
            const int n = f.complex.lowest_degree + key.second;
            table[{key.first, n - key.first}] = static_cast<long long>(e.reps.size());
            chi_page += (n % 2 == 0 ? 1 : -1) * bigint(e.reps.size());
        }
        if (chi_page != chi_complex) res.euler_page_invariant = false;

        // bookkeeping: compare against the previous page and its differentials
        if (r > 1) {
            std::map<std::pair<int, int>, long long> prev_dims;
            for (const auto& [key, e] : cur)
                if (!e.reps.empty()) prev_dims[key] = static_cast<long long>(e.reps.size());
            for (const auto& [key, d] : prev_dims) {
                long long expect = d - out_rank[key] - in_rank[key];
                long long got = 0;
                auto it = next.find(key);
                if (it != next.end()) got = static_cast<long long>(it->second.reps.size());
                if (expect != got) res.bookkeeping_ok = false;
            }
            for (const auto& [key, e] : next) {
                if (e.reps.empty()) continue;
                if (!prev_dims.count(key) &&
                    static_cast<long long>(e.reps.size()) != -out_rank[key] - in_rank[key])
                    res.bookkeeping_ok = false;
            }
        }

        res.pages.push_back(table);

        // differentials d_r out of each populated entry
        out_rank.clear();
        in_rank.clear();
        if (r < r_stab) {
            for (auto& [key, e] : next) {
                if (e.reps.empty()) continue;
                const auto [p, i] = key;
                auto t = next.find({p + r, i + 1});
                engine::entry scratch;
                engine::entry* target = nullptr;
                if (t != next.end())
                    target = &t->second;
                else {
                    scratch = eng.page_entry(r, p + r, i + 1);
                    target = &scratch;
                }
                qmatrix d(static_cast<int>(target->reps.size()), static_cast<int>(e.reps.size()));
                for (size_t j = 0; j < e.reps.size(); ++j) {
                    std::vector<rat> img = eng.delta[i].apply(e.reps[j]);
                    auto coords = target->cs.coordinates(img);
                    if (!coords) throw std::logic_error("spectral_sequence: differential left the page");
                    for (size_t rr = 0; rr < target->reps.size(); ++rr)
                        d.at(static_cast<int>(rr), static_cast<int>(j)) = (*coords)[target->wrank + rr];
                }
                const long long rk = rank(d);
                const int n = f.complex.lowest_degree + i;
                if (!d.is_zero()) res.differentials[{r, p, n - p}] = d;
                out_rank[{p, i}] += rk;
                in_rank[{p + r, i + 1}] += rk;
            }
        }
        cur = std::move(next);
    }

    res.limit = res.pages.back();
    std::map<int, long long> limit_by_degree;
    for (const auto& [pq, d] : res.limit) limit_by_degree[pq.first + pq.second] += d;
    res.converges = limit_by_degree == res.total_betti;
    return res;
}

nlohmann::json ss_to_json(const spectral_result& s) {
    nlohmann::json pages = nlohmann::json::array();
    for (size_t r = 0; r < s.pages.size(); ++r) {
        nlohmann::json entries = nlohmann::json::object();
        for (const auto& [pq, d] : s.pages[r])
            entries[std::to_string(pq.first) + "," + std::to_string(pq.second)] = d;
        pages.push_back({{"r", static_cast<int>(r) + 1}, {"entries", entries}});
    }
    nlohmann::json limit = nlohmann::json::object();
    for (const auto& [pq, d] : s.limit)
        limit[std::to_string(pq.first) + "," + std::to_string(pq.second)] = d;
    return {{"pages", pages}, {"limit", limit}, {"converges", s.converges}};
}

rank_e1_report_t rank_e1_report(const finite_poset& p) {
    rank_e1_report_t rep;
    rep.ss = spectral_sequence(rank_filtration(p));

    for (int x = 0; x < p.size(); ++x) {
        const finite_poset below = p.induced(p.strict_down(x));
        const std::map<int, long long> bet = betti(chain_complex(nerve(below)), true);
        rep.interval_betti[p.id(x)] = bet;
        const int rk = static_cast<int>(p.rank_of(x));
        for (const auto& [d, dim] : bet) rep.expected_e1[{rk, d + 1 - rk}] += dim;
    }
    rep.e1_match = !rep.ss.pages.empty() && rep.ss.pages[0] == rep.expected_e1;
    rep.converges = rep.ss.converges;
    return rep;
}

nlohmann::json rank_e1_to_json(const rank_e1_report_t& r) {
    nlohmann::json j = ss_to_json(r.ss);
    nlohmann::json expected = nlohmann::json::object();
    for (const auto& [pq, d] : r.expected_e1)
        expected[std::to_string(pq.first) + "," + std::to_string(pq.second)] = d;
    nlohmann::json intervals = nlohmann::json::object();
    for (const auto& [id, bet] : r.interval_betti) {
        nlohmann::json b = nlohmann::json::object();
        for (const auto& [deg, dim] : bet) b[std::to_string(deg)] = dim;
        intervals[id] = b;
    }
    j["expected_e1"] = expected;
    j["e1_match"] = r.e1_match;
    j["interval_betti"] = intervals;
    return j;
}

}
