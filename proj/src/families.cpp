#include "pie/families.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

#include "pie/poset_io.hpp"

namespace pie {

namespace {

std::string pad_id(const char* prefix, int i, int width) {
    std::string d = std::to_string(i);
    while (static_cast<int>(d.size()) < width) d.insert(d.begin(), '0');
    return prefix + d;
}

std::string word_id(const std::vector<std::string>& alphabet, const std::vector<int>& word) {
    bool single = true;
    for (const auto& a : alphabet)
        if (a.size() != 1) single = false;
    std::string s;
    for (size_t i = 0; i < word.size(); ++i) {
        if (i && !single) s += "+";
        s += alphabet[word[i]];
    }
    return s;
}

// sorted index words over the alphabet, sizes 1..k; strict = no repeats
void gen_words(int n, int k, bool strict, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (!cur.empty()) out.push_back(cur);
    if (static_cast<int>(cur.size()) == k) return;
    const int lo = cur.empty() ? 0 : (strict ? cur.back() + 1 : cur.back());
    for (int i = lo; i < n; ++i) {
        cur.push_back(i);
        gen_words(n, k, strict, cur, out);
        cur.pop_back();
    }
}

// a contained in b as multisets
bool word_contained(const std::vector<int>& a, const std::vector<int>& b) {
    size_t i = 0;
    for (size_t j = 0; j < b.size() && i < a.size(); ++j)
        if (a[i] == b[j]) ++i;
    return i == a.size();
}

finite_poset words_poset(const std::vector<std::string>& alphabet, int k, bool strict, bool with_bottom) {
    const int n = static_cast<int>(alphabet.size());
    if (n == 0 || k < 1) throw std::invalid_argument("words: nonempty alphabet and k >= 1 required");
    std::vector<std::vector<int>> words;
    std::vector<int> cur;
    gen_words(n, k, strict, cur, words);

    std::vector<std::string> els;
    std::vector<std::pair<std::string, std::string>> pairs;
    std::map<std::string, long long> rank;
    for (const auto& w : words) {
        els.push_back(word_id(alphabet, w));
        rank[els.back()] = static_cast<long long>(w.size());
    }
    for (const auto& a : words)
        for (const auto& b : words)
            if (a.size() + 1 == b.size() && word_contained(a, b))
                pairs.emplace_back(word_id(alphabet, a), word_id(alphabet, b));
    if (with_bottom) {
        els.push_back("__bot__");
        rank["__bot__"] = 0;
        for (const auto& w : words)
            if (w.size() == 1) pairs.emplace_back("__bot__", word_id(alphabet, w));
    }
    return finite_poset(std::move(els), pairs, std::move(rank), {}, true);
}

long long prime_factor_count(long long n) {
    long long c = 0;
    for (long long p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            n /= p;
            ++c;
        }
    if (n > 1) ++c;
    return c;
}

}

finite_poset chain_poset(int n) {
    std::vector<std::string> els;
    std::vector<std::pair<std::string, std::string>> pairs;
    std::map<std::string, long long> rank;
    const int width = static_cast<int>(std::to_string(std::max(n - 1, 0)).size());
    for (int i = 0; i < n; ++i) {
        els.push_back(pad_id("", i, width));
        rank[els.back()] = i;
        if (i) pairs.emplace_back(pad_id("", i - 1, width), els.back());
    }
    return finite_poset(std::move(els), pairs, std::move(rank));
}

finite_poset antichain_poset(int n) {
    std::vector<std::string> els;
    std::map<std::string, long long> rank;
    const int width = static_cast<int>(std::to_string(std::max(n - 1, 0)).size());
    for (int i = 0; i < n; ++i) {
        els.push_back(pad_id("", i, width));
        rank[els.back()] = 1;
    }
    return finite_poset(std::move(els), {}, std::move(rank));
}

finite_poset boolean_poset(int n) {
    if (n < 0 || n > 9) throw std::invalid_argument("boolean_poset: 0 <= n <= 9");
    auto id_of = [](unsigned mask) {
        if (!mask) return std::string("-");
        std::string s;
        for (int b = 0; b < 9; ++b)
            if (mask & (1u << b)) s += static_cast<char>('1' + b);
        return s;
    };
    std::vector<std::string> els;
    std::vector<std::pair<std::string, std::string>> pairs;
    std::map<std::string, long long> rank;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        els.push_back(id_of(mask));
        rank[els.back()] = static_cast<long long>(std::popcount(mask));
        for (int b = 0; b < n; ++b)
            if (mask & (1u << b)) pairs.emplace_back(id_of(mask & ~(1u << b)), id_of(mask));
    }
    return finite_poset(std::move(els), pairs, std::move(rank));
}

finite_poset divisor_poset(long long n) {
    if (n < 1) throw std::invalid_argument("divisor_poset: n >= 1");
    std::vector<long long> divs;
    for (long long d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            divs.push_back(d);
            if (d != n / d) divs.push_back(n / d);
        }
    std::sort(divs.begin(), divs.end());
    std::vector<std::string> els;
    std::vector<std::pair<std::string, std::string>> pairs;
    std::map<std::string, long long> rank;
    for (long long d : divs) {
        els.push_back(std::to_string(d));
        rank[els.back()] = prime_factor_count(d);
    }
    for (long long d : divs)
        for (long long e : divs)
            if (d != e && e % d == 0) pairs.emplace_back(std::to_string(d), std::to_string(e));
    return finite_poset(std::move(els), pairs, std::move(rank));
}

finite_poset config_poset(const std::vector<std::string>& alphabet, int k) {
    return words_poset(alphabet, std::min<int>(k, static_cast<int>(alphabet.size())), true, false);
}

finite_poset multiset_poset(const std::vector<std::string>& alphabet, int k, bool with_bottom) {
    return words_poset(alphabet, k, false, with_bottom);
}

finite_poset barycentric(const finite_poset& p) {
    const nerve_complex n = nerve(p);
    std::vector<std::vector<int>> chains;
    for (const auto& level : n.simplices)
        for (const auto& c : level) chains.push_back(c);

    auto label = [&p](const std::vector<int>& c) {
        std::string s;
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) s += "<";
            s += p.id(c[i]);
        }
        return s;
    };
    auto subchain = [](const std::vector<int>& a, const std::vector<int>& b) {
        size_t i = 0;
        for (size_t j = 0; j < b.size() && i < a.size(); ++j)
            if (a[i] == b[j]) ++i;
        return i == a.size();
    };
    std::vector<std::string> els;
    std::vector<std::pair<std::string, std::string>> pairs;
    std::map<std::string, long long> rank;
    for (const auto& c : chains) {
        els.push_back(label(c));
        rank[els.back()] = static_cast<long long>(c.size());
    }
    for (const auto& a : chains)
        for (const auto& b : chains)
            if (a.size() < b.size() && subchain(a, b)) pairs.emplace_back(label(a), label(b));
    return finite_poset(std::move(els), pairs, std::move(rank));
}

finite_poset join_posets(const finite_poset& a, const finite_poset& b) {
    std::vector<std::string> els;
    std::vector<std::pair<std::string, std::string>> pairs;
    std::map<std::string, long long> rank;
    for (int i = 0; i < a.size(); ++i) els.push_back("a:" + a.id(i));
    for (int i = 0; i < b.size(); ++i) els.push_back("b:" + b.id(i));
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j)
            if (a.less(i, j)) pairs.emplace_back("a:" + a.id(i), "a:" + a.id(j));
    for (int i = 0; i < b.size(); ++i)
        for (int j = 0; j < b.size(); ++j)
            if (b.less(i, j)) pairs.emplace_back("b:" + b.id(i), "b:" + b.id(j));
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < b.size(); ++j) pairs.emplace_back("a:" + a.id(i), "b:" + b.id(j));
    if (a.ranked() && b.ranked()) {
        long long amax = 0, bmin = 0;
        for (int i = 0; i < a.size(); ++i) amax = std::max(amax, a.rank_of(i));
        for (int i = 0; i < b.size(); ++i) bmin = std::min(bmin, b.rank_of(i));
        const long long shift = amax - bmin + 1;
        for (int i = 0; i < a.size(); ++i) rank["a:" + a.id(i)] = a.rank_of(i);
        for (int i = 0; i < b.size(); ++i) rank["b:" + b.id(i)] = b.rank_of(i) + shift;
    }
    return finite_poset(std::move(els), pairs, std::move(rank));
}

namespace {

finite_poset cone(const finite_poset& p, bool below) {
    if (p.fibered()) throw std::invalid_argument("cone: poset has a base map");
    const char* s = below ? "__bot__" : "__top__";
    std::vector<std::string> els = p.elements();
    els.push_back(s);
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < p.size(); ++j)
            if (p.less(i, j)) pairs.emplace_back(p.id(i), p.id(j));
    for (int i = 0; i < p.size(); ++i) {
        if (below)
            pairs.emplace_back(s, p.id(i));
        else
            pairs.emplace_back(p.id(i), s);
    }
    std::map<std::string, long long> rank;
    if (p.ranked()) {
        long long rmin = 0, rmax = 0;
        for (int i = 0; i < p.size(); ++i) {
            rmin = std::min(rmin, p.rank_of(i));
            rmax = std::max(rmax, p.rank_of(i));
            rank[p.id(i)] = p.rank_of(i);
        }
        rank[s] = below ? rmin - 1 : rmax + 1;
    }
    return finite_poset(std::move(els), pairs, std::move(rank), {}, true);
}

}

finite_poset cone_below(const finite_poset& p) { return cone(p, true); }
finite_poset cone_above(const finite_poset& p) { return cone(p, false); }

namespace {

std::vector<std::pair<std::string, std::string>> random_pairs(int n, unsigned long long seed,
                                                              int density_percent, int width) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (static_cast<int>(rng() % 100) < density_percent)
                pairs.emplace_back(pad_id("e", i, width), pad_id("e", j, width));
    return pairs;
}

}

finite_poset random_poset(int n, unsigned long long seed, int density_percent) {
    const int width = static_cast<int>(std::to_string(std::max(n - 1, 0)).size());
    std::vector<std::string> els;
    for (int i = 0; i < n; ++i) els.push_back(pad_id("e", i, width));
    return finite_poset(std::move(els), random_pairs(n, seed, density_percent, width));
}

finite_poset random_ranked_poset(int n, unsigned long long seed, int density_percent) {
    const int width = static_cast<int>(std::to_string(std::max(n - 1, 0)).size());
    std::vector<std::string> els;
    for (int i = 0; i < n; ++i) els.push_back(pad_id("e", i, width));
    finite_poset bare(els, random_pairs(n, seed, density_percent, width));

    // rank = longest chain strictly below
    std::map<std::string, long long> rank;
    std::vector<long long> r(bare.size(), 0);
    for (int x = 0; x < bare.size(); ++x)
        for (int y = 0; y < bare.size(); ++y)
            if (bare.less(y, x)) r[x] = std::max(r[x], r[y] + 1);
    // index order refines the order (edges only go up in index), so one pass
    // suffices
    for (int x = 0; x < bare.size(); ++x) rank[bare.id(x)] = r[x];
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int i = 0; i < bare.size(); ++i)
        for (int j = 0; j < bare.size(); ++j)
            if (bare.less(i, j)) pairs.emplace_back(bare.id(i), bare.id(j));
    return finite_poset(bare.elements(), pairs, std::move(rank));
}

std::vector<std::string> default_alphabet(int n) {
    if (n < 1 || n > 26) throw std::invalid_argument("default_alphabet: 1 <= n <= 26");
    std::vector<std::string> a;
    for (int i = 0; i < n; ++i) a.push_back(std::string(1, static_cast<char>('a' + i)));
    return a;
}

namespace {

std::vector<std::string> letters_arg(const nlohmann::json& spec) {
    if (spec.contains("letters")) {
        if (spec.at("letters").is_number_integer()) return default_alphabet(spec.at("letters").get<int>());
        return spec.at("letters").get<std::vector<std::string>>();
    }
    return default_alphabet(spec.at("n").get<int>());
}

}

finite_poset build_family(const nlohmann::json& spec) {
    if (spec.is_object() && spec.contains("elements")) return read_poset(spec);
    if (!spec.is_object() || !spec.contains("family"))
        throw std::invalid_argument("family spec: object with \"family\" required");
    const std::string f = spec.at("family").get<std::string>();
    if (f == "chain") return chain_poset(spec.at("n").get<int>());
    if (f == "antichain") return antichain_poset(spec.at("n").get<int>());
    if (f == "boolean") return boolean_poset(spec.at("n").get<int>());
    if (f == "divisor") return divisor_poset(spec.at("n").get<long long>());
    if (f == "config") return config_poset(letters_arg(spec), spec.at("k").get<int>());
    if (f == "multiset")
        return multiset_poset(letters_arg(spec), spec.at("k").get<int>(),
                              spec.value("with_bottom", false));
    if (f == "barycentric") return barycentric(build_family(spec.at("of")));
    if (f == "join") return join_posets(build_family(spec.at("a")), build_family(spec.at("b")));
    if (f == "cone") return cone_below(build_family(spec.at("of")));
    if (f == "cocone") return cone_above(build_family(spec.at("of")));
    if (f == "random") {
        const int n = spec.at("n").get<int>();
        const auto seed = spec.value("seed", 0ull);
        const int density = spec.value("density", 30);
        if (spec.value("ranked", false)) return random_ranked_poset(n, seed, density);
        return random_poset(n, seed, density);
    }
    throw std::invalid_argument("family spec: unknown family " + f);
}

}
