#include "pie/zerocycles.hpp"

#include <algorithm>
#include <stdexcept>

#include "pie/chain.hpp"
#include "pie/families.hpp"
#include "pie/numbers.hpp"

namespace pie {

namespace {

void multisets_rec(int letters, int m, int lo, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
    if (m == 0) {
        out.push_back(cur);
        return;
    }
    for (int c = lo; c < letters; ++c) {
        cur.push_back(c);
        multisets_rec(letters, m - 1, c, cur, out);
        cur.pop_back();
    }
}

void compositions_rec(int parts, int total, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int a = 1; a <= total - (parts - 1); ++a) {
        cur.push_back(a);
        compositions_rec(parts - 1, total - a, cur, out);
        cur.pop_back();
    }
}

std::string letter_token(int letters, int v) {
    if (letters <= 26) return std::string(1, static_cast<char>('a' + v));
    return std::to_string(v) + ".";
}

std::string parts_label(int letters, const std::vector<std::vector<int>>& parts) {
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += '|';
        for (int v : parts[i]) s += letter_token(letters, v);
    }
    return s;
}

// inversion parity of a duplicate-free tuple; +1 even, -1 odd
int sort_sign(const std::vector<int>& u) {
    int inv = 0;
    for (size_t i = 0; i < u.size(); ++i)
        for (size_t j = i + 1; j < u.size(); ++j)
            if (u[i] > u[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

std::vector<std::vector<int>> multisets_of(int letters, int m) {
    if (letters < 1 || m < 0) throw std::invalid_argument("multisets_of: bad arguments");
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    multisets_rec(letters, m, 0, cur, out);
    return out;
}

std::vector<std::vector<int>> compositions_upto(int parts, int max_total) {
    if (parts < 1) throw std::invalid_argument("compositions_upto: parts must be positive");
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    for (int total = parts; total <= max_total; ++total)
        compositions_rec(parts, total, cur, out);
    return out;
}

long long composition_complex::dim_at(int degree) const {
    if (degree < 0 || degree >= degrees()) return 0;
    return static_cast<long long>(basis[degree].size());
}

long long composition_complex::summand_dim(int degree, int comp_index) const {
    const auto& offs = comp_offset[degree];
    long long lo = offs[comp_index];
    long long hi = comp_index + 1 < static_cast<int>(offs.size())
                       ? offs[comp_index + 1]
                       : dim_at(degree);
    return hi - lo;
}

composition_complex skeletal_e1(int letters, int cutoff) {
    if (letters < 1 || cutoff < 1) throw std::invalid_argument("skeletal_e1: need |Z| >= 1, cutoff >= 1");

    composition_complex e;
    e.letters = letters;
    e.cutoff = cutoff;

    std::vector<std::vector<std::vector<int>>> msets(cutoff + 1);
    for (int m = 1; m <= cutoff; ++m) msets[m] = multisets_of(letters, m);

    // degree p exists iff a composition with p+1 positive parts fits the cutoff
    for (int p = 0; p + 1 <= cutoff; ++p) {
        auto comps = compositions_upto(p + 1, cutoff);
        std::vector<composition_complex::basis_element> bas;
        std::vector<long long> offs;
        for (int ci = 0; ci < static_cast<int>(comps.size()); ++ci) {
            offs.push_back(static_cast<long long>(bas.size()));
            const auto& a = comps[ci];
            // odometer over the parts, rightmost fastest
            std::vector<size_t> pos(a.size(), 0);
            while (true) {
                composition_complex::basis_element el;
                el.comp = ci;
                for (size_t i = 0; i < a.size(); ++i) el.parts.push_back(msets[a[i]][pos[i]]);
                bas.push_back(std::move(el));
                int i = static_cast<int>(a.size()) - 1;
                while (i >= 0 && ++pos[i] == msets[a[i]].size()) pos[i--] = 0;
                if (i < 0) break;
            }
        }
        e.comps.push_back(std::move(comps));
        e.basis.push_back(std::move(bas));
        e.comp_offset.push_back(std::move(offs));
    }

    std::vector<std::map<std::vector<std::vector<int>>, long long>> index(e.degrees());
    for (int p = 0; p < e.degrees(); ++p)
        for (long long i = 0; i < e.dim_at(p); ++i) index[p][e.basis[p][i].parts] = i;

    chain_complex_q c;
    c.lowest_degree = 0;
    for (int p = 0; p < e.degrees(); ++p) {
        c.dims.push_back(static_cast<int>(e.dim_at(p)));
        std::vector<std::string> lab;
        for (const auto& el : e.basis[p]) lab.push_back(parts_label(letters, el.parts));
        c.labels.push_back(std::move(lab));
    }
    c.boundary.emplace_back(0, c.dims[0]);
    for (int p = 1; p < e.degrees(); ++p) {
        // pullback: row x of degree p, column the image tuple of degree p-1;
        // stored transposed
        qmatrix b(c.dims[p - 1], c.dims[p]);
        for (long long x = 0; x < e.dim_at(p); ++x) {
            const auto& parts = e.basis[p][x].parts;
            for (int i = 0; i <= p; ++i) {
                std::vector<std::vector<int>> img;
                img.reserve(parts.size() - 1);
                for (int m = 0; m < i; ++m) img.push_back(parts[m]);
                if (i < p) {
                    std::vector<int> merged;
                    std::merge(parts[i].begin(), parts[i].end(), parts[i + 1].begin(),
                               parts[i + 1].end(), std::back_inserter(merged));
                    img.push_back(std::move(merged));
                    for (int m = i + 2; m <= p; ++m) img.push_back(parts[m]);
                }
                long long y = index[p - 1].at(img);
                b.at(y, x) += (i % 2 == 0 ? 1 : -1);
            }
        }
        c.boundary.push_back(std::move(b));
    }

    e.filtered.complex = std::move(c);
    for (int p = 0; p < e.degrees(); ++p) {
        std::vector<long long> lv;
        for (const auto& el : e.basis[p]) {
            long long total = 0;
            for (const auto& part : el.parts) total += static_cast<long long>(part.size());
            lv.push_back(total - 1);
        }
        e.filtered.level.push_back(std::move(lv));
    }
    e.filtered.min_level = 0;
    e.filtered.max_level = cutoff - 1;

    if (!verify_complex(e.filtered.complex))
        throw std::logic_error("skeletal_e1: differential does not square to zero");
    verify_filtration(e.filtered);
    return e;
}

long long banerjee_complex_finite::dim_at(int degree) const {
    if (degree < 0 || degree >= degrees()) return 0;
    return static_cast<long long>(basis[degree].size());
}

banerjee_complex_finite banerjee_complex(int letters, int max_degree) {
    if (letters < 1 || max_degree < 0)
        throw std::invalid_argument("banerjee_complex: bad arguments");

    banerjee_complex_finite b;
    b.letters = letters;
    for (int p = 0; p <= max_degree; ++p) b.basis.push_back(multisets_of(letters, p + 1));
    for (auto& deg : b.basis) {
        deg.erase(std::remove_if(deg.begin(), deg.end(),
                                 [](const std::vector<int>& s) {
                                     return std::adjacent_find(s.begin(), s.end()) != s.end();
                                 }),
                  deg.end());
    }

    std::vector<std::map<std::vector<int>, long long>> index(b.degrees());
    for (int p = 0; p < b.degrees(); ++p)
        for (long long i = 0; i < b.dim_at(p); ++i) index[p][b.basis[p][i]] = i;

    chain_complex_q c;
    c.lowest_degree = 0;
    for (int p = 0; p < b.degrees(); ++p) {
        c.dims.push_back(static_cast<int>(b.dim_at(p)));
        std::vector<std::string> lab;
        for (const auto& s : b.basis[p]) {
            std::string w;
            for (int v : s) w += letter_token(letters, v);
            lab.push_back(std::move(w));
        }
        c.labels.push_back(std::move(lab));
    }
    c.boundary.emplace_back(0, c.dims[0]);
    for (int p = 1; p < b.degrees(); ++p) {
        // value of the pullback sum at the increasing tuple of T: dropping
        // coordinate i leaves the increasing tuple of T minus its i-th element
        qmatrix m(c.dims[p - 1], c.dims[p]);
        for (long long t = 0; t < b.dim_at(p); ++t) {
            const auto& T = b.basis[p][t];
            for (int i = 0; i <= p; ++i) {
                std::vector<int> S;
                S.reserve(T.size() - 1);
                for (int k = 0; k <= p; ++k)
                    if (k != i) S.push_back(T[k]);
                m.at(index[p - 1].at(S), t) += (i % 2 == 0 ? 1 : -1);
            }
        }
        c.boundary.push_back(std::move(m));
    }

    b.complex = std::move(c);
    if (!verify_complex(b.complex))
        throw std::logic_error("banerjee_complex: differential does not square to zero");
    return b;
}

asym_result asym(const composition_complex& e) {
    return asym(e, banerjee_complex(e.letters, e.cutoff - 1));
}

asym_result asym(const composition_complex& e, const banerjee_complex_finite& target) {
    if (target.letters != e.letters)
        throw std::invalid_argument("asym: alphabet mismatch");
    if (target.degrees() != e.degrees())
        throw std::invalid_argument("asym: cutoff mismatch");

    asym_result res;
    res.target = target;

    std::vector<std::map<std::vector<int>, long long>> tindex(target.degrees());
    for (int p = 0; p < target.degrees(); ++p)
        for (long long i = 0; i < target.dim_at(p); ++i) tindex[p][target.basis[p][i]] = i;

    for (int p = 0; p < e.degrees(); ++p) {
        qmatrix m(static_cast<int>(target.dim_at(p)), static_cast<int>(e.dim_at(p)));
        std::vector<int> ones(p + 1, 1);
        auto it = std::find(e.comps[p].begin(), e.comps[p].end(), ones);
        if (it != e.comps[p].end()) {
            int ci = static_cast<int>(it - e.comps[p].begin());
            long long off = e.comp_offset[p][ci];
            long long n = e.summand_dim(p, ci);
            for (long long j = 0; j < n; ++j) {
                std::vector<int> u;
                for (const auto& part : e.basis[p][off + j].parts) u.push_back(part[0]);
                std::vector<int> s = u;
                std::sort(s.begin(), s.end());
                if (std::adjacent_find(s.begin(), s.end()) != s.end()) continue;
                m.at(tindex[p].at(s), off + j) = sort_sign(u);
            }
        }
        res.maps.push_back(std::move(m));
    }

    res.commutes = true;
    for (int p = 1; p < e.degrees(); ++p) {
        qmatrix de = e.filtered.complex.boundary[p].transpose();
        qmatrix db = target.complex.boundary[p].transpose();
        if (!(db * res.maps[p - 1] == res.maps[p] * de)) res.commutes = false;
    }

    res.filtration_preserved = true;
    for (int p = 0; p < e.degrees(); ++p) {
        for (long long j = 0; j < e.dim_at(p); ++j) {
            bool nonzero = false;
            for (int r = 0; r < res.maps[p].rows(); ++r)
                if (!(res.maps[p].at(r, static_cast<int>(j)) == 0)) nonzero = true;
            if (nonzero && e.filtered.level[p][j] != p) res.filtration_preserved = false;
        }
    }

    // graded piece at level L: the sum-(L+1) summands with the level-preserving
    // (merge) part of the differential; the target piece sits in degree L with
    // zero differential
    res.filtered_quasi_iso = res.commutes && res.filtration_preserved;
    for (long long L = 0; L < e.cutoff; ++L) {
        graded_piece_report piece;
        piece.level = L;
        piece.target_dim = target.dim_at(static_cast<int>(L));

        std::vector<std::vector<long long>> keep(e.degrees());
        for (int q = 0; q < e.degrees(); ++q)
            for (long long j = 0; j < e.dim_at(q); ++j)
                if (e.filtered.level[q][j] == L) keep[q].push_back(j);

        // gr[q]: the restricted pullback matrix from degree q-1 into degree q
        std::vector<qmatrix> gr(e.degrees(), qmatrix(0, 0));
        std::vector<long long> grank(e.degrees() + 1, 0);
        for (int q = 1; q < e.degrees(); ++q) {
            qmatrix full = e.filtered.complex.boundary[q].transpose();
            qmatrix cut(static_cast<int>(keep[q].size()), static_cast<int>(keep[q - 1].size()));
            for (size_t r = 0; r < keep[q].size(); ++r)
                for (size_t c = 0; c < keep[q - 1].size(); ++c)
                    cut.at(static_cast<int>(r), static_cast<int>(c)) =
                        full.at(static_cast<int>(keep[q][r]), static_cast<int>(keep[q - 1][c]));
            grank[q] = rank(cut);
            gr[q] = std::move(cut);
        }

        for (int q = 0; q < e.degrees(); ++q) {
            long long dim = static_cast<long long>(keep[q].size());
            long long in = q >= 1 ? grank[q] : 0;
            long long out = q + 1 < e.degrees() ? grank[q + 1] : 0;
            long long h = dim - in - out;
            if (h != 0) piece.source_homology[q] = h;
        }

        bool ok = true;
        for (const auto& [q, h] : piece.source_homology)
            if (q != L || h != piece.target_dim) ok = false;
        if (piece.target_dim != 0 && !piece.source_homology.count(static_cast<int>(L))) ok = false;

        if (L < e.degrees()) {
            int dL = static_cast<int>(L);
            qmatrix restr(res.maps[dL].rows(), static_cast<int>(keep[dL].size()));
            for (int r = 0; r < restr.rows(); ++r)
                for (size_t c = 0; c < keep[dL].size(); ++c)
                    restr.at(r, static_cast<int>(c)) = res.maps[dL].at(r, static_cast<int>(keep[dL][c]));
            piece.map_rank = rank(restr);
            // the map must kill boundaries so that it descends
            if (dL >= 1 && gr[dL].rows() > 0 && gr[dL].cols() > 0 && !(restr * gr[dL]).is_zero())
                ok = false;
        }
        if (piece.map_rank != piece.target_dim) ok = false;

        piece.quasi_iso = ok;
        if (!ok) res.filtered_quasi_iso = false;
        res.pieces.push_back(std::move(piece));
    }

    return res;
}

nlohmann::json asym_to_json(const asym_result& a) {
    nlohmann::json pieces = nlohmann::json::array();
    for (const auto& p : a.pieces) {
        nlohmann::json sh = nlohmann::json::object();
        for (const auto& [q, h] : p.source_homology) sh[std::to_string(q)] = h;
        pieces.push_back({{"level", p.level},
                          {"source_homology", sh},
                          {"target_dim", p.target_dim},
                          {"map_rank", p.map_rank},
                          {"quasi_iso", p.quasi_iso}});
    }
    return {{"letters", a.target.letters},
            {"commutes", a.commutes},
            {"filtration_preserved", a.filtration_preserved},
            {"pieces", pieces},
            {"filtered_quasi_iso", a.filtered_quasi_iso}};
}

punctual_report punctual_graded_check(const std::vector<std::string>& alphabet,
                                      std::vector<int> t) {
    if (t.empty()) throw std::invalid_argument("punctual_graded_check: empty multiset");
    for (int v : t)
        if (v < 0 || v >= static_cast<int>(alphabet.size()))
            throw std::invalid_argument("punctual_graded_check: letter out of range");
    std::sort(t.begin(), t.end());

    punctual_report rep;
    int k = static_cast<int>(t.size());
    finite_poset sp = multiset_poset(alphabet, k, false);

    std::string id;
    for (int v : t) id += alphabet[v];
    rep.target = id;
    rep.is_set = std::adjacent_find(t.begin(), t.end()) == t.end();

    int ti = sp.index_of(id);
    finite_poset open_iv = sp.induced(sp.strict_down(ti));
    rep.betti = betti(chain_complex(nerve(open_iv)), true);

    if (rep.is_set) {
        std::map<int, long long> expect{{k - 2, 1}};
        rep.concentration_ok = rep.betti == expect;

        qmatrix minus_one(1, 1);
        minus_one.at(0, 0) = -1;
        rep.transpositions_ok = true;
        for (int i = 0; i + 1 < k; ++i) {
            const std::string& x = alphabet[t[i]];
            const std::string& y = alphabet[t[i + 1]];
            std::map<std::string, std::string> f;
            for (const auto& w : open_iv.elements()) {
                // w is a concatenation of sorted alphabet letters; swap x and y
                std::vector<std::string> letters_of;
                size_t pos = 0;
                while (pos < w.size()) {
                    for (const auto& a : alphabet) {
                        if (w.compare(pos, a.size(), a) == 0) {
                            letters_of.push_back(a == x ? y : a == y ? x : a);
                            pos += a.size();
                            break;
                        }
                    }
                }
                std::sort(letters_of.begin(), letters_of.end());
                std::string img;
                for (const auto& a : letters_of) img += a;
                f[w] = img;
            }
            auto act = induced_map(open_iv, open_iv, f, true);
            auto it = act.homology_action.find(k - 2);
            if (!act.chain_map_ok || it == act.homology_action.end() || !(it->second == minus_one))
                rep.transpositions_ok = false;
        }
    } else {
        rep.concentration_ok = rep.betti.empty();
        rep.transpositions_ok = true;
    }

    rep.pass = rep.concentration_ok && rep.transpositions_ok;
    return rep;
}

}
