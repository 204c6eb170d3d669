#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "pie/chain.hpp"
#include "pie/families.hpp"
#include "pie/numbers.hpp"
#include "pie/spectral.hpp"
#include "pie/zerocycles.hpp"

using namespace pie;

namespace {

std::vector<std::vector<int>> all_tuples(int letters, int len) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(len, 0);
    while (true) {
        out.push_back(cur);
        int i = len - 1;
        while (i >= 0 && ++cur[i] == letters) cur[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

int inversion_sign(const std::vector<int>& u) {
    int inv = 0;
    for (size_t i = 0; i < u.size(); ++i)
        for (size_t j = i + 1; j < u.size(); ++j)
            if (u[i] > u[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

int skip(int i, int m) { return m < i ? m : m + 1; }

}  // namespace

TEST_CASE("multiset and composition enumeration is graded lexicographic") {
    CHECK(multisets_of(2, 2) == std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 1}});
    CHECK(multisets_of(3, 1) == std::vector<std::vector<int>>{{0}, {1}, {2}});
    CHECK(compositions_upto(1, 3) == std::vector<std::vector<int>>{{1}, {2}, {3}});
    CHECK(compositions_upto(2, 4) ==
          std::vector<std::vector<int>>{{1, 1}, {1, 2}, {2, 1}, {1, 3}, {2, 2}, {3, 1}});
    CHECK_THROWS_AS(compositions_upto(0, 3), std::invalid_argument);
}

TEST_CASE("one letter alphabet collapses every multiset space to a point") {
    auto e = skeletal_e1(1, 2);
    CHECK(e.degrees() == 2);
    CHECK(e.dim_at(0) == 2);
    CHECK(e.dim_at(1) == 1);
    CHECK(e.comps[0] == std::vector<std::vector<int>>{{1}, {2}});
    CHECK(e.comps[1] == std::vector<std::vector<int>>{{1, 1}});
    CHECK(e.filtered.level[0] == std::vector<long long>{0, 1});
    CHECK(e.filtered.level[1] == std::vector<long long>{1});
}

TEST_CASE("two letter dimensions count sorted tuples of sorted multisets") {
    auto e = skeletal_e1(2, 2);
    CHECK(e.dim_at(0) == 5);
    CHECK(e.dim_at(1) == 4);
    CHECK(e.summand_dim(0, 0) == 2);
    CHECK(e.summand_dim(0, 1) == 3);
    CHECK(e.summand_dim(1, 0) == 4);
    CHECK(e.filtered.complex.labels[1] ==
          std::vector<std::string>{"a|a", "a|b", "b|a", "b|b"});
    CHECK_THROWS_AS(skeletal_e1(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(skeletal_e1(2, 0), std::invalid_argument);
}

TEST_CASE("summand dimensions are products of multichoose counts") {
    auto e = skeletal_e1(3, 4);
    for (int q = 0; q < e.degrees(); ++q) {
        for (int ci = 0; ci < static_cast<int>(e.comps[q].size()); ++ci) {
            bigint expect = 1;
            for (int a : e.comps[q][ci]) expect *= multichoose(3, a);
            CHECK(bigint(e.summand_dim(q, ci)) == expect);
        }
    }
}

TEST_CASE("merge and forget pullbacks square to zero") {
    auto e = skeletal_e1(3, 3);
    CHECK(verify_complex(e.filtered.complex));
    CHECK(rank(e.filtered.complex.boundary[1]) > 0);
    CHECK_NOTHROW(verify_filtration(e.filtered));
}

TEST_CASE("antisymmetric term dimensions are binomial") {
    auto b3 = banerjee_complex(3, 2);
    CHECK(b3.dim_at(0) == 3);
    CHECK(b3.dim_at(1) == 3);
    CHECK(b3.dim_at(2) == 1);
    CHECK(verify_complex(b3.complex));
    auto b4 = banerjee_complex(4, 3);
    CHECK(b4.dim_at(0) == 4);
    CHECK(b4.dim_at(1) == 6);
    CHECK(b4.dim_at(2) == 4);
    CHECK(b4.dim_at(3) == 1);
    CHECK(verify_complex(b4.complex));
}

TEST_CASE("subset differential agrees with the full pullback complex on sign functions") {
    const int n = 3;
    auto b = banerjee_complex(n, 2);
    for (int p = 1; p <= 2; ++p) {
        auto src = all_tuples(n, p);
        auto dst = all_tuples(n, p + 1);
        std::map<std::vector<int>, int> src_idx, dst_idx;
        for (int i = 0; i < static_cast<int>(src.size()); ++i) src_idx[src[i]] = i;
        for (int i = 0; i < static_cast<int>(dst.size()); ++i) dst_idx[dst[i]] = i;

        for (int ss = 0; ss < static_cast<int>(b.basis[p - 1].size()); ++ss) {
            const auto& S = b.basis[p - 1][ss];
            std::vector<long long> f(src.size(), 0);
            for (const auto& u : src) {
                auto sorted = u;
                std::sort(sorted.begin(), sorted.end());
                if (sorted == S &&
                    std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end())
                    f[src_idx[u]] = inversion_sign(u);
            }
            // alternating sum of coordinate-forgetting pullbacks of f
            std::vector<long long> v(dst.size(), 0);
            for (const auto& t : dst) {
                for (int i = 0; i <= p; ++i) {
                    std::vector<int> d;
                    for (int m = 0; m <= p; ++m)
                        if (m != i) d.push_back(t[m]);
                    v[dst_idx[t]] += (i % 2 == 0 ? 1 : -1) * f[src_idx[d]];
                }
            }
            // the image is antisymmetric in adjacent coordinates
            for (const auto& t : dst) {
                for (int j = 0; j + 1 <= p; ++j) {
                    auto s = t;
                    std::swap(s[j], s[j + 1]);
                    CHECK(v[dst_idx[t]] == -v[dst_idx[s]]);
                }
            }
            // and its subset coordinates match the stored differential
            for (int tt = 0; tt < static_cast<int>(b.basis[p].size()); ++tt) {
                const auto& T = b.basis[p][tt];
                CHECK(b.complex.boundary[p].at(ss, tt) == rat(v[dst_idx[T]]));
            }
        }
    }
}

TEST_CASE("antisymmetrization of the two letter complex by hand") {
    auto e = skeletal_e1(2, 2);
    auto a = asym(e);
    CHECK(a.commutes);
    CHECK(a.filtration_preserved);
    CHECK(a.filtered_quasi_iso);

    REQUIRE(a.maps[0].rows() == 2);
    REQUIRE(a.maps[0].cols() == 5);
    CHECK(a.maps[0].at(0, 0) == 1);
    CHECK(a.maps[0].at(1, 1) == 1);
    CHECK(a.maps[0].at(0, 1) == 0);
    CHECK(a.maps[0].at(1, 0) == 0);
    // columns over the size-two summand vanish
    for (int r = 0; r < 2; ++r)
        for (int c = 2; c < 5; ++c) CHECK(a.maps[0].at(r, c) == 0);

    REQUIRE(a.maps[1].rows() == 1);
    REQUIRE(a.maps[1].cols() == 4);
    CHECK(a.maps[1].at(0, 0) == 0);
    CHECK(a.maps[1].at(0, 1) == 1);
    CHECK(a.maps[1].at(0, 2) == -1);
    CHECK(a.maps[1].at(0, 3) == 0);

    REQUIRE(a.pieces.size() == 2);
    CHECK(a.pieces[0].target_dim == 2);
    CHECK(a.pieces[0].source_homology == std::map<int, long long>{{0, 2}});
    CHECK(a.pieces[1].target_dim == 1);
    CHECK(a.pieces[1].source_homology == std::map<int, long long>{{1, 1}});
    CHECK(a.pieces[1].map_rank == 1);
    CHECK(a.pieces[1].quasi_iso);

    CHECK_THROWS_AS(asym(e, banerjee_complex(2, 0)), std::invalid_argument);
    CHECK_THROWS_AS(asym(e, banerjee_complex(3, 1)), std::invalid_argument);

    auto j = asym_to_json(a);
    CHECK(j["filtered_quasi_iso"] == true);
    CHECK(j.dump() == asym_to_json(asym(e)).dump());
}

TEST_CASE("antisymmetrization is a filtered quasi isomorphism at desk scale") {
    for (int n = 1; n <= 3; ++n) {
        for (int k = 1; k <= 4; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            auto e = skeletal_e1(n, k);
            auto a = asym(e);
            CHECK(a.commutes);
            CHECK(a.filtration_preserved);
            CHECK(a.filtered_quasi_iso);
            for (const auto& piece : a.pieces) CHECK(piece.quasi_iso);

            bigint chi_e = 0, chi_b = 0;
            for (int q = 0; q < e.degrees(); ++q)
                chi_e += (q % 2 == 0 ? 1 : -1) * bigint(e.dim_at(q));
            for (int p = 0; p < a.target.degrees(); ++p)
                chi_b += (p % 2 == 0 ? 1 : -1) * bigint(a.target.dim_at(p));
            CHECK(chi_e == chi_b);
        }
    }
}

TEST_CASE("per total Euler numbers invert the multiset counting series") {
    for (int n = 1; n <= 3; ++n) {
        const int k = 4;
        auto e = skeletal_e1(n, k);
        std::vector<bigint> inv(k + 1);
        inv[0] = 1;
        for (int m = 1; m <= k; ++m) {
            bigint s = 0;
            for (int j = 1; j <= m; ++j) s += multichoose(n, j) * inv[m - j];
            inv[m] = -s;
        }
        std::vector<bigint> chi(k + 1);
        for (int q = 0; q < e.degrees(); ++q) {
            for (int ci = 0; ci < static_cast<int>(e.comps[q].size()); ++ci) {
                int total = std::accumulate(e.comps[q][ci].begin(), e.comps[q][ci].end(), 0);
                chi[total] += (q % 2 == 0 ? -1 : 1) * bigint(e.summand_dim(q, ci));
            }
        }
        for (int m = 1; m <= k; ++m) {
            CAPTURE(n);
            CAPTURE(m);
            CHECK(chi[m] == inv[m]);
        }
    }
}

TEST_CASE("coordinate forgetting intertwines permutations through rotation cycles") {
    for (int p = 1; p <= 4; ++p) {
        std::vector<int> sigma(p + 1);
        std::iota(sigma.begin(), sigma.end(), 0);
        do {
            for (int i = 0; i <= p; ++i) {
                int j = sigma[i];
                std::vector<int> up(p + 1), down(p + 1);
                std::iota(up.begin(), up.end(), 0);
                std::iota(down.begin(), down.end(), 0);
                for (int m = i; m < p; ++m) up[m] = m + 1;
                up[p] = i;
                for (int m = j + 1; m <= p; ++m) down[m] = m - 1;
                down[j] = p;
                auto tau = [&](int m) { return down[sigma[up[m]]]; };
                REQUIRE(tau(p) == p);
                for (int m = 0; m < p; ++m) CHECK(skip(j, tau(m)) == sigma[skip(i, m)]);
            }
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
}

TEST_CASE("punctual lower intervals: sets give one sign line, repeats vanish") {
    auto r3 = punctual_graded_check(default_alphabet(3), {0, 1, 2});
    CHECK(r3.is_set);
    CHECK(r3.betti == std::map<int, long long>{{1, 1}});
    CHECK(r3.concentration_ok);
    CHECK(r3.transpositions_ok);
    CHECK(r3.pass);

    auto rxx = punctual_graded_check(default_alphabet(2), {0, 0});
    CHECK(!rxx.is_set);
    CHECK(rxx.betti.empty());
    CHECK(rxx.pass);

    auto rx = punctual_graded_check(default_alphabet(1), {0});
    CHECK(rx.is_set);
    CHECK(rx.betti == std::map<int, long long>{{-1, 1}});
    CHECK(rx.pass);

    CHECK_THROWS_AS(punctual_graded_check(default_alphabet(2), {}), std::invalid_argument);
    CHECK_THROWS_AS(punctual_graded_check(default_alphabet(2), {5}), std::invalid_argument);
}

TEST_CASE("punctual check passes for every multiset of size <= 4 over alphabets <= 4") {
    for (int n = 1; n <= 4; ++n) {
        for (int m = 1; m <= 4; ++m) {
            for (const auto& t : multisets_of(n, m)) {
                auto rep = punctual_graded_check(default_alphabet(n), t);
                CAPTURE(rep.target);
                CHECK(rep.pass);
            }
        }
    }
}

TEST_CASE("the filtration drives the spectral engine to the antisymmetric dimensions") {
    auto e = skeletal_e1(2, 3);
    auto ss = spectral_sequence(e.filtered);
    CHECK(ss.converges);
    CHECK(ss.bookkeeping_ok);
    CHECK(ss.euler_page_invariant);
    std::map<std::pair<int, int>, long long> expect{{{0, 0}, 2}, {{1, 0}, 1}};
    CHECK(ss.pages[0] == expect);
}
