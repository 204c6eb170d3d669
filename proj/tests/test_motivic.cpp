#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "pie/motivic.hpp"

using namespace pie;

namespace {

const cellular_variety kPoint{{0}};
const cellular_variety kAffineLine{{1}};
const cellular_variety kP1{{0, 1}};
const cellular_variety kP2{{0, 1, 2}};
const cellular_variety kP3{{0, 1, 2, 3}};
const cellular_variety kP1xP1{{0, 1, 1, 2}};

lpoly truncated_geometric(int top) {
    lpoly p;
    for (int i = 0; i <= top; ++i) p += lpoly::monomial(i);
    return p;
}

}  // namespace

TEST_CASE("cellular varieties round trip through json") {
    auto x = variety_from_json(nlohmann::json{{"type", "cellular"}, {"cells", {1, 0}}});
    CHECK(x.cells == std::vector<int>{0, 1});
    CHECK(x.dim() == 1);
    CHECK(x.class_of() == lpoly(1) + lpoly::monomial(1));
    CHECK(variety_from_json(variety_to_json(x)).cells == x.cells);

    CHECK_THROWS_AS(variety_from_json(nlohmann::json{{"type", "cellular"},
                                                     {"cells", nlohmann::json::array()}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(variety_from_json(nlohmann::json{{"type", "smooth"}, {"cells", {0}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(variety_from_json(nlohmann::json{{"type", "cellular"}, {"cells", {-1}}}),
                    std::invalid_argument);
}

TEST_CASE("zeta of a point, the affine line, and the projective line") {
    auto zp = kapranov_zeta(kPoint, 5);
    for (int k = 0; k <= 5; ++k) CHECK(zp.at(k) == lpoly(1));

    auto za = kapranov_zeta(kAffineLine, 5);
    for (int k = 0; k <= 5; ++k) CHECK(za.at(k) == lpoly::monomial(k));

    auto z1 = kapranov_zeta(kP1, 5);
    CHECK(z1.at(0) == lpoly(1));
    CHECK(z1.at(1) == truncated_geometric(1));
    CHECK(z1.at(2) == truncated_geometric(2));
    for (int k = 0; k <= 5; ++k) CHECK(z1.at(k) == truncated_geometric(k));

    // point counts of symmetric powers of the projective line
    for (bigint q : {bigint(2), bigint(3)}) {
        for (int k = 1; k <= 3; ++k) {
            bigint expect = (pow_bigint(q, k + 1) - 1) / (q - 1);
            CHECK(z1.at(k).eval_int(q) == expect);
        }
    }

    CHECK_THROWS_AS(kapranov_zeta(kP1, -1), std::invalid_argument);
}

TEST_CASE("series inversion by hand and as an involution") {
    auto m1 = invert(kapranov_zeta(kP1, 5));
    CHECK(m1.at(0) == lpoly(1));
    CHECK(m1.at(1) == -(lpoly(1) + lpoly::monomial(1)));
    CHECK(m1.at(2) == lpoly::monomial(1));
    for (int k = 3; k <= 5; ++k) CHECK(m1.at(k).is_zero());

    auto ma = invert(kapranov_zeta(kAffineLine, 5));
    CHECK(ma.at(0) == lpoly(1));
    CHECK(ma.at(1) == -lpoly::monomial(1));
    for (int k = 2; k <= 5; ++k) CHECK(ma.at(k).is_zero());

    std::mt19937_64 rng(42);
    mot_series s = mot_series::one(6);
    for (int k = 1; k <= 6; ++k) {
        lpoly c;
        for (int e = -2; e <= 3; ++e)
            c += lpoly::monomial(e, bigint(static_cast<long long>(rng() % 11) - 5));
        s.coeff[k] = c;
    }
    CHECK(invert(invert(s)) == s);
    CHECK(invert(s) * s == mot_series::one(6));

    mot_series bad = mot_series::one(3);
    bad.coeff[0] = lpoly(2);
    CHECK_THROWS_AS(invert(bad), std::invalid_argument);
}

TEST_CASE("inverse times original is one for produced zetas") {
    for (const auto& x : {kPoint, kAffineLine, kP1, kP2, kP1xP1}) {
        auto z = kapranov_zeta(x, 7);
        CHECK(invert(z) * z == mot_series::one(7));
    }
}

TEST_CASE("configuration generating functions") {
    auto cp = config_gf(kPoint, 4);
    CHECK(cp.at(0) == lpoly(1));
    CHECK(cp.at(1) == lpoly(1));
    for (int k = 2; k <= 4; ++k) CHECK(cp.at(k).is_zero());

    auto ca = config_gf(kAffineLine, 4);
    CHECK(ca.at(0) == lpoly(1));
    CHECK(ca.at(1) == lpoly::monomial(1));
    CHECK(ca.at(2) == lpoly::monomial(2) - lpoly::monomial(1));
    CHECK(ca.at(3) == lpoly::monomial(3) - lpoly::monomial(2));
    CHECK(ca.at(4) == lpoly::monomial(4) - lpoly::monomial(3));

    auto c1 = config_gf(kP1, 4);
    CHECK(c1.at(1) == lpoly(1) + lpoly::monomial(1));
    CHECK(c1.at(2) == lpoly::monomial(2));
    CHECK(c1.at(3) == lpoly::monomial(3) - lpoly::monomial(1));
    CHECK(c1.at(2).eval_int(2) == 4);
    CHECK(c1.at(2).eval_int(3) == 9);
    CHECK(c1.at(3).eval_int(2) == 6);
}

TEST_CASE("signed composition sums match the series inverse") {
    CHECK(mu_terms_gamma(kP1, 1) == -(lpoly(1) + lpoly::monomial(1)));
    CHECK(mu_terms_gamma(kP1, 2) == lpoly::monomial(1));
    CHECK_THROWS_AS(mu_terms_gamma(kP1, 0), std::invalid_argument);

    for (const auto& x : {kP1, kP2, kP3, kP1xP1}) {
        auto mu = invert(kapranov_zeta(x, 8));
        for (int k = 1; k <= 8; ++k) CHECK(mu_terms_gamma(x, k) == mu.at(k));
    }
}

TEST_CASE("zeta is multiplicative over disjoint union and shifts under a product line") {
    cellular_variety x{{0, 1, 1}};
    cellular_variety y{{1, 2}};
    cellular_variety both{{0, 1, 1, 1, 2}};
    CHECK(kapranov_zeta(both, 6) == kapranov_zeta(x, 6) * kapranov_zeta(y, 6));

    cellular_variety shifted{{1, 2, 2, 3}};
    CHECK(kapranov_zeta(shifted, 6) == scale_t(kapranov_zeta(kP1xP1, 6), 1));
}

TEST_CASE("truncation bookkeeping is explicit") {
    auto a = kapranov_zeta(kP1, 6);
    auto b = kapranov_zeta(kP2, 3);
    CHECK((a * b).trunc == 3);
    CHECK((a + b).trunc == 3);
    CHECK(substitute_power(b, 2).trunc == 7);
    CHECK(scale_t(b, 2).trunc == 3);
    CHECK(truncate(a, 2).trunc == 2);
    CHECK_THROWS_AS(truncate(b, 5), std::invalid_argument);
    CHECK_THROWS_AS(a.at(7), std::out_of_range);
}

TEST_CASE("stable limits collect inverse zeta values by powers of one over L") {
    auto p1 = stable_limit(kP1, 2, 3);
    lpoly expect1 = lpoly(1) - lpoly::monomial(1) - lpoly::monomial(2) + lpoly::monomial(3);
    CHECK(p1.series == expect1);
    CHECK(p1.trunc == 3);

    CHECK(stable_limit(kPoint, 1, 5).series == lpoly(1) - lpoly::monomial(1));
    CHECK(stable_limit(kAffineLine, 2, 4).series == lpoly(1) - lpoly::monomial(1));

    auto p2 = stable_limit(kP2, 3, 6);
    lpoly expect2 = lpoly(1) - lpoly::monomial(1) - lpoly::monomial(2) + lpoly::monomial(4) +
                    lpoly::monomial(5) - lpoly::monomial(6);
    CHECK(p2.series == expect2);

    auto pp = stable_limit(kP1xP1, 3, 8);
    lpoly expectpp = lpoly(1) - lpoly::monomial(1) - lpoly::monomial(2, bigint(2)) +
                     lpoly::monomial(3) + lpoly::monomial(4, bigint(2)) + lpoly::monomial(5) -
                     lpoly::monomial(6, bigint(2)) - lpoly::monomial(7) + lpoly::monomial(8);
    CHECK(pp.series == expectpp);

    CHECK_THROWS_AS(stable_limit(kP1, 1, 4), truncation_error);
    CHECK_THROWS_AS(stable_limit(kAffineLine, 1, 4), truncation_error);
    CHECK_THROWS_AS(stable_limit(kP1, 0, 4), std::invalid_argument);
}

TEST_CASE("series json is deterministic") {
    auto j = series_to_json(kapranov_zeta(kP1, 3));
    CHECK(j["N"] == 3);
    CHECK(j["coefficients"].size() == 4);
    CHECK(j.dump() == series_to_json(kapranov_zeta(kP1, 3)).dump());
}
