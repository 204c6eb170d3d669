#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <vector>

#include "pie/ffield.hpp"
#include "pie/motivic.hpp"

using namespace pie;

namespace {

long long at_q(const lpoly& p, long long q) {
    return p.eval_int(bigint(q)).convert_to<long long>();
}

long long llpow(long long q, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= q;
    return r;
}

}  // namespace

TEST_CASE("primality helper") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(5));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(4));
    CHECK_FALSE(is_prime(91));
}

TEST_CASE("squarefree monic counts by exhaustion") {
    CHECK(count_squarefree_monic(2, 0) == 1);
    CHECK(count_squarefree_monic(3, 1) == 3);
    CHECK(count_squarefree_monic(2, 2) == 2);
    CHECK(count_squarefree_monic(2, 3) == 4);
    CHECK(count_squarefree_monic(2, 4) == 8);
    CHECK(count_squarefree_monic(3, 2) == 6);
    CHECK_THROWS_AS(count_squarefree_monic(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(count_squarefree_monic(2, -1), std::invalid_argument);
    CHECK_THROWS_AS(count_squarefree_monic(2, 40), cost_guard_error);
}

TEST_CASE("squarefree counts match the specialized configuration series") {
    mot_series cfg = config_gf(cellular_variety{{1}}, 6);
    for (long long q : {2LL, 3LL, 5LL})
        for (int k = 0; k <= 6; ++k)
            CHECK(count_squarefree_monic(q, k) == at_q(cfg.at(k), q));
}

TEST_CASE("colored configurations on the affine line") {
    CHECK(count_colored_configs(2, {1, 1}) == 2);
    CHECK(count_colored_configs(2, {1, 2}) == 2);
    CHECK(count_colored_configs(2, {2, 1}) == 2);
    CHECK(count_colored_configs(2, {1, 1, 1}) == 0);
    CHECK(count_colored_configs(3, {1, 1}) == 6);
    CHECK(count_colored_configs(3, {1, 1, 1}) == 6);
    CHECK(count_colored_configs(2, {2}) == 2);
    CHECK(count_colored_configs(2, {3}) == 4);
    CHECK_THROWS_AS(count_colored_configs(2, {}), std::invalid_argument);
    CHECK_THROWS_AS(count_colored_configs(2, {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(count_colored_configs(6, {1}), std::invalid_argument);
}

TEST_CASE("colored configurations on the projective line") {
    CHECK(count_colored_configs_p1(2, {1}) == 3);
    CHECK(count_colored_configs_p1(2, {2}) == 4);
    CHECK(count_colored_configs_p1(2, {1, 1}) == 6);
    CHECK(count_colored_configs_p1(3, {1}) == 4);
    CHECK(count_colored_configs_p1(3, {2}) == 9);
    CHECK(count_colored_configs_p1(3, {1, 1}) == 12);
    // q^2 - q rational pairs plus one zero at infinity per slot
    for (long long q : {2LL, 3LL, 5LL})
        CHECK(count_colored_configs_p1(q, {1, 1}) == q * q + q);
    CHECK_THROWS_AS(count_colored_configs_p1(2, {}), std::invalid_argument);
}

TEST_CASE("effective divisor counts specialize the zeta coefficients") {
    mot_series za = kapranov_zeta(cellular_variety{{1}}, 5);
    mot_series zp = kapranov_zeta(cellular_variety{{0, 1}}, 5);
    for (long long q : {2LL, 3LL}) {
        for (int k = 0; k <= 5; ++k) {
            CHECK(count_divisors_a1(q, k) == llpow(q, k));
            CHECK(count_divisors_a1(q, k) == at_q(za.at(k), q));
            CHECK(count_divisors_p1(q, k) == (llpow(q, k + 1) - 1) / (q - 1));
            CHECK(count_divisors_p1(q, k) == at_q(zp.at(k), q));
        }
    }
}

TEST_CASE("inversion route comparison at point counts") {
    vw_report r2 = vw_inversion_check(2, 3);
    CHECK(r2.pass);
    CHECK(r2.counted == std::vector<long long>{1, -2, 0, 0});
    CHECK(r2.counted == r2.specialized);

    // the worked cancellations behind the zero coefficients
    CHECK(count_colored_configs(2, {1, 1}) - count_colored_configs(2, {2}) == 0);
    CHECK(-count_colored_configs(2, {3}) + count_colored_configs(2, {1, 2}) +
              count_colored_configs(2, {2, 1}) - count_colored_configs(2, {1, 1, 1}) ==
          0);

    CHECK(vw_inversion_check(3, 3).counted == std::vector<long long>{1, -3, 0, 0});
    CHECK(vw_inversion_check(2, 0).counted == std::vector<long long>{1});
    for (long long q : {2LL, 3LL})
        for (int n = 0; n <= 4; ++n) CHECK(vw_inversion_check(q, n).pass);
    CHECK_THROWS_AS(vw_inversion_check(2, 7), cost_guard_error);
    CHECK_THROWS_AS(vw_inversion_check(9, 2), std::invalid_argument);
}

TEST_CASE("smooth section counts and the stable closed form") {
    CHECK(count_smooth_sections_p1(2, 1) == 3);
    CHECK(count_smooth_sections_p1(2, 2) == 4);
    CHECK(count_smooth_sections_p1(2, 3) == 6);
    CHECK(count_smooth_sections_p1(3, 3) == 48);
    for (long long q : {2LL, 3LL})
        for (int d = 3; d <= 7; ++d)
            CHECK(count_smooth_sections_p1(q, d) == (q - 1) * (llpow(q, d) - llpow(q, d - 2)));
    for (int d : {3, 4})
        CHECK(count_smooth_sections_p1(5, d) == 4 * (llpow(5, d) - llpow(5, d - 2)));
    CHECK_THROWS_AS(count_smooth_sections_p1(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(count_smooth_sections_p1(3, 30), cost_guard_error);
}

TEST_CASE("truncated discriminant counts and their residuals") {
    ie_report r = truncated_ie_discriminant(2, 5, 1);
    CHECK(r.exact == 64 - 24);
    CHECK(r.truncated_sum == 3 * 16);
    CHECK(r.residual == -8);

    CHECK(truncated_ie_discriminant(2, 5, 2).residual == 0);
    CHECK(truncated_ie_discriminant(2, 7, 2).residual == 0);

    ie_report r3 = truncated_ie_discriminant(3, 5, 1);
    CHECK(r3.exact == 729 - 432);
    CHECK(r3.truncated_sum == 4 * 81);
    CHECK(r3.residual == -27);
    CHECK(truncated_ie_discriminant(3, 5, 2).residual == 0);

    for (long long q : {2LL, 3LL})
        for (int d : {5, 6, 7})
            for (int k : {1, 2}) {
                ie_report e = truncated_ie_discriminant(q, d, k);
                CHECK(std::abs(e.residual) <= llpow(q, d - k));
                CHECK(e.exact - e.truncated_sum == e.residual);
            }

    CHECK_THROWS_AS(truncated_ie_discriminant(2, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(truncated_ie_discriminant(2, 40, 1), cost_guard_error);
}

TEST_CASE("density table against the limiting special value") {
    density_result d2 = density_report(2, 6);
    CHECK(d2.limit == rat(3, 8));
    CHECK(d2.rows.size() == 6);
    CHECK(d2.rows[0].density == rat(3, 4));
    CHECK(d2.rows[1].density == rat(1, 2));
    CHECK(d2.rows[2].density == rat(3, 8));
    CHECK(d2.first_exact_d == 3);
    for (const auto& row : d2.rows)
        if (row.d >= 3) CHECK(row.density == d2.limit);

    density_result d3 = density_report(3, 5);
    CHECK(d3.limit == rat(16, 27));
    CHECK(d3.first_exact_d == 3);

    density_result d5 = density_report(5, 4);
    CHECK(d5.rows[3].density == rat(96, 125));
    CHECK(d5.limit == rat(96, 125));

    CHECK_THROWS_AS(density_report(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(density_report(10, 3), std::invalid_argument);
}

TEST_CASE("limit value matches the motivic stable limit at L to q") {
    stable_limit_t sl = stable_limit(cellular_variety{{0, 1}}, 2, 3);
    for (long long q : {2LL, 3LL, 5LL}) {
        rat value = sl.series.eval_rat(rat(1, q));
        CHECK(density_report(q, 3).limit == value);
    }
}

TEST_CASE("counters are pure functions of their arguments") {
    CHECK(count_squarefree_monic(3, 4) == count_squarefree_monic(3, 4));
    CHECK(count_smooth_sections_p1(3, 5) == count_smooth_sections_p1(3, 5));
    CHECK(count_colored_configs_p1(2, {2, 1}) == count_colored_configs_p1(2, {2, 1}));
}
