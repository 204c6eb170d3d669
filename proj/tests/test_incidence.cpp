#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pie/families.hpp"
#include "pie/incidence.hpp"
#include "pie/lpoly.hpp"

using namespace pie;

namespace {

incidence_element<bigint> random_element(const incidence_context& ctx, unsigned seed) {
    std::mt19937 rng(seed);
    incidence_element<bigint> f{&ctx, {}};
    for (size_t i = 0; i < ctx.pairs().size(); ++i)
        f.value.push_back(bigint(static_cast<long long>(rng() % 19) - 9));
    return f;
}

bigint mu_of(const incidence_element<bigint>& mu, const finite_poset& p, const std::string& a,
             const std::string& b) {
    return mu.at(p.index_of(a), p.index_of(b));
}

}

TEST_CASE("convolution identities") {
    incidence_context ctx(boolean_poset(3));
    auto d = delta_element<bigint>(ctx);
    for (unsigned seed = 0; seed < 5; ++seed) {
        auto f = random_element(ctx, seed);
        CHECK(convolve(d, f) == f);
        CHECK(convolve(f, d) == f);
    }

    incidence_context chain(chain_poset(5));
    auto z = zeta_element<bigint>(chain);
    auto zz = convolve(z, z);
    CHECK(zz.at(chain.poset().index_of("0"), chain.poset().index_of("4")) == 5);
}

TEST_CASE("convolution is associative") {
    incidence_context ctx(divisor_poset(30));
    for (unsigned seed = 0; seed < 4; ++seed) {
        auto f = random_element(ctx, 3 * seed);
        auto g = random_element(ctx, 3 * seed + 1);
        auto h = random_element(ctx, 3 * seed + 2);
        CHECK(convolve(convolve(f, g), h) == convolve(f, convolve(g, h)));
    }
}

TEST_CASE("mobius by inversion") {
    finite_poset b3 = boolean_poset(3);
    incidence_context ctx(b3);
    auto mu = mobius_by_inversion<bigint>(ctx);
    CHECK(mu_of(mu, b3, "-", "123") == -1);
    CHECK(mu_of(mu, b3, "-", "12") == 1);
    CHECK(mu_of(mu, b3, "1", "12") == -1);
    CHECK(mu_of(mu, b3, "1", "1") == 1);

    finite_poset d12 = divisor_poset(12);
    incidence_context c12(d12);
    auto mu12 = mobius_by_inversion<bigint>(c12);
    CHECK(mu_of(mu12, d12, "1", "12") == 0);
    CHECK(mu_of(mu12, d12, "1", "6") == 1);

    finite_poset d30 = divisor_poset(30);
    incidence_context c30(d30);
    auto mu30 = mobius_by_inversion<bigint>(c30);
    CHECK(mu_of(mu30, d30, "1", "30") == -1);

    incidence_context chain(chain_poset(6));
    auto muc = mobius_by_inversion<bigint>(chain);
    for (size_t i = 0; i < chain.pairs().size(); ++i) {
        const auto [a, b] = chain.pairs()[i];
        if (a == b)
            CHECK(muc.value[i] == 1);
        else if (chain.between(static_cast<int>(i)).size() == 2)
            CHECK(muc.value[i] == -1);
        else
            CHECK(muc.value[i] == 0);
    }
}

TEST_CASE("mobius topologically") {
    finite_poset b3 = boolean_poset(3);
    incidence_context ctx(b3);
    auto mu = mobius_topological(ctx);
    // six proper nonempty subsets chain-count to 6 - 12 + 6, reduced -1
    CHECK(mu_of(mu, b3, "-", "123") == -1);
    CHECK(mu_of(mu, b3, "1", "12") == -1);  // covering pair, empty open interval
    CHECK(mu_of(mu, b3, "12", "12") == 1);
}

TEST_CASE("the two mobius routes agree") {
    std::vector<finite_poset> corpus;
    corpus.push_back(boolean_poset(4));
    corpus.push_back(divisor_poset(60));
    corpus.push_back(multiset_poset(default_alphabet(2), 3, false));
    corpus.push_back(multiset_poset(default_alphabet(3), 2, true));
    for (unsigned long long seed = 0; seed < 10; ++seed) corpus.push_back(random_poset(8, seed, 35));
    for (const auto& p : corpus) {
        incidence_context ctx(p);
        auto a = mobius_by_inversion<bigint>(ctx);
        auto b = mobius_topological(ctx);
        CHECK(a == b);
    }
}

TEST_CASE("mobius is the convolution inverse of zeta") {
    std::vector<finite_poset> corpus;
    corpus.push_back(boolean_poset(3));
    corpus.push_back(divisor_poset(60));
    for (unsigned long long seed = 0; seed < 6; ++seed) corpus.push_back(random_poset(7, seed, 40));
    for (const auto& p : corpus) {
        incidence_context ctx(p);
        auto mu = mobius_by_inversion<bigint>(ctx);
        auto z = zeta_element<bigint>(ctx);
        auto d = delta_element<bigint>(ctx);
        CHECK(convolve(mu, z) == d);
        CHECK(convolve(z, mu) == d);
        CHECK(convolution_inverse(z) == mu);
    }
}

TEST_CASE("rational and laurent coefficients") {
    incidence_context ctx(boolean_poset(2));
    auto zq = zeta_element<rat>(ctx);
    auto muq = mobius_by_inversion<rat>(ctx);
    CHECK(convolve(zq, muq) == delta_element<rat>(ctx));

    auto zl = zeta_element<lpoly>(ctx);
    incidence_element<lpoly> scaled{&ctx, {}};
    for (const auto& v : zl.value) scaled.value.push_back(v * lpoly::monomial(1));
    auto prod = convolve(scaled, scaled);
    auto plain = convolve(zl, zl);
    for (size_t i = 0; i < prod.value.size(); ++i)
        CHECK(prod.value[i] == plain.value[i] * lpoly::monomial(2));
}

TEST_CASE("errors") {
    incidence_context a(chain_poset(2));
    incidence_context b(chain_poset(2));
    CHECK_THROWS_AS(convolve(zeta_element<bigint>(a), zeta_element<bigint>(b)), std::invalid_argument);
    auto z = zeta_element<bigint>(a);
    CHECK_THROWS_AS(z.at(1, 0), std::invalid_argument);
    auto f = z;
    f.value[0] = 7;
    CHECK_THROWS_AS(convolution_inverse(f), std::invalid_argument);
}
