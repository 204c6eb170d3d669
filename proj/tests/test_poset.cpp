#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pie/families.hpp"
#include "pie/poset.hpp"
#include "pie/poset_io.hpp"

using namespace pie;

namespace {

finite_poset two_antichain() { return finite_poset({"a", "b"}, {}); }

std::vector<std::string> ids_of(const finite_poset& p) { return p.elements(); }

}

TEST_CASE("construction validates the order") {
    CHECK_THROWS_AS(finite_poset({"a", "a"}, {}), std::invalid_argument);
    CHECK_THROWS_AS(finite_poset({"a", "b"}, {{"a", "c"}}), std::invalid_argument);
    CHECK_THROWS_AS(finite_poset({"a", "b"}, {{"a", "b"}, {"b", "a"}}), std::invalid_argument);
    CHECK_THROWS_AS(finite_poset({"__x"}, {}), std::invalid_argument);
    CHECK_THROWS_AS(finite_poset({"a", "b"}, {{"a", "b"}}, {{"a", 1}, {"b", 1}}), std::invalid_argument);
    CHECK_THROWS_AS(finite_poset({"a", "b"}, {{"a", "b"}}, {}, {{"a", "u"}, {"b", "v"}}),
                    std::invalid_argument);

    // covering pairs close transitively
    finite_poset c({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}});
    CHECK(c.leq("x", "z"));
    CHECK(verify_order_axioms(c));
}

TEST_CASE("interval endpoints") {
    finite_poset c = chain_poset(3);
    finite_poset mid = interval(c, std::string("0"), std::string("2"), true, true);
    CHECK(ids_of(mid) == std::vector<std::string>{"1"});

    finite_poset b = boolean_poset(3);
    finite_poset nonempty_proper = interval(b, std::string("-"), std::string("123"), true, true);
    CHECK(nonempty_proper.size() == 6);
    CHECK(interval(b, std::nullopt, std::string("123"), true, true).size() == 7);

    finite_poset anti = two_antichain();
    CHECK(interval(anti, std::string("a"), std::string("b"), true, true).size() == 0);

    CHECK_THROWS_AS(interval(c, std::string("9"), std::nullopt, false, true), std::invalid_argument);
}

TEST_CASE("interval materializes sentinels on closed missing endpoints") {
    finite_poset anti = two_antichain();
    finite_poset capped = interval(anti, std::nullopt, std::nullopt, false, false);
    CHECK(capped.size() == 4);
    CHECK(capped.contains("__bot__"));
    CHECK(capped.contains("__top__"));
    CHECK(capped.leq("__bot__", "__top__"));
    CHECK(capped.leq("__bot__", "a"));
    CHECK(capped.leq("b", "__top__"));
    CHECK(euler_characteristics(capped).chi == 1);
    CHECK(find_center(capped) == std::optional<std::string>("__bot__"));
}

TEST_CASE("centers, maxima, minima") {
    finite_poset c = chain_poset(3);
    CHECK(find_center(c) == std::optional<std::string>("0"));
    CHECK(find_maximum(c) == std::optional<std::string>("2"));
    CHECK(find_minimum(c) == std::optional<std::string>("0"));

    CHECK(!find_center(two_antichain()).has_value());

    finite_poset s2 = multiset_poset({"x", "y"}, 2, false);
    CHECK(s2.size() == 5);
    CHECK(!find_center(s2).has_value());
    CHECK(!find_maximum(s2).has_value());
}

TEST_CASE("fiberwise centers") {
    finite_poset p({"a0", "a1", "b0", "b1"}, {{"a0", "a1"}}, {},
                   {{"a0", "u"}, {"a1", "u"}, {"b0", "v"}, {"b1", "v"}});
    auto centers = fiber_centers(p);
    CHECK(centers.at("u") == std::optional<std::string>("a0"));
    CHECK(!centers.at("v").has_value());
}

TEST_CASE("multiset family matches the covering relations") {
    finite_poset s2 = multiset_poset({"x", "y"}, 2, false);
    CHECK(ids_of(s2) == std::vector<std::string>{"x", "xx", "xy", "y", "yy"});
    auto cov = s2.covers();
    std::vector<std::pair<std::string, std::string>> named;
    for (auto [a, b] : cov) named.emplace_back(s2.id(a), s2.id(b));
    std::sort(named.begin(), named.end());
    std::vector<std::pair<std::string, std::string>> want = {
        {"x", "xx"}, {"x", "xy"}, {"y", "xy"}, {"y", "yy"}};
    CHECK(named == want);
}

TEST_CASE("falling retraction recovers the support map") {
    finite_poset s3 = multiset_poset({"x", "y"}, 3, false);
    std::vector<int> squarefree;
    for (int i = 0; i < s3.size(); ++i) {
        const std::string& id = s3.id(i);
        bool sf = true;
        for (size_t k = 1; k < id.size(); ++k)
            if (id[k] == id[k - 1]) sf = false;
        if (sf) squarefree.push_back(i);
    }
    finite_poset sub = s3.induced(squarefree);
    auto r = falling_retraction(s3, sub);
    REQUIRE(r.has_value());
    CHECK(r->at("xx") == "x");
    CHECK(r->at("xxy") == "xy");
    CHECK(r->at("yyy") == "y");
    CHECK(r->at("xy") == "xy");

    // retraction existence forces equal Euler characteristics
    CHECK(euler_characteristics(s3).chi == euler_characteristics(sub).chi);
}

TEST_CASE("falling retraction basics") {
    finite_poset c = chain_poset(3);
    auto r = falling_retraction(c, c.induced({0}));
    REQUIRE(r.has_value());
    CHECK(r->at("2") == "0");

    finite_poset anti = two_antichain();
    CHECK(!falling_retraction(anti, anti.induced({0})).has_value());

    // sub must carry the induced order
    finite_poset fake({"0", "2"}, {});
    CHECK_THROWS_AS(falling_retraction(c, fake), std::invalid_argument);
}

TEST_CASE("nerve enumerates strict chains") {
    finite_poset c = chain_poset(4);
    nerve_complex n = nerve(c);
    REQUIRE(n.dim() == 3);
    CHECK(n.simplices[0].size() == 4);
    CHECK(n.simplices[1].size() == 6);
    CHECK(n.simplices[2].size() == 4);
    CHECK(n.simplices[3].size() == 1);
    CHECK(n.label(1, 0) == "0<1");

    nerve_complex anti = nerve(antichain_poset(3));
    CHECK(anti.dim() == 0);
    CHECK(anti.simplices[0].size() == 3);

    // barycentric subdivision of the triangle boundary
    finite_poset b = boolean_poset(3);
    finite_poset proper = interval(b, std::string("-"), std::string("123"), true, true);
    nerve_complex sd = nerve(proper);
    CHECK(sd.simplices[0].size() == 6);
    CHECK(sd.simplices[1].size() == 6);
    CHECK(sd.dim() == 1);

    nerve_complex capped = nerve(config_poset(default_alphabet(3), 3));
    CHECK(capped.simplices[0].size() == 7);
    CHECK(capped.simplices[1].size() == 12);
    CHECK(capped.simplices[2].size() == 6);

    CHECK(nerve(c, 1).dim() == 1);
    CHECK_THROWS_AS(nerve(boolean_poset(5), std::nullopt, 10), cost_guard_error);
}

TEST_CASE("euler characteristics") {
    auto e = euler_characteristics(chain_poset(3));
    CHECK(e.chi == 1);
    CHECK(e.chains_by_size == std::vector<bigint>{3, 3, 1});

    finite_poset b = boolean_poset(3);
    auto circle = euler_characteristics(interval(b, std::string("-"), std::string("123"), true, true));
    CHECK(circle.chi == 0);
    CHECK(circle.chi_reduced == -1);

    auto empty = euler_characteristics(finite_poset());
    CHECK(empty.chi == 0);
    CHECK(empty.chi_reduced == -1);

    std::vector<int> proper;
    for (int i = 0; i < b.size(); ++i)
        if (b.id(i) != "-" && b.id(i) != "123") proper.push_back(i);
    CHECK(chi_reduced_of_subset(b, proper) == -1);
}

TEST_CASE("families") {
    CHECK(divisor_poset(12).size() == 6);
    CHECK(divisor_poset(12).rank_of(divisor_poset(12).index_of("12")) == 3);

    finite_poset coc = cone_above(antichain_poset(3));
    CHECK(euler_characteristics(coc).chi == 1);
    CHECK(find_center(coc) == std::optional<std::string>("__top__"));

    finite_poset j = join_posets(two_antichain(), two_antichain());
    CHECK(j.size() == 4);
    CHECK(j.leq("a:a", "b:b"));
    CHECK(!j.leq("a:a", "a:b"));

    finite_poset bary = barycentric(chain_poset(3));
    CHECK(bary.size() == 7);
    CHECK(euler_characteristics(bary).chi == euler_characteristics(chain_poset(3)).chi);

    finite_poset cfg = config_poset(default_alphabet(2), 2);
    CHECK(ids_of(cfg) == std::vector<std::string>{"a", "ab", "b"});

    CHECK(boolean_poset(0).size() == 1);
    CHECK_THROWS_AS(boolean_poset(10), std::invalid_argument);
    CHECK_THROWS_AS(divisor_poset(0), std::invalid_argument);
}

TEST_CASE("build_family dispatch") {
    using nlohmann::json;
    CHECK(build_family(json{{"family", "chain"}, {"n", 4}}).size() == 4);
    CHECK(build_family(json{{"family", "boolean"}, {"n", 3}}).size() == 8);
    CHECK(build_family(json{{"family", "divisor"}, {"n", 30}}).size() == 8);
    CHECK(build_family(json{{"family", "multiset"}, {"letters", 2}, {"k", 2}, {"with_bottom", true}})
              .size() == 6);
    CHECK(build_family(json{{"family", "cocone"}, {"of", {{"family", "antichain"}, {"n", 3}}}})
              .contains("__top__"));
    CHECK(build_family(json{{"elements", {"a", "b"}},
                            {"leq", json::array({json::array({"a", "b"})})}})
              .leq("a", "b"));
    CHECK_THROWS_AS(build_family(json{{"family", "nope"}}), std::invalid_argument);

    finite_poset r1 = build_family(json{{"family", "random"}, {"n", 8}, {"seed", 5}, {"density", 40}});
    finite_poset r2 = build_family(json{{"family", "random"}, {"n", 8}, {"seed", 5}, {"density", 40}});
    CHECK(write_poset(r1) == write_poset(r2));
}

TEST_CASE("order axioms and rank strictness across the family corpus") {
    std::vector<finite_poset> corpus;
    corpus.push_back(chain_poset(5));
    corpus.push_back(antichain_poset(4));
    corpus.push_back(boolean_poset(4));
    corpus.push_back(divisor_poset(60));
    corpus.push_back(config_poset(default_alphabet(3), 3));
    corpus.push_back(multiset_poset(default_alphabet(2), 3, true));
    corpus.push_back(barycentric(boolean_poset(2)));
    corpus.push_back(join_posets(chain_poset(2), antichain_poset(2)));
    for (unsigned long long seed = 0; seed < 10; ++seed) {
        corpus.push_back(random_poset(9, seed, 35));
        corpus.push_back(random_ranked_poset(9, seed, 35));
    }
    for (const auto& p : corpus) {
        CHECK(verify_order_axioms(p));
        if (p.ranked())
            for (int a = 0; a < p.size(); ++a)
                for (int b = 0; b < p.size(); ++b)
                    if (p.less(a, b)) CHECK(p.rank_of(a) < p.rank_of(b));
    }
}

TEST_CASE("barycentric preserves euler characteristic") {
    std::vector<finite_poset> corpus;
    corpus.push_back(boolean_poset(3));
    corpus.push_back(multiset_poset(default_alphabet(2), 2, false));
    for (unsigned long long seed = 0; seed < 4; ++seed) corpus.push_back(random_poset(6, seed, 40));
    for (const auto& p : corpus)
        CHECK(euler_characteristics(barycentric(p)).chi == euler_characteristics(p).chi);
}

TEST_CASE("json round trip") {
    using nlohmann::json;
    json j = {{"elements", {"a", "b", "c"}},
              {"leq", json::array({json::array({"a", "b"}), json::array({"b", "c"})})},
              {"rank", {{"a", 0}, {"b", 1}, {"c", 2}}}};
    finite_poset p = read_poset(j);
    CHECK(p.leq("a", "c"));
    json out = write_poset(p);
    CHECK(out.at("leq").size() == 2);  // covers only
    finite_poset q = read_poset(out);
    CHECK(write_poset(q) == out);

    // sentinel ids survive a round trip
    json cone_json = write_poset(cone_above(antichain_poset(2)));
    CHECK(read_poset(cone_json).contains("__top__"));

    CHECK_THROWS_AS(read_poset(json::array()), std::invalid_argument);
}

TEST_CASE("centered posets have chi 1") {
    std::vector<finite_poset> corpus;
    corpus.push_back(chain_poset(6));
    corpus.push_back(cone_below(boolean_poset(3)));
    corpus.push_back(cone_above(multiset_poset(default_alphabet(2), 2, false)));
    corpus.push_back(multiset_poset(default_alphabet(3), 2, true));
    for (const auto& p : corpus) {
        REQUIRE(find_center(p).has_value());
        CHECK(euler_characteristics(p).chi == 1);
    }
}
