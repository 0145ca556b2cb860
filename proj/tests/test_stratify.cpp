#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nakayama/homology.hpp"
#include "nakayama/stratify.hpp"

using namespace nakayama;

TEST_CASE("ordering parsing and validation") {
    auto ks = cyclic_series({4, 5});
    CHECK(parse_ordering(ks, "2,1").order == std::vector<int>{2, 1});
    CHECK(format_ordering({{2, 1}}) == "2,1");
    CHECK_THROWS_AS(parse_ordering(ks, "2,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ordering(ks, "1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ordering(ks, "1,3"), std::invalid_argument);
}

TEST_CASE("standard and proper standard lengths for [4,5]") {
    auto ks = cyclic_series({4, 5});
    auto lens = standard_lengths(ks, {{2, 1}});
    CHECK(lens.proper_delta == std::vector<int>{1, 2});
    CHECK(lens.delta == std::vector<int>{1, 4});  // Delta at the last position is P_1
}

TEST_CASE("the last position always receives the full projective as Delta") {
    for (int n = 2; n <= 4; ++n)
        for (const auto& ks : enumerate_series(n, 3 * n, Kind::cyclic)) {
            std::vector<int> perm(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i + 1;
            do {
                auto lens = standard_lengths(ks, {perm});
                CHECK(lens.delta.back() == ks.at(perm.back()));
                for (int t = 0; t < n; ++t) {
                    CHECK(lens.proper_delta[static_cast<size_t>(t)] >= 1);
                    CHECK(lens.proper_delta[static_cast<size_t>(t)] <=
                          lens.delta[static_cast<size_t>(t)]);
                    CHECK(lens.delta[static_cast<size_t>(t)] <=
                          ks.at(perm[static_cast<size_t>(t)]));
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
}

TEST_CASE("greedy proper-standard filtration on [4,5]") {
    auto ks = cyclic_series({4, 5});
    CHECK(has_proper_standard_filtration(ks, {{2, 1}}, {2, 5}));   // strip 1, 2, 2
    CHECK(!has_proper_standard_filtration(ks, {{1, 2}}, {1, 4}));  // remainder 1 < 2
    CHECK(has_proper_standard_filtration(ks, {{2, 1}}, {2, 1}));   // one step
}

TEST_CASE("stratifying orderings of the running examples") {
    CHECK(is_ss_with_order(cyclic_series({4, 5}), {{2, 1}}));
    CHECK(!is_ss_with_order(cyclic_series({4, 5}), {{1, 2}}));
    CHECK(!is_ss_with_order(cyclic_series({3, 3}), {{1, 2}}));
    CHECK(!is_ss_with_order(cyclic_series({3, 3}), {{2, 1}}));
}

TEST_CASE("witness search") {
    auto w45 = ss_search(cyclic_series({4, 5}));
    REQUIRE(w45.has_value());
    CHECK(w45->order == std::vector<int>{2, 1});

    CHECK(!ss_search(cyclic_series({3, 3})).has_value());

    auto w223 = ss_search(cyclic_series({2, 2, 3}));
    REQUIRE(w223.has_value());
    CHECK(w223->order == std::vector<int>{2, 3, 1});  // first three orderings fail

    CHECK_THROWS_AS(ss_search(cyclic_series(std::vector<int>(9, 3))), CutoffExceeded);
}

TEST_CASE("quasi-hereditary detection") {
    CHECK(is_quasi_hereditary(cyclic_series({2, 2, 3})));  // pd S_2 = 2
    CHECK(!is_quasi_hereditary(cyclic_series({4, 5})));    // profile (infinite, 1)
    CHECK(is_quasi_hereditary(linear_series({2, 1})));
    CHECK(!is_quasi_hereditary(cyclic_series({3, 4, 4})));  // gldim 4 but no pd-2 simple
}

TEST_CASE("pattern recognition") {
    auto p45 = pattern_match(cyclic_series({4, 5}));
    REQUIRE(p45.has_value());
    CHECK(p45->k == 2);
    CHECK(p45->q == 1);

    auto p34 = pattern_match(cyclic_series({3, 4}));
    REQUIRE(p34.has_value());
    CHECK(p34->k == 3);  // the k = n + 1 case
    CHECK(p34->q == 0);

    CHECK(!pattern_match(cyclic_series({2, 2, 2, 3})).has_value());
    CHECK(!pattern_match(cyclic_series({3, 5, 4})).has_value());  // k <= n needs q >= 1

    auto p576 = pattern_match(cyclic_series({5, 7, 6}));
    REQUIRE(p576.has_value());
    CHECK(p576->k == 2);
    CHECK(p576->q == 1);
}

TEST_CASE("classification of the running examples") {
    SUBCASE("[4,5] is standardly stratified but not quasi-hereditary") {
        auto c = classify(cyclic_series({4, 5}));
        CHECK(c.klass == StratKind::ss_not_qh);
        REQUIRE(c.witness.has_value());
        CHECK(c.witness->order == std::vector<int>{2, 1});
        REQUIRE(c.pattern.has_value());
        CHECK(c.pattern->k == 2);
        CHECK(c.pattern->q == 1);
        CHECK(c.properly_stratified);
    }
    SUBCASE("[3,3,3] admits no stratifying ordering") {
        auto c = classify(cyclic_series({3, 3, 3}));
        CHECK(c.klass == StratKind::not_ss);
        CHECK(!c.properly_stratified);
    }
    SUBCASE("[2,2,3] is quasi-hereditary") {
        CHECK(classify(cyclic_series({2, 2, 3})).klass == StratKind::quasi_hereditary);
    }
    SUBCASE("local selfinjective series are stratified") {
        auto c = classify(cyclic_series({3}));
        CHECK(c.klass == StratKind::ss_not_qh);
        REQUIRE(c.witness.has_value());
        CHECK(c.witness->order == std::vector<int>{1});
        REQUIRE(c.pattern.has_value());
        CHECK(c.pattern->k == 2);
        CHECK(c.pattern->q == 1);
        CHECK(c.properly_stratified);
    }
    SUBCASE("linear series are quasi-hereditary") {
        CHECK(classify(linear_series({2, 2, 1})).klass == StratKind::quasi_hereditary);
    }
}

TEST_CASE("constructed witnesses are accepted by the filtration check") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& ks : enumerate_series(n, 3 * n, Kind::cyclic)) {
            auto c = classify(ks);
            if (c.witness) CHECK(is_ss_with_order(ks, *c.witness));
        }
}

TEST_CASE("fast classification agrees with brute force over a small sweep") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& ks : enumerate_series(n, 3 * n, Kind::cyclic)) {
            bool fast = classify(ks).klass != StratKind::not_ss;
            CHECK(fast == ss_search(ks).has_value());
        }
}

TEST_CASE("strat labels") {
    CHECK(std::string(strat_label(StratKind::quasi_hereditary)) == "QH");
    CHECK(std::string(strat_label(StratKind::ss_not_qh)) == "SS");
    CHECK(std::string(strat_label(StratKind::not_ss)) == "NONE");
}
