#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nakayama/stratify.hpp"
#include "nakayama/verify.hpp"

#include <algorithm>
#include <set>

using namespace nakayama;

namespace {

SuiteSpec small_spec(int n_min, int n_max, int max_len, std::vector<std::string> suites = {}) {
    SuiteSpec spec;
    spec.n_min = n_min;
    spec.n_max = n_max;
    spec.max_len = max_len;
    spec.suites = std::move(suites);
    return spec;
}

long failures(const std::vector<PropertyResult>& rs) {
    return std::count_if(rs.begin(), rs.end(),
                         [](const PropertyResult& r) { return !r.passed; });
}

}  // namespace

TEST_CASE("the registry covers the documented property set") {
    std::set<std::string> expected = {
        // algebra
        "enumerate_canonical", "local_size_iff_short", "opposite_cyclic_valid",
        "opposite_involution", "opposite_multiset", "quotient_linear_valid",
        // homology
        "findim_eq_gldim_when_finite", "linear_gldim_bound", "max_pd_eq_max_id",
        "pd_le_max_factor_pd", "selfinjective_findim_zero", "trace_step_bound",
        // psi
        "injective_iff_w", "three_way_equivalence", "w_envelope_oracle",
        // bounds
        "bound_2d", "bound_2m_plus_2n_minus_1", "bound_2n_minus_2",
        "bound_n_plus_m_minus_1", "bound_regular_pd_gap", "bound_regular_pd_plus_1",
        "gldim_witness_pair", "id_le_2d",
        // stratification
        "classify_matches_bruteforce", "delta_consistency", "findim_le_2", "findim_le_n",
        "pattern_iff_profile", "qh_iff_ss_finite_gldim", "ss_not_qh_profile",
        "ss_opposite_ss", "witness_trace_projective",
        // selfinjective
        "ss_iff_local",
        // quotient
        "prop4_pd_bound", "prop5_gldim_bound", "prop6_findim_bound",
        "quotient_finite_gldim", "quotient_hereditary",
        // oracles
        "greedy_vs_exhaustive_filtration", "syzygy_layer_oracle",
        // harness self-test
        "always_fails"};

    std::set<std::string> got;
    for (const auto& def : registered_properties()) {
        CHECK(got.insert(def.id).second);  // ids unique
    }
    CHECK(got == expected);

    auto suites = suite_names();
    for (const char* s : {"algebra", "homology", "psi", "bounds", "stratification",
                          "selfinjective", "quotient", "oracles", "selftest"})
        CHECK(std::find(suites.begin(), suites.end(), s) != suites.end());
}

TEST_CASE("a small bounds sweep runs clean") {
    auto rs = run_suite(small_spec(2, 2, 5, {"bounds"}));
    CHECK(!rs.empty());
    CHECK(failures(rs) == 0);
}

TEST_CASE("the stratification report includes findim_le_2 for [4,5]") {
    auto rs = run_suite(small_spec(2, 2, 5, {"stratification"}));
    bool seen = false;
    for (const auto& r : rs)
        if (format_series(r.series) == "4,5" && r.property == "findim_le_2") {
            seen = true;
            CHECK(r.passed);
        }
    CHECK(seen);
}

TEST_CASE("the selfinjective suite covers ss_iff_local for [3,3]") {
    auto rs = run_suite(small_spec(2, 2, 3, {"selfinjective"}));
    bool seen = false;
    for (const auto& r : rs)
        if (format_series(r.series) == "3,3" && r.property == "ss_iff_local") {
            seen = true;
            CHECK(r.passed);
        }
    CHECK(seen);
}

TEST_CASE("failure injection produces populated violation rows") {
    auto rs = run_suite(small_spec(2, 2, 3, {"selftest"}));
    REQUIRE(!rs.empty());
    for (const auto& r : rs) {
        CHECK(!r.passed);
        CHECK(!r.details.empty());
    }
    auto csv = emit_report(rs, "csv");
    CHECK(csv.find("always_fails,false,") != std::string::npos);
}

TEST_CASE("reports are byte-deterministic and parallelism independent") {
    auto spec = small_spec(1, 3, 6);
    auto serial = run_suite(spec);
    spec.parallelism = 4;
    auto parallel = run_suite(spec);
    CHECK(emit_report(serial, "json") == emit_report(parallel, "json"));
    CHECK(emit_report(serial, "csv") == emit_report(parallel, "csv"));
}

TEST_CASE("empty result sets produce valid empty documents") {
    auto json = emit_report({}, "json");
    CHECK(json.find("\"schema_version\": 1") != std::string::npos);
    CHECK(json.find("\"failures\": 0") != std::string::npos);
    CHECK(emit_report({}, "csv") == "series,property,passed,details\n");
    CHECK_THROWS_AS(emit_report({}, "xml"), std::invalid_argument);
}

TEST_CASE("csv columns are exactly series,property,passed,details") {
    auto rs = run_suite(small_spec(2, 2, 3, {"algebra"}));
    auto csv = emit_report(rs, "csv");
    CHECK(csv.rfind("series,property,passed,details\n", 0) == 0);
    // the series field is quoted because it embeds commas
    CHECK(csv.find("\"2,2\",enumerate_canonical,true,") != std::string::npos);
}

TEST_CASE("sampling is deterministic for a fixed seed") {
    auto spec = small_spec(4, 4, 8);
    spec.suites = {"psi"};
    spec.sample = 0.35;
    spec.seed = 11;
    auto once = run_suite(spec);
    auto twice = run_suite(spec);
    CHECK(emit_report(once, "json") == emit_report(twice, "json"));
    CHECK(once.size() < run_suite(small_spec(4, 4, 8, {"psi"})).size());
}

TEST_CASE("ordering-heavy suites respect the search cutoff") {
    auto spec = small_spec(9, 9, 3, {"stratification"});
    CHECK_THROWS_AS(run_suite(spec), CutoffExceeded);
    // suites without ordering searches are fine at the same size
    auto ok = small_spec(9, 9, 2, {"psi"});
    CHECK_NOTHROW(run_suite(ok));
}

TEST_CASE("unknown suites are rejected") {
    CHECK_THROWS_AS(run_suite(small_spec(2, 2, 3, {"no_such_suite"})), std::invalid_argument);
}

TEST_CASE("extremal search finds the staircase witnesses") {
    auto entries = find_extremal(4, 4, 8);
    bool staircase = false;
    for (const auto& e : entries) {
        CHECK(e.gldim == e.n + e.m - 1);
        if (format_series(e.series) == "2,2,2,3") {
            staircase = true;
            CHECK(e.m == 1);
            CHECK(e.gldim == 4);
        }
    }
    CHECK(staircase);

    auto small = find_extremal(2, 2, 6);
    bool has23 = false;
    for (const auto& e : small)
        if (format_series(e.series) == "2,3") has23 = true;
    CHECK(has23);
    for (const auto& e : small) CHECK(!is_selfinjective(e.series));
}

TEST_CASE("invariant records carry the documented fields") {
    auto rec = invariant_record_json(parse_series("4,5"));
    for (const char* key : {"\"series\": \"4,5\"", "\"gldim\": \"infinite\"",
                            "\"findim\": 2", "\"class\": \"SS\"", "\"witness\": \"2,1\"",
                            "\"pattern\"", "\"regular\""})
        CHECK(rec.find(key) != std::string::npos);
}
