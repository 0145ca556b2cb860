/*
  Acceptance suite: one check per criterion, each printing a single
  "criterion N: PASS/FAIL" line.  Run with no arguments for all criteria or
  with a number 1..8 for a single one.  The exit code is the number of
  failed criteria.
*/

#include "nakayama/homology.hpp"
#include "nakayama/kupisch.hpp"
#include "nakayama/psi.hpp"
#include "nakayama/stratify.hpp"
#include "nakayama/verify.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace nakayama;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
};

struct SweepSummary {
    long checks = 0;
    long series = 0;
    std::map<std::string, long> failures;   // property -> count
    std::map<std::string, std::string> first;  // property -> first details
};

SweepSummary run_sweep(int n_min, int n_max, int max_len, bool use_3n,
                       std::vector<std::string> suites) {
    SuiteSpec spec;
    spec.n_min = n_min;
    spec.n_max = n_max;
    spec.max_len = max_len;
    spec.max_len_3n = use_3n;
    spec.suites = std::move(suites);
    SweepSummary sum;
    std::string last_series;
    sweep_properties(spec, [&](const PropertyResult& r) {
        ++sum.checks;
        auto key = format_series(r.series);
        if (key != last_series) {
            last_series = key;
            ++sum.series;
        }
        if (!r.passed) {
            if (++sum.failures[r.property] == 1)
                sum.first[r.property] = "series " + key + ": " + r.details;
        }
    });
    return sum;
}

Outcome zero_failures(const SweepSummary& sum, const std::vector<std::string>& props,
                      const std::string& scope) {
    Outcome out;
    std::ostringstream os;
    long bad = 0;
    for (const auto& p : props) {
        auto it = sum.failures.find(p);
        if (it != sum.failures.end() && it->second > 0) {
            ++bad;
            os << p << ": " << it->second << " violations (first: " << sum.first.at(p) << "); ";
        }
    }
    if (bad == 0) {
        out.detail = scope + ", " + std::to_string(sum.series) + " series, zero violations";
    } else {
        out.passed = false;
        out.detail = os.str();
    }
    return out;
}

KupischSeries staircase(int n) {
    std::vector<int> lens(static_cast<size_t>(n), 2);
    lens.back() = 3;
    return cyclic_series(lens);
}

/* pd(S_i) = n-i+1, gldim = n, m = 1, and the n+m-1 bound attained. */
Outcome criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    for (int n = 2; n <= 8; ++n) {
        auto ks = staircase(n);
        for (int i = 1; i <= n; ++i)
            if (!(proj_dim(ks, {i, 1}) == DimValue::finite(n - i + 1)))
                return {false, "pd(S_" + std::to_string(i) + ") wrong for n = " +
                                   std::to_string(n)};
        if (!(global_dimension(ks) == DimValue::finite(n)))
            return {false, "gldim wrong for n = " + std::to_string(n)};
        auto prof = psi_profile(ks);
        if (prof.m != 1) return {false, "m != 1 for n = " + std::to_string(n)};
        auto b = bound_report(ks);
        if (!b.le_n_plus_m_minus_1.holds || !b.main_bound_attained)
            return {false, "n+m-1 not attained for n = " + std::to_string(n)};
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    if (ms >= 1000) return {false, "runtime " + std::to_string(ms) + " ms >= 1 s"};
    return {true, "staircase dimensions exact for n = 2..8 (" + std::to_string(ms) + " ms)"};
}

Outcome criterion2() {
    auto t0 = std::chrono::steady_clock::now();
    auto ks = cyclic_series({4, 5});
    auto cls = classify(ks);
    if (cls.klass != StratKind::ss_not_qh) return {false, "class is not SS"};
    if (!cls.witness || cls.witness->order != std::vector<int>{2, 1})
        return {false, "witness is not (2,1)"};
    if (global_dimension(ks).is_finite) return {false, "gldim should be infinite"};
    if (finitistic_dimension(ks) != 2) return {false, "findim != 2"};
    if (!(proj_dim(ks, {1, 1}) == DimValue::infinite()) ||
        !(proj_dim(ks, {2, 1}) == DimValue::finite(1)))
        return {false, "pd profile is not (infinite, 1)"};
    if (!cls.pattern || cls.pattern->k != 2 || cls.pattern->q != 1)
        return {false, "pattern is not (2,1)"};
    if (!cls.properly_stratified) return {false, "not marked properly stratified"};
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    return {true, "[4,5] fully classified (" + std::to_string(ms) + " ms)"};
}

Outcome criterion3() {
    auto sum = run_sweep(1, 6, 0, true, {"psi"});
    return zero_failures(sum, {"three_way_equivalence"}, "cyclic n <= 6, entries <= 3n");
}

Outcome criterion4() {
    auto sum = run_sweep(1, 6, 0, true, {"bounds"});
    return zero_failures(sum,
                         {"bound_n_plus_m_minus_1", "bound_2n_minus_2", "bound_2d",
                          "bound_2m_plus_2n_minus_1", "bound_regular_pd_plus_1",
                          "bound_regular_pd_gap", "id_le_2d", "gldim_witness_pair"},
                         "cyclic n <= 6, entries <= 3n");
}

Outcome criterion5() {
    auto sum = run_sweep(1, 5, 0, true, {"stratification"});
    return zero_failures(sum, {"classify_matches_bruteforce", "qh_iff_ss_finite_gldim"},
                         "cyclic n <= 5, entries <= 3n, all n! orderings");
}

Outcome criterion6() {
    auto sum = run_sweep(1, 5, 0, true, {"stratification", "selfinjective"});
    auto out = zero_failures(sum,
                             {"findim_le_n", "findim_le_2", "ss_not_qh_profile",
                              "pattern_iff_profile", "ss_opposite_ss", "ss_iff_local",
                              "qh_iff_ss_finite_gldim"},
                             "cyclic n <= 5, entries <= 3n");
    if (!out.passed) return out;
    for (int n = 2; n <= 5; ++n)
        if (finitistic_dimension(staircase(n)) != n)
            return {false, "findim of the staircase is not n = " + std::to_string(n)};
    if (finitistic_dimension(cyclic_series({4, 5})) != 2)
        return {false, "findim([4,5]) != 2"};
    out.detail += "; sharpness witnessed at the staircase and [4,5]";
    return out;
}

Outcome criterion7() {
    auto sum = run_sweep(1, 5, 12, false,
                         {"algebra", "homology", "quotient", "stratification"});
    return zero_failures(sum,
                         {"max_pd_eq_max_id", "opposite_involution", "opposite_multiset",
                          "opposite_cyclic_valid", "quotient_linear_valid",
                          "quotient_finite_gldim", "local_size_iff_short",
                          "quotient_hereditary", "prop4_pd_bound", "prop5_gldim_bound",
                          "prop6_findim_bound", "witness_trace_projective"},
                         "cyclic n <= 5, entries <= 12");
}

Outcome criterion8() {
    auto sum = run_sweep(1, 5, 12, false, {"oracles", "psi"});
    return zero_failures(
        sum, {"injective_iff_w", "syzygy_layer_oracle", "greedy_vs_exhaustive_filtration"},
        "cyclic n <= 5, entries <= 12");
}

}  // namespace

int main(int argc, char** argv) {
    using CriterionFn = Outcome (*)();
    const std::vector<CriterionFn> criteria = {criterion1, criterion2, criterion3,
                                               criterion4, criterion5, criterion6,
                                               criterion7, criterion8};
    int only = 0;
    if (argc > 1) {
        only = std::atoi(argv[1]);
        if (only < 1 || only > static_cast<int>(criteria.size())) {
            std::fprintf(stderr, "usage: acceptance [1..%zu]\n", criteria.size());
            return 2;
        }
    }

    int failed = 0;
    for (int k = 1; k <= static_cast<int>(criteria.size()); ++k) {
        if (only && k != only) continue;
        Outcome out = criteria[static_cast<size_t>(k - 1)]();
        std::printf("criterion %d: %s (%s)\n", k, out.passed ? "PASS" : "FAIL",
                    out.detail.c_str());
        std::fflush(stdout);
        if (!out.passed) ++failed;
    }
    return failed;
}
