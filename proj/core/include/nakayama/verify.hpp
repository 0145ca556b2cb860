#pragma once

/*
  Exhaustive property suites over enumerated Kupisch series, report emission,
  and the extremal search for algebras attaining gldim = n + m - 1.
*/

#include "nakayama/kupisch.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nakayama {

struct SuiteSpec {
    int n_min = 1;
    int n_max = 1;
    int max_len = 2;          // ignored when max_len_3n is set
    bool max_len_3n = false;  // use 3n per vertex count
    std::vector<Kind> kinds{Kind::cyclic};
    std::vector<std::string> suites;  // empty = all regular suites
    int parallelism = 1;
    std::optional<double> sample;  // fraction in (0,1]
    std::uint64_t seed = 0;
    int ss_cutoff = 8;
};

struct PropertyResult {
    KupischSeries series;
    std::string property;
    bool passed = true;
    std::string details;
};

struct PropertyDef {
    std::string id;
    std::string suite;
    bool on_cyclic = true;
    bool on_linear = false;
    bool needs_orderings = false;  // iterates all n! idempotent orderings
};
const std::vector<PropertyDef>& registered_properties();
std::vector<std::string> suite_names();

/* Evaluate every selected property on every enumerated series, streaming the
   results in (series, property id) order.  Deterministic for a fixed spec
   regardless of parallelism. */
void sweep_properties(const SuiteSpec& spec,
                      const std::function<void(const PropertyResult&)>& sink);
std::vector<PropertyResult> run_suite(const SuiteSpec& spec);

/* "json": versioned document with one invariant record per series plus its
   violations; "csv": exactly series,property,passed,details. */
std::string emit_report(const std::vector<PropertyResult>& results,
                        std::string_view format);

/* Full invariant record of one series (the per-series object of the JSON
   report, minus the violations array). */
std::string invariant_record_json(const KupischSeries& ks);

struct ExtremalEntry {
    KupischSeries series;
    int n = 0;
    int m = 0;
    int gldim = 0;
};
/* Cyclic series attaining gldim = n + m - 1 exactly, grouped by (n, m). */
std::vector<ExtremalEntry> find_extremal(int n_min, int n_max, int max_len);
std::string format_extremal(const std::vector<ExtremalEntry>& entries);

}  // namespace nakayama
