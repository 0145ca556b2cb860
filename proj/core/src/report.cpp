#include "nakayama/homology.hpp"
#include "nakayama/psi.hpp"
#include "nakayama/stratify.hpp"
#include "nakayama/verify.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>

namespace nakayama {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json dim_json(const DimValue& d) {
    if (d.is_finite) return d.value;
    return "infinite";
}

ordered_json dims_json(const std::vector<DimValue>& ds) {
    ordered_json arr = ordered_json::array();
    for (const auto& d : ds) arr.push_back(dim_json(d));
    return arr;
}

ordered_json invariant_record(const KupischSeries& ks) {
    DimTables dims = dim_tables(ks);
    StratClass cls = classify(ks);

    ordered_json rec;
    rec["series"] = format_series(ks);
    rec["n"] = ks.n();
    rec["kind"] = ks.kind == Kind::cyclic ? "cyclic" : "linear";
    rec["pd"] = dims_json(dims.pd_simple);
    rec["id"] = ks.kind == Kind::cyclic ? dims_json(dims.id_simple) : ordered_json(nullptr);
    rec["gldim"] = dim_json(dims.gldim);
    rec["findim"] = dims.findim;
    if (ks.kind == Kind::cyclic) {
        PsiProfile prof = psi_profile(ks);
        rec["w"] = prof.w;
        rec["psi"] = prof.psi;
        rec["regular"] = prof.regular;
        rec["d"] = prof.d;
        rec["m"] = prof.m ? ordered_json(*prof.m) : ordered_json(nullptr);
    } else {
        rec["w"] = nullptr;
        rec["psi"] = nullptr;
        rec["regular"] = nullptr;
        rec["d"] = nullptr;
        rec["m"] = 0;
    }
    rec["class"] = strat_label(cls.klass);
    if (cls.pattern) {
        rec["pattern"] = ordered_json{{"k", cls.pattern->k}, {"q", cls.pattern->q}};
    } else {
        rec["pattern"] = nullptr;
    }
    rec["witness"] = cls.witness ? ordered_json(format_ordering(*cls.witness))
                                 : ordered_json(nullptr);
    return rec;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

/* (kind, n, lengths, property) — the deterministic report order */
bool result_less(const PropertyResult& a, const PropertyResult& b) {
    auto key = [](const PropertyResult& r) {
        return std::make_tuple(r.series.kind == Kind::linear, r.series.n(),
                               std::cref(r.series.lengths), std::cref(r.property));
    };
    return key(a) < key(b);
}

}  // namespace

std::string invariant_record_json(const KupischSeries& ks) {
    return invariant_record(ks).dump(2);
}

std::string emit_report(const std::vector<PropertyResult>& results, std::string_view format) {
    std::vector<const PropertyResult*> sorted;
    sorted.reserve(results.size());
    for (const auto& r : results) sorted.push_back(&r);
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const PropertyResult* a, const PropertyResult* b) {
                         return result_less(*a, *b);
                     });

    if (format == "csv") {
        std::string out = "series,property,passed,details\n";
        for (const auto* r : sorted) {
            out += csv_escape(format_series(r->series));
            out += ',';
            out += r->property;
            out += ',';
            out += r->passed ? "true" : "false";
            out += ',';
            out += csv_escape(r->details);
            out += '\n';
        }
        return out;
    }
    if (format != "json") throw std::invalid_argument("unsupported report format");

    ordered_json doc;
    doc["schema_version"] = 1;
    doc["records"] = ordered_json::array();
    long checks = 0, failures = 0;

    size_t i = 0;
    while (i < sorted.size()) {
        const KupischSeries& ks = sorted[i]->series;
        ordered_json rec = invariant_record(ks);
        ordered_json violations = ordered_json::array();
        for (; i < sorted.size() && sorted[i]->series == ks; ++i) {
            ++checks;
            if (!sorted[i]->passed) {
                ++failures;
                violations.push_back(ordered_json{{"property", sorted[i]->property},
                                                  {"details", sorted[i]->details}});
            }
        }
        rec["violations"] = violations;
        doc["records"].push_back(rec);
    }
    doc["summary"] = ordered_json{{"series", doc["records"].size()},
                                  {"checks", checks},
                                  {"failures", failures}};
    return doc.dump(2);
}

std::string format_extremal(const std::vector<ExtremalEntry>& entries) {
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["groups"] = ordered_json::array();
    size_t i = 0;
    while (i < entries.size()) {
        int n = entries[i].n, m = entries[i].m;
        ordered_json group;
        group["n"] = n;
        group["m"] = m;
        group["gldim"] = n + m - 1;
        group["series"] = ordered_json::array();
        for (; i < entries.size() && entries[i].n == n && entries[i].m == m; ++i)
            group["series"].push_back(format_series(entries[i].series));
        doc["groups"].push_back(group);
    }
    return doc.dump(2);
}

}  // namespace nakayama
