/*
  nakctl — command-line front end for the nakayama library.

  Subcommands: invariants, resolve, psi, stratified, verify, enumerate,
  extremal.  Exit codes: 0 success (all properties pass), 1 property
  violations found, 2 usage or validation errors.
*/

#include "nakayama/homology.hpp"
#include "nakayama/kupisch.hpp"
#include "nakayama/psi.hpp"
#include "nakayama/stratify.hpp"
#include "nakayama/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>

using nakayama::Kind;
using nakayama::KupischSeries;
using ordered_json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ordered_json dim_json(const nakayama::DimValue& d) {
    if (d.is_finite) return d.value;
    return "infinite";
}

std::pair<int, int> parse_range(const std::string& text) {
    auto sep = text.find("..");
    try {
        if (sep == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, sep)), std::stoi(text.substr(sep + 2))};
    } catch (const std::exception&) {
        throw UsageError("range must look like '2..4' or '4', got '" + text + "'");
    }
}

/* accepts a plain integer or the symbolic "3n" */
void parse_max_len(const std::string& text, nakayama::SuiteSpec& spec) {
    if (text == "3n") {
        spec.max_len_3n = true;
        return;
    }
    try {
        spec.max_len = std::stoi(text);
    } catch (const std::exception&) {
        throw UsageError("--max-len takes an integer or '3n', got '" + text + "'");
    }
}

int cmd_invariants(const std::string& series) {
    auto ks = nakayama::parse_series(series);
    std::cout << nakayama::invariant_record_json(ks) << "\n";
    return 0;
}

int cmd_resolve(const std::string& series, const std::string& module_text, bool dual) {
    auto ks = nakayama::parse_series(series);
    auto m = nakayama::parse_point(ks, module_text);
    if (dual && ks.kind != Kind::cyclic)
        throw UsageError("injective coresolutions need a cyclic series");
    auto trace = nakayama::resolution_trace(ks, m, dual);
    std::cout << nakayama::format_trace(trace) << "\n";
    auto dim = dual ? nakayama::inj_dim(ks, m) : nakayama::proj_dim(ks, m);
    std::cout << (dual ? "inj_dim" : "proj_dim") << ": " << nakayama::format_dim(dim) << "\n";
    return 0;
}

int cmd_psi(const std::string& series) {
    auto ks = nakayama::parse_series(series);
    if (ks.kind != Kind::cyclic) throw UsageError("psi profiles need a cyclic series");
    auto prof = nakayama::psi_profile(ks);

    ordered_json doc;
    doc["series"] = nakayama::format_series(ks);
    doc["w"] = prof.w;
    doc["psi"] = prof.psi;
    doc["regular"] = prof.regular;
    doc["cycles"] = prof.cycles;
    doc["d"] = prof.d;
    doc["m"] = prof.m ? ordered_json(*prof.m) : ordered_json(nullptr);

    auto crit = nakayama::finite_gldim_criterion(ks);
    doc["criterion"] = ordered_json{
        {"has_even_pd_simple", crit.has_even_pd_simple},
        {"regular_equals_even_set", crit.regular_equals_even_set},
        {"psi_single_cycle_on_regular", crit.psi_single_cycle_on_regular},
        {"gldim_finite", crit.gldim_finite}};

    if (crit.gldim_finite) {
        auto b = nakayama::bound_report(ks);
        auto check = [](const nakayama::BoundCheck& c) {
            return ordered_json{{"bound", c.bound}, {"holds", c.holds}};
        };
        ordered_json bounds;
        bounds["gldim"] = b.gldim;
        bounds["n"] = b.n;
        bounds["m"] = b.m;
        bounds["d"] = b.d;
        bounds["max_regular_pd"] = b.max_regular_pd;
        bounds["gldim_le_n_plus_m_minus_1"] = check(b.le_n_plus_m_minus_1);
        bounds["gldim_le_2n_minus_2"] = check(b.le_2n_minus_2);
        bounds["gldim_le_2d"] = check(b.le_2d);
        bounds["twice_gldim_le_2m_plus_2n_minus_1"] = check(b.twice_le_2m_2n_minus_1);
        bounds["gldim_le_max_regular_pd_plus_1"] = check(b.le_max_regular_pd_plus_1);
        bounds["max_regular_pd_le_2m_plus_2n_2d_2"] = check(b.regular_pd_le_2m_2nd);
        bounds["main_bound_attained"] = b.main_bound_attained;
        doc["bounds"] = bounds;
    } else {
        doc["bounds"] = nullptr;
    }
    std::cout << doc.dump(2) << "\n";
    return 0;
}

int cmd_stratified(const std::string& series, const std::string& order_text, bool search) {
    auto ks = nakayama::parse_series(series);
    ordered_json doc;
    doc["series"] = nakayama::format_series(ks);

    if (!order_text.empty()) {
        if (ks.kind != Kind::cyclic)
            throw UsageError("idempotent orderings apply to cyclic series");
        auto ord = nakayama::parse_ordering(ks, order_text);
        auto lens = nakayama::standard_lengths(ks, ord);
        doc["order"] = nakayama::format_ordering(ord);
        doc["delta"] = lens.delta;
        doc["proper_delta"] = lens.proper_delta;
        ordered_json projectives = ordered_json::array();
        for (int i = 1; i <= ks.n(); ++i) {
            nakayama::ModulePoint p{i, ks.at(i)};
            projectives.push_back(ordered_json{
                {"module", nakayama::format_point(p)},
                {"filters", nakayama::has_proper_standard_filtration(ks, ord, p)}});
        }
        doc["projectives"] = projectives;
        doc["standardly_stratified"] = nakayama::is_ss_with_order(ks, ord);
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    if (search) {
        if (ks.kind != Kind::cyclic)
            throw UsageError("ordering search applies to cyclic series");
        auto found = nakayama::ss_search(ks);
        doc["witness"] = found ? ordered_json(nakayama::format_ordering(*found))
                               : ordered_json(nullptr);
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    auto cls = nakayama::classify(ks);
    doc["class"] = nakayama::strat_label(cls.klass);
    doc["pattern"] = cls.pattern
                         ? ordered_json{{"k", cls.pattern->k}, {"q", cls.pattern->q}}
                         : ordered_json(nullptr);
    doc["witness"] = cls.witness ? ordered_json(nakayama::format_ordering(*cls.witness))
                                 : ordered_json(nullptr);
    doc["properly_stratified"] = cls.properly_stratified;
    std::cout << doc.dump(2) << "\n";
    return 0;
}

int cmd_verify(const nakayama::SuiteSpec& spec, const std::string& out_file,
               const std::string& format) {
    auto results = nakayama::run_suite(spec);
    std::string doc = nakayama::emit_report(results, format);
    if (!out_file.empty()) {
        std::ofstream out(out_file, std::ios::binary);
        if (!out) throw UsageError("cannot write to " + out_file);
        out << doc;
    } else {
        std::cout << doc;
        if (!doc.empty() && doc.back() != '\n') std::cout << "\n";
    }
    long failures = 0;
    for (const auto& r : results)
        if (!r.passed) ++failures;
    std::cerr << "checked " << results.size() << " properties, " << failures << " failures\n";
    return failures == 0 ? 0 : 1;
}

int cmd_enumerate(int n, const std::string& max_len_text, Kind kind, bool count_only) {
    nakayama::SuiteSpec tmp;
    parse_max_len(max_len_text, tmp);
    int max_len = tmp.max_len_3n ? 3 * n : tmp.max_len;
    long count = 0;
    nakayama::enumerate_series(n, max_len, kind, [&](const KupischSeries& ks) {
        ++count;
        if (!count_only) std::cout << nakayama::format_series(ks) << "\n";
    });
    if (count_only) std::cout << count << "\n";
    return 0;
}

int cmd_extremal(std::pair<int, int> range, const std::string& max_len_text) {
    nakayama::SuiteSpec tmp;
    parse_max_len(max_len_text, tmp);
    if (tmp.max_len_3n) throw UsageError("extremal takes a literal --max-len");
    auto entries = nakayama::find_extremal(range.first, range.second, tmp.max_len);
    std::cout << nakayama::format_extremal(entries) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Homological invariants of Nakayama algebras given by Kupisch series"};
    app.require_subcommand(1);

    std::string series, module_text, order_text, out_file, format = "json";
    std::string n_range = "1..1", max_len_text = "2";
    bool dual = false, search = false, count_only = false;
    std::string kind_text = "cyclic";
    int enum_n = 1;
    nakayama::SuiteSpec spec;
    std::string suites_csv;
    double sample = 0.0;

    auto* inv = app.add_subcommand("invariants", "full invariant record of one series");
    inv->add_option("--series", series, "Kupisch series, e.g. 4,5 or linear:2,1")->required();

    auto* res = app.add_subcommand("resolve", "minimal (co)resolution trace of M(i,k)");
    res->add_option("--series", series)->required();
    res->add_option("--module", module_text, "module point as i,k")->required();
    res->add_flag("--dual", dual, "walk cosyzygies instead of syzygies");

    auto* psi = app.add_subcommand("psi", "psi profile and global-dimension bounds");
    psi->add_option("--series", series)->required();

    auto* strat = app.add_subcommand("stratified", "stratification classification");
    strat->add_option("--series", series)->required();
    strat->add_option("--order", order_text, "check one idempotent ordering, e.g. 2,1");
    strat->add_flag("--search", search, "search all orderings for a witness");

    auto* ver = app.add_subcommand("verify", "run property suites over enumerated series");
    ver->add_option("--n", n_range, "vertex range A..B")->required();
    ver->add_option("--max-len", max_len_text, "entry bound (integer or 3n)")->required();
    ver->add_option("--suites", suites_csv, "comma-separated suite names");
    ver->add_option("--kind", kind_text, "cyclic | linear | both")
        ->check(CLI::IsMember({"cyclic", "linear", "both"}));
    ver->add_option("--out", out_file, "write the report to a file");
    ver->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    ver->add_option("--jobs", spec.parallelism, "worker threads");
    ver->add_option("--sample", sample, "deterministic subsample fraction in (0,1]");
    ver->add_option("--seed", spec.seed, "seed for the subsample hash");
    ver->add_option("--cutoff", spec.ss_cutoff, "ordering-search cutoff (default 8)");

    auto* enu = app.add_subcommand("enumerate", "list canonical series");
    enu->add_option("--n", enum_n, "number of simple modules")->required();
    enu->add_option("--max-len", max_len_text)->required();
    enu->add_flag("--count", count_only, "print only the number of series");
    enu->add_option("--kind", kind_text)->check(CLI::IsMember({"cyclic", "linear"}));

    auto* ext = app.add_subcommand("extremal", "series attaining gldim = n + m - 1");
    ext->add_option("--n", n_range, "vertex range A..B")->required();
    ext->add_option("--max-len", max_len_text)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (inv->parsed()) return cmd_invariants(series);
        if (res->parsed()) return cmd_resolve(series, module_text, dual);
        if (psi->parsed()) return cmd_psi(series);
        if (strat->parsed()) return cmd_stratified(series, order_text, search);
        if (ver->parsed()) {
            auto range = parse_range(n_range);
            spec.n_min = range.first;
            spec.n_max = range.second;
            parse_max_len(max_len_text, spec);
            if (kind_text == "both")
                spec.kinds = {Kind::cyclic, Kind::linear};
            else
                spec.kinds = {kind_text == "linear" ? Kind::linear : Kind::cyclic};
            if (!suites_csv.empty()) {
                std::stringstream ss(suites_csv);
                std::string item;
                while (std::getline(ss, item, ',')) spec.suites.push_back(item);
            }
            if (sample > 0.0) spec.sample = sample;
            return cmd_verify(spec, out_file, format);
        }
        if (enu->parsed())
            return cmd_enumerate(enum_n, max_len_text,
                                 kind_text == "linear" ? Kind::linear : Kind::cyclic,
                                 count_only);
        if (ext->parsed()) return cmd_extremal(parse_range(n_range), max_len_text);
    } catch (const nakayama::ValidationError& e) {
        std::cerr << "invalid series: " << e.what() << "\n";
        return 2;
    } catch (const nakayama::CutoffExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
