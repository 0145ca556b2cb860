#include "nakayama/stratify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace nakayama {

IdempotentOrdering parse_ordering(const KupischSeries& ks, const std::string& text) {
    IdempotentOrdering ord;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            ord.order.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed ordering entry '" + item + "'");
        }
    }
    check_ordering(ks, ord);
    return ord;
}

std::string format_ordering(const IdempotentOrdering& ord) {
    std::string out;
    for (size_t i = 0; i < ord.order.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(ord.order[i]);
    }
    return out;
}

void check_ordering(const KupischSeries& ks, const IdempotentOrdering& ord) {
    const int n = ks.n();
    if (static_cast<int>(ord.order.size()) != n)
        throw std::invalid_argument("ordering must list all " + std::to_string(n) + " vertices");
    std::vector<char> seen(static_cast<size_t>(n + 1), 0);
    for (int v : ord.order) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("ordering is not a permutation of 1.." + std::to_string(n));
        seen[static_cast<size_t>(v)] = 1;
    }
}

namespace {

/* position[v] = t with ord(t) = v */
std::vector<int> positions_of(const IdempotentOrdering& ord) {
    std::vector<int> pos(ord.order.size() + 1, 0);
    for (size_t t = 0; t < ord.order.size(); ++t)
        pos[static_cast<size_t>(ord.order[t])] = static_cast<int>(t) + 1;
    return pos;
}

/* delta-bar length per vertex: layers of P_v until the first later-or-equal
   vertex reappears below the top. */
std::vector<int> proper_delta_by_vertex(const KupischSeries& ks, const std::vector<int>& pos) {
    const int n = ks.n();
    std::vector<int> len(static_cast<size_t>(n + 1), 0);
    for (int v = 1; v <= n; ++v) {
        int out = ks.at(v);
        for (int l = 2; l <= ks.at(v); ++l) {
            if (pos[static_cast<size_t>(ks.layer(v, l))] >= pos[static_cast<size_t>(v)]) {
                out = l - 1;
                break;
            }
        }
        len[static_cast<size_t>(v)] = out;
    }
    return len;
}

bool greedy_filters(const KupischSeries& ks, const std::vector<int>& pdbar,
                    const ModulePoint& m) {
    int top = m.top;
    int remaining = m.len;
    while (remaining > 0) {
        int strip = pdbar[static_cast<size_t>(top)];
        if (strip > remaining) return false;
        remaining -= strip;
        if (remaining > 0) top = ks.layer(top, strip + 1);
    }
    return true;
}

}  // namespace

StandardLengths standard_lengths(const KupischSeries& ks, const IdempotentOrdering& ord) {
    check_ordering(ks, ord);
    const int n = ks.n();
    auto pos = positions_of(ord);
    StandardLengths out;
    out.delta.resize(static_cast<size_t>(n));
    out.proper_delta.resize(static_cast<size_t>(n));
    for (int t = 1; t <= n; ++t) {
        int v = ord.order[static_cast<size_t>(t - 1)];
        int delta = ks.at(v), proper = ks.at(v);
        for (int l = 2; l <= ks.at(v); ++l) {
            if (pos[static_cast<size_t>(ks.layer(v, l))] > t) {
                delta = l - 1;
                break;
            }
        }
        for (int l = 2; l <= ks.at(v); ++l) {
            if (pos[static_cast<size_t>(ks.layer(v, l))] >= t) {
                proper = l - 1;
                break;
            }
        }
        out.delta[static_cast<size_t>(t - 1)] = delta;
        out.proper_delta[static_cast<size_t>(t - 1)] = proper;
    }
    return out;
}

bool has_proper_standard_filtration(const KupischSeries& ks, const IdempotentOrdering& ord,
                                    const ModulePoint& m) {
    check_ordering(ks, ord);
    module_point(ks, m.top, m.len);
    auto pdbar = proper_delta_by_vertex(ks, positions_of(ord));
    return greedy_filters(ks, pdbar, m);
}

bool is_ss_with_order(const KupischSeries& ks, const IdempotentOrdering& ord) {
    if (ks.kind != Kind::cyclic)
        throw std::invalid_argument("stratification orderings apply to cyclic series");
    check_ordering(ks, ord);
    auto pdbar = proper_delta_by_vertex(ks, positions_of(ord));
    for (int i = 1; i <= ks.n(); ++i)
        if (!greedy_filters(ks, pdbar, ModulePoint{i, ks.at(i)})) return false;
    return true;
}

std::optional<IdempotentOrdering> ss_search(const KupischSeries& ks, int cutoff) {
    if (ks.kind != Kind::cyclic)
        throw std::invalid_argument("ordering search applies to cyclic series");
    if (ks.n() > cutoff) throw CutoffExceeded(ks.n());
    std::vector<int> perm(static_cast<size_t>(ks.n()));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        IdempotentOrdering ord{perm};
        if (is_ss_with_order(ks, ord)) return ord;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

bool is_quasi_hereditary(const KupischSeries& ks) {
    if (ks.kind == Kind::linear) return true;
    for (int i = 1; i <= ks.n(); ++i) {
        DimValue d = proj_dim(ks, {i, 1});
        if (d == DimValue::finite(2)) return true;
    }
    return false;
}

std::optional<PatternMatch> pattern_match(const KupischSeries& ks) {
    if (ks.kind != Kind::cyclic) return std::nullopt;
    const int n = ks.n();
    for (int r = 0; r < n; ++r) {
        const int x = ks.at(ks.reduce(r + 1));
        bool ok = true;
        for (int p = 2; p <= n && ok; ++p)
            ok = ks.at(ks.reduce(r + p)) == x + n - p + 1;
        if (!ok) continue;
        int k = (x - 2) % n + 2;  // unique k in 2..n+1 with x = k + qn
        int q = (x - k) / n;
        if ((k >= 2 && k <= n && q >= 1) || (k == n + 1 && q >= 0))
            return PatternMatch{k, q, r};
    }
    return std::nullopt;
}

const char* strat_label(StratKind k) {
    switch (k) {
        case StratKind::quasi_hereditary: return "QH";
        case StratKind::ss_not_qh: return "SS";
        case StratKind::not_ss: return "NONE";
    }
    return "NONE";
}

namespace {

/* Every pattern algebra is filtered by the ordering that walks the cycle and
   ends at the vertex z with c_z = 0 mod n: all other proper standards are
   simple, the one at z has length n, and each projective is consumed exactly
   because c_v = (z - v) + 0 mod n. */
IdempotentOrdering pattern_witness(const KupischSeries& ks, const PatternMatch& pm) {
    const int n = ks.n();
    const int x = pm.k + pm.q * n;
    const int z_pattern = x % n + 1;
    const int z = ks.reduce(pm.offset + z_pattern);
    IdempotentOrdering ord;
    ord.order.reserve(static_cast<size_t>(n));
    for (int j = 1; j < n; ++j) ord.order.push_back(ks.reduce(z + j));
    ord.order.push_back(z);
    return ord;
}

}  // namespace

StratClass classify(const KupischSeries& ks) {
    StratClass out;
    if (ks.kind == Kind::linear) {
        out.klass = StratKind::quasi_hereditary;
        out.properly_stratified = true;
        return out;
    }
    if (is_selfinjective(ks)) {
        if (ks.n() == 1) {
            out.klass = StratKind::ss_not_qh;
            out.witness = IdempotentOrdering{{1}};
            out.pattern = PatternMatch{2, ks.at(1) - 2, 0};
            out.properly_stratified = true;
        } else {
            out.klass = StratKind::not_ss;
            out.properly_stratified = false;
        }
        return out;
    }
    if (is_quasi_hereditary(ks)) {
        out.klass = StratKind::quasi_hereditary;
        out.properly_stratified = true;
        return out;
    }
    if (auto pm = pattern_match(ks)) {
        out.klass = StratKind::ss_not_qh;
        out.pattern = pm;
        out.witness = pattern_witness(ks, *pm);
        out.properly_stratified = true;
        return out;
    }
    out.klass = StratKind::not_ss;
    out.properly_stratified = false;
    return out;
}

}  // namespace nakayama
