#include "nakayama/psi.hpp"

#include "nakayama/homology.hpp"

#include <algorithm>

namespace nakayama {

int inj_env_length(const KupischSeries& ks, int i) {
    if (i < 1 || i > ks.n()) throw std::invalid_argument("vertex out of range");
    const int cap = ks.kind == Kind::cyclic ? ks.loewy_length() : i;
    int w = 1;  // k = 1 always works: c_i >= 1
    while (w + 1 <= cap) {
        int k = w + 1;
        int start = ks.kind == Kind::cyclic ? ks.reduce(i - k + 1) : i - k + 1;
        if (ks.at(start) < k) break;
        w = k;
    }
    return w;
}

/* Kupisch series of the opposite algebra.  The left projective at vertex i
   is the dual of I_i, so its length is w(i); reversing the vertex order
   matches the reversed arrows. */
KupischSeries opposite(const KupischSeries& ks) {
    std::vector<int> rev(static_cast<size_t>(ks.n()));
    for (int i = 1; i <= ks.n(); ++i)
        rev[static_cast<size_t>(ks.n() - i)] = inj_env_length(ks, i);
    return canonicalize(validate(ks.kind, rev));
}

PsiProfile psi_profile(const KupischSeries& ks) {
    if (ks.kind != Kind::cyclic) throw std::invalid_argument("psi profile needs a cyclic series");
    const int n = ks.n();
    PsiProfile p;
    p.w.resize(static_cast<size_t>(n));
    p.psi.resize(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        p.w[static_cast<size_t>(i - 1)] = inj_env_length(ks, i);
        p.psi[static_cast<size_t>(i - 1)] = ks.reduce(i - p.w[static_cast<size_t>(i - 1)]);
    }
    auto psi_of = [&](int v) { return p.psi[static_cast<size_t>(v - 1)]; };

    std::vector<char> is_regular(static_cast<size_t>(n + 1), 0);
    for (int v = 1; v <= n; ++v) {
        int u = v;
        for (int t = 1; t <= n; ++t) {
            u = psi_of(u);
            if (u == v) {
                is_regular[static_cast<size_t>(v)] = 1;
                break;
            }
        }
        if (is_regular[static_cast<size_t>(v)]) p.regular.push_back(v);
    }
    p.d = n - static_cast<int>(p.regular.size());

    std::vector<char> assigned(static_cast<size_t>(n + 1), 0);
    for (int v : p.regular) {
        if (assigned[static_cast<size_t>(v)]) continue;
        std::vector<int> cyc;
        int u = v;
        do {
            cyc.push_back(u);
            assigned[static_cast<size_t>(u)] = 1;
            u = psi_of(u);
        } while (u != v);
        p.cycles.push_back(std::move(cyc));
    }

    p.m = minimal_even_half(ks);
    return p;
}

std::optional<int> minimal_even_half(const KupischSeries& ks) {
    if (ks.kind == Kind::linear) return 0;
    std::optional<int> m;
    for (int i = 1; i <= ks.n(); ++i) {
        DimValue d = proj_dim(ks, {i, 1});
        if (d.is_finite && d.value % 2 == 0)
            if (!m || d.value / 2 < *m) m = d.value / 2;
    }
    return m;
}

FiniteGldimCriterion finite_gldim_criterion(const KupischSeries& ks) {
    if (ks.kind != Kind::cyclic)
        throw std::invalid_argument("finite-gldim criterion needs a cyclic series");
    const int n = ks.n();
    FiniteGldimCriterion out;

    std::vector<DimValue> pd(static_cast<size_t>(n));
    std::vector<int> even;
    for (int i = 1; i <= n; ++i) {
        pd[static_cast<size_t>(i - 1)] = proj_dim(ks, {i, 1});
        if (pd[static_cast<size_t>(i - 1)].is_finite && pd[static_cast<size_t>(i - 1)].value % 2 == 0)
            even.push_back(i);
    }
    out.has_even_pd_simple = !even.empty();
    out.gldim_finite = global_dimension(ks).is_finite;

    PsiProfile prof = psi_profile(ks);
    out.regular_equals_even_set = prof.regular == even;

    // psi restricted to the even-pd set must be one nonempty cycle
    out.psi_single_cycle_on_regular = false;
    if (!even.empty()) {
        auto in_even = [&](int v) { return std::binary_search(even.begin(), even.end(), v); };
        bool closed = std::all_of(even.begin(), even.end(), [&](int v) {
            return in_even(prof.psi[static_cast<size_t>(v - 1)]);
        });
        if (closed) {
            int u = even.front();
            size_t visited = 0;
            do {
                ++visited;
                u = prof.psi[static_cast<size_t>(u - 1)];
            } while (u != even.front() && visited <= even.size());
            out.psi_single_cycle_on_regular = (u == even.front() && visited == even.size());
        }
    }
    return out;
}

bool BoundReport::all_hold() const {
    return le_n_plus_m_minus_1.holds && le_2n_minus_2.holds && le_2d.holds &&
           twice_le_2m_2n_minus_1.holds && le_max_regular_pd_plus_1.holds &&
           regular_pd_le_2m_2nd.holds;
}

BoundReport bound_report(const KupischSeries& ks) {
    if (ks.kind != Kind::cyclic)
        throw std::invalid_argument("bound report needs a cyclic series");
    DimValue g = global_dimension(ks);
    if (!g.is_finite) throw PreconditionInfiniteGldim();

    PsiProfile prof = psi_profile(ks);
    if (!prof.m) throw PreconditionInfiniteGldim();

    BoundReport r;
    r.gldim = g.value;
    r.n = ks.n();
    r.m = *prof.m;
    r.d = prof.d;
    r.max_regular_pd = 0;
    for (int v : prof.regular) {
        DimValue d = proj_dim(ks, {v, 1});
        if (d.is_finite) r.max_regular_pd = std::max(r.max_regular_pd, d.value);
    }

    r.le_n_plus_m_minus_1 = {r.n + r.m - 1, r.gldim <= r.n + r.m - 1};
    r.le_2n_minus_2 = {2 * r.n - 2, r.gldim <= 2 * r.n - 2};
    r.le_2d = {2 * r.d, r.gldim <= 2 * r.d};
    r.twice_le_2m_2n_minus_1 = {2 * r.m + 2 * r.n - 1, 2 * r.gldim <= 2 * r.m + 2 * r.n - 1};
    r.le_max_regular_pd_plus_1 = {r.max_regular_pd + 1, r.gldim <= r.max_regular_pd + 1};
    r.regular_pd_le_2m_2nd = {2 * r.m + 2 * (r.n - r.d - 1),
                              r.max_regular_pd <= 2 * r.m + 2 * (r.n - r.d - 1)};
    r.main_bound_attained = r.gldim == r.n + r.m - 1;
    return r;
}

}  // namespace nakayama
