#include "nakayama/homology.hpp"

#include "nakayama/psi.hpp"

#include <algorithm>
#include <sstream>

namespace nakayama {

ModulePoint module_point(const KupischSeries& ks, int top, int len) {
    if (top < 1 || top > ks.n()) throw std::invalid_argument("module point: vertex out of range");
    if (len < 1 || len > ks.at(top))
        throw std::invalid_argument("module point: length " + std::to_string(len) +
                                    " exceeds c[" + std::to_string(top) + "]");
    if (ks.kind == Kind::linear && top + len > ks.n() + 1)
        throw std::invalid_argument("module point runs off the line");
    return ModulePoint{top, len};
}

std::string format_point(const ModulePoint& m) {
    return "M(" + std::to_string(m.top) + "," + std::to_string(m.len) + ")";
}

ModulePoint parse_point(const KupischSeries& ks, const std::string& text) {
    std::stringstream ss(text);
    int i = 0, k = 0;
    char comma = 0;
    if (!(ss >> i >> comma >> k) || comma != ',' || !(ss >> std::ws).eof())
        throw std::invalid_argument("module point must be given as i,k");
    return module_point(ks, i, k);
}

bool is_projective_point(const KupischSeries& ks, const ModulePoint& m) {
    return m.len == ks.at(m.top);
}

int socle_vertex(const KupischSeries& ks, const ModulePoint& m) {
    return ks.layer(m.top, m.len);
}

std::vector<int> layer_list(const KupischSeries& ks, const ModulePoint& m) {
    std::vector<int> out(static_cast<size_t>(m.len));
    for (int l = 1; l <= m.len; ++l) out[static_cast<size_t>(l - 1)] = ks.layer(m.top, l);
    return out;
}

std::vector<ModulePoint> all_points(const KupischSeries& ks) {
    std::vector<ModulePoint> out;
    out.reserve(static_cast<size_t>(ks.total_points()));
    for (int i = 1; i <= ks.n(); ++i)
        for (int k = 1; k <= ks.at(i); ++k) out.push_back(ModulePoint{i, k});
    return out;
}

int point_id(const KupischSeries& ks, const ModulePoint& m) {
    int off = 0;
    for (int i = 1; i < m.top; ++i) off += ks.at(i);
    return off + m.len - 1;
}

std::optional<ModulePoint> syzygy(const KupischSeries& ks, const ModulePoint& m) {
    if (m.len == ks.at(m.top)) return std::nullopt;
    return ModulePoint{ks.layer(m.top, m.len + 1), ks.at(m.top) - m.len};
}

std::optional<ModulePoint> cosyzygy(const KupischSeries& ks, const ModulePoint& m) {
    if (ks.kind != Kind::cyclic) throw std::invalid_argument("cosyzygy needs a cyclic series");
    const int s = socle_vertex(ks, m);
    const int w = inj_env_length(ks, s);
    if (m.len == w) return std::nullopt;
    return ModulePoint{ks.reduce(s - w + 1), w - m.len};
}

std::string format_dim(const DimValue& d) {
    return d.is_finite ? std::to_string(d.value) : "infinite";
}

ResolutionTrace resolution_trace(const KupischSeries& ks, const ModulePoint& m, bool dual) {
    ResolutionTrace t;
    t.steps.push_back(m);
    auto step = [&](const ModulePoint& p) { return dual ? cosyzygy(ks, p) : syzygy(ks, p); };
    for (;;) {
        auto next = step(t.steps.back());
        if (!next) {
            t.terminal = ResolutionTrace::Terminal::reached_zero;
            return t;
        }
        auto seen = std::find(t.steps.begin(), t.steps.end(), *next);
        if (seen != t.steps.end()) {
            t.terminal = ResolutionTrace::Terminal::cycle_detected;
            t.first_repeat_index = static_cast<int>(seen - t.steps.begin());
            return t;
        }
        t.steps.push_back(*next);
    }
}

std::string format_trace(const ResolutionTrace& t) {
    std::string out;
    for (const auto& p : t.steps) {
        if (!out.empty()) out += " -> ";
        out += format_point(p);
    }
    if (t.terminal == ResolutionTrace::Terminal::reached_zero)
        out += " -> 0";
    else
        out += " -> cycle@" + std::to_string(t.first_repeat_index);
    return out;
}

namespace {

/* Dimension of every point at once: walk the functional graph (syzygy or
   cosyzygy), assign along the path once its tail is resolved.  A revisit
   inside the current path is a cycle, so everything on the path is infinite. */
std::vector<DimValue> dims_by_walk(
    const KupischSeries& ks,
    const std::function<std::optional<ModulePoint>(const ModulePoint&)>& step) {
    const int total = ks.total_points();
    std::vector<DimValue> dim(static_cast<size_t>(total));
    std::vector<char> done(static_cast<size_t>(total), 0);
    std::vector<int> onpath(static_cast<size_t>(total), -1);

    for (const auto& start : all_points(ks)) {
        if (done[static_cast<size_t>(point_id(ks, start))]) continue;
        std::vector<ModulePoint> path;
        ModulePoint cur = start;
        std::optional<DimValue> tail;
        for (;;) {
            int id = point_id(ks, cur);
            if (done[static_cast<size_t>(id)]) {
                tail = dim[static_cast<size_t>(id)];
                break;
            }
            if (onpath[static_cast<size_t>(id)] >= 0) {
                tail = DimValue::infinite();  // cycle; +1 below keeps it infinite
                break;
            }
            onpath[static_cast<size_t>(id)] = static_cast<int>(path.size());
            path.push_back(cur);
            auto next = step(cur);
            if (!next) {
                tail = std::nullopt;  // cur itself is projective/injective
                break;
            }
            cur = *next;
        }
        DimValue carry = tail ? (tail->is_finite ? DimValue::finite(tail->value + 1)
                                                 : DimValue::infinite())
                              : DimValue::finite(0);
        for (auto it = path.rbegin(); it != path.rend(); ++it) {
            int id = point_id(ks, *it);
            dim[static_cast<size_t>(id)] = carry;
            done[static_cast<size_t>(id)] = 1;
            onpath[static_cast<size_t>(id)] = -1;
            carry = carry.is_finite ? DimValue::finite(carry.value + 1) : DimValue::infinite();
        }
    }
    return dim;
}

}  // namespace

DimValue proj_dim(const KupischSeries& ks, const ModulePoint& m) {
    auto t = resolution_trace(ks, m, false);
    if (t.terminal == ResolutionTrace::Terminal::cycle_detected) return DimValue::infinite();
    return DimValue::finite(static_cast<int>(t.steps.size()) - 1);
}

DimValue inj_dim(const KupischSeries& ks, const ModulePoint& m) {
    auto t = resolution_trace(ks, m, true);
    if (t.terminal == ResolutionTrace::Terminal::cycle_detected) return DimValue::infinite();
    return DimValue::finite(static_cast<int>(t.steps.size()) - 1);
}

DimTables dim_tables(const KupischSeries& ks) {
    DimTables t;
    t.pd_point = dims_by_walk(ks, [&](const ModulePoint& p) { return syzygy(ks, p); });
    t.pd_simple.reserve(static_cast<size_t>(ks.n()));
    for (int i = 1; i <= ks.n(); ++i)
        t.pd_simple.push_back(t.pd_point[static_cast<size_t>(point_id(ks, {i, 1}))]);
    if (ks.kind == Kind::cyclic) {
        auto id_point = dims_by_walk(ks, [&](const ModulePoint& p) { return cosyzygy(ks, p); });
        for (int i = 1; i <= ks.n(); ++i)
            t.id_simple.push_back(id_point[static_cast<size_t>(point_id(ks, {i, 1}))]);
    }
    t.gldim = DimValue::finite(0);
    for (const auto& d : t.pd_simple)
        if (!d.is_finite)
            t.gldim = DimValue::infinite();
        else if (t.gldim.is_finite)
            t.gldim.value = std::max(t.gldim.value, d.value);
    t.findim = 0;
    for (const auto& d : t.pd_point)
        if (d.is_finite) t.findim = std::max(t.findim, d.value);
    return t;
}

DimValue global_dimension(const KupischSeries& ks) {
    DimValue g = DimValue::finite(0);
    for (int i = 1; i <= ks.n(); ++i) {
        DimValue d = proj_dim(ks, {i, 1});
        if (!d.is_finite) return DimValue::infinite();
        g.value = std::max(g.value, d.value);
    }
    return g;
}

int finitistic_dimension(const KupischSeries& ks) {
    return dim_tables(ks).findim;
}

}  // namespace nakayama
