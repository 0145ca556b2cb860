#include "nakayama/kupisch.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace nakayama {

int KupischSeries::loewy_length() const {
    return *std::max_element(lengths.begin(), lengths.end());
}

int KupischSeries::total_points() const {
    return std::accumulate(lengths.begin(), lengths.end(), 0);
}

KupischSeries validate(Kind kind, const std::vector<int>& lengths) {
    if (lengths.empty()) throw ValidationError(0, "empty series");
    const int n = static_cast<int>(lengths.size());
    auto c = [&](int i) { return lengths[static_cast<size_t>(i) - 1]; };

    if (kind == Kind::cyclic) {
        for (int i = 1; i <= n; ++i)
            if (c(i) < 2)
                throw ValidationError(i, "cyclic series needs c[" + std::to_string(i) +
                                             "] >= 2, got " + std::to_string(c(i)));
        for (int i = 1; i < n; ++i)
            if (c(i + 1) < c(i) - 1)
                throw ValidationError(
                    i, "c[" + std::to_string(i + 1) + "]=" + std::to_string(c(i + 1)) +
                           " < c[" + std::to_string(i) + "]-1=" + std::to_string(c(i) - 1));
        if (n > 1 && c(1) < c(n) - 1)
            throw ValidationError(n, "c[1]=" + std::to_string(c(1)) + " < c[" +
                                         std::to_string(n) + "]-1=" + std::to_string(c(n) - 1));
    } else {
        // [1] is the semisimple single-vertex quotient; larger series are the
        // usual triangular ones ending in the unique simple projective.
        if (c(n) != 1)
            throw ValidationError(n, "linear series must end with c[n] = 1, got " +
                                         std::to_string(c(n)));
        for (int i = 1; i < n; ++i)
            if (c(i) < 2)
                throw ValidationError(i, "linear series needs c[" + std::to_string(i) +
                                             "] >= 2 before the end, got " +
                                             std::to_string(c(i)));
        for (int i = 1; i < n; ++i)
            if (c(i + 1) < c(i) - 1)
                throw ValidationError(
                    i, "c[" + std::to_string(i + 1) + "]=" + std::to_string(c(i + 1)) +
                           " < c[" + std::to_string(i) + "]-1=" + std::to_string(c(i) - 1));
        for (int i = 1; i <= n; ++i)
            if (c(i) > n - i + 1)
                throw ValidationError(i, "c[" + std::to_string(i) + "]=" +
                                             std::to_string(c(i)) + " overruns the line (max " +
                                             std::to_string(n - i + 1) + ")");
    }
    return KupischSeries{kind, lengths};
}

KupischSeries cyclic_series(std::vector<int> lengths) {
    return validate(Kind::cyclic, lengths);
}

KupischSeries linear_series(std::vector<int> lengths) {
    return validate(Kind::linear, lengths);
}

KupischSeries parse_series(const std::string& text) {
    std::string body = text;
    Kind kind = Kind::cyclic;
    const std::string prefix = "linear:";
    if (body.rfind(prefix, 0) == 0) {
        kind = Kind::linear;
        body = body.substr(prefix.size());
    }
    std::vector<int> lengths;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw ValidationError(0, "malformed series entry '" + item + "'");
        }
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size())
            throw ValidationError(0, "malformed series entry '" + item + "'");
        if (value <= 0)
            throw ValidationError(0, "series entries must be positive, got " + item);
        lengths.push_back(value);
    }
    return validate(kind, lengths);
}

std::string format_series(const KupischSeries& ks) {
    std::string out = ks.kind == Kind::linear ? "linear:" : "";
    for (int i = 0; i < ks.n(); ++i) {
        if (i) out += ',';
        out += std::to_string(ks.lengths[static_cast<size_t>(i)]);
    }
    return out;
}

namespace {

std::vector<int> rotate_left(const std::vector<int>& v, int r) {
    std::vector<int> out(v.size());
    const int n = static_cast<int>(v.size());
    for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = v[static_cast<size_t>((i + r) % n)];
    return out;
}

}  // namespace

KupischSeries canonicalize(const KupischSeries& ks) {
    if (ks.kind == Kind::linear) return ks;
    std::vector<int> best = ks.lengths;
    for (int r = 1; r < ks.n(); ++r) {
        auto cand = rotate_left(ks.lengths, r);
        if (cand < best) best = cand;
    }
    return KupischSeries{Kind::cyclic, best};
}

bool is_canonical(const KupischSeries& ks) {
    return ks == canonicalize(ks);
}

std::optional<KupischSeries> paper_rotation(const KupischSeries& ks) {
    if (ks.kind == Kind::linear) return ks;
    if (is_selfinjective(ks)) return std::nullopt;
    const int n = ks.n();
    const int min_c = *std::min_element(ks.lengths.begin(), ks.lengths.end());
    std::optional<std::vector<int>> best;
    for (int r = 0; r < n; ++r) {
        auto cand = rotate_left(ks.lengths, r);
        if (cand.front() == min_c && cand.front() == cand.back() - 1)
            if (!best || cand < *best) best = cand;
    }
    if (!best) return std::nullopt;
    return KupischSeries{Kind::cyclic, *best};
}

bool is_selfinjective(const KupischSeries& ks) {
    if (ks.kind != Kind::cyclic) return false;
    return std::all_of(ks.lengths.begin(), ks.lengths.end(),
                       [&](int c) { return c == ks.lengths.front(); });
}

bool has_simple_projective(const KupischSeries& ks) {
    return ks.kind == Kind::linear;
}

void enumerate_series(int n, int max_len, Kind kind,
                      const std::function<void(const KupischSeries&)>& emit) {
    if (n < 1) throw std::invalid_argument("enumerate: n must be >= 1");
    if (max_len < 2) throw std::invalid_argument("enumerate: max_len must be >= 2");

    std::vector<int> c(static_cast<size_t>(n));
    if (kind == Kind::cyclic) {
        // Canonical series start at their minimum entry, so branches below
        // c[0] are pruned; final rotation check resolves ties.
        auto rec = [&](auto&& self, int i) -> void {
            if (i == n) {
                if (n > 1 && c[0] < c[static_cast<size_t>(n - 1)] - 1) return;
                KupischSeries ks{Kind::cyclic, c};
                if (is_canonical(ks)) emit(ks);
                return;
            }
            int lo = std::max(c[static_cast<size_t>(i - 1)] - 1, c[0]);
            for (int v = std::max(lo, 2); v <= max_len; ++v) {
                c[static_cast<size_t>(i)] = v;
                self(self, i + 1);
            }
        };
        for (int first = 2; first <= max_len; ++first) {
            c[0] = first;
            if (n == 1) {
                emit(KupischSeries{Kind::cyclic, c});
                continue;
            }
            rec(rec, 1);
        }
    } else {
        if (n == 1) {
            c[0] = 1;
            emit(KupischSeries{Kind::linear, c});
            return;
        }
        c[static_cast<size_t>(n - 1)] = 1;
        auto rec = [&](auto&& self, int i) -> void {
            if (i == n - 1) {
                if (c[static_cast<size_t>(n - 2)] > 2) return;  // c[n] = 1 forces it
                emit(KupischSeries{Kind::linear, c});
                return;
            }
            int lo = i == 0 ? 2 : std::max(2, c[static_cast<size_t>(i - 1)] - 1);
            int hi = std::min(max_len, n - i);  // c_i <= n - i + 1, 0-based i
            for (int v = lo; v <= hi; ++v) {
                c[static_cast<size_t>(i)] = v;
                self(self, i + 1);
            }
        };
        rec(rec, 0);
    }
}

std::vector<KupischSeries> enumerate_series(int n, int max_len, Kind kind) {
    std::vector<KupischSeries> out;
    enumerate_series(n, max_len, kind, [&](const KupischSeries& ks) { out.push_back(ks); });
    return out;
}

int local_size_at(const KupischSeries& ks, int v) {
    if (v < 1 || v > ks.n()) throw std::invalid_argument("vertex out of range");
    return (ks.at(v) - 1) / ks.n() + 1;
}

KupischSeries quotient_by_vertex(const KupischSeries& ks, int v) {
    if (ks.kind != Kind::cyclic) throw std::invalid_argument("quotient needs a cyclic series");
    if (v < 1 || v > ks.n()) throw std::invalid_argument("vertex out of range");
    const int n = ks.n();
    if (n == 1) throw std::domain_error("quotient by the only vertex is the zero algebra");
    std::vector<int> c(static_cast<size_t>(n - 1));
    for (int j = 1; j < n; ++j)
        c[static_cast<size_t>(j - 1)] = std::min(ks.at(ks.reduce(v + j)), n - j);
    return validate(Kind::linear, c);
}

bool trace_is_projective(const KupischSeries& ks, int v) {
    if (ks.kind != Kind::cyclic) throw std::invalid_argument("trace needs a cyclic series");
    if (v < 1 || v > ks.n()) throw std::invalid_argument("vertex out of range");
    for (int i = 1; i <= ks.n(); ++i) {
        for (int l = 1; l <= ks.at(i); ++l) {
            if (ks.layer(i, l) != v) continue;
            if (ks.at(i) - l + 1 != ks.at(v)) return false;
            break;  // topmost occurrence decides
        }
    }
    return true;
}

}  // namespace nakayama
