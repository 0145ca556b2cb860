#pragma once

/*
  Kupisch series of basic connected Nakayama algebras.

  A cyclic series [c_1,...,c_n] has every c_i >= 2, c_{i+1} >= c_i - 1 and
  c_1 >= c_n - 1; the indecomposable projective P_i is uniserial of length
  c_i with composition factors S_i, S_{i+1}, ... read from the top, indices
  cyclic in 1..n.  A linear series ends in c_n = 1 (the unique simple
  projective) and never wraps.  The single-vertex series [1] is accepted as
  the semisimple quotient that idempotent quotients of two-vertex algebras
  produce.
*/

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nakayama {

enum class Kind { cyclic, linear };

/* First violated constraint; index is the 1-based position of the offending
   inequality (0 for global problems such as an empty series). */
struct ValidationError : std::runtime_error {
    int index;
    ValidationError(int idx, const std::string& what)
        : std::runtime_error(what), index(idx) {}
};

struct KupischSeries {
    Kind kind = Kind::cyclic;
    std::vector<int> lengths;  // c_1..c_n

    int n() const { return static_cast<int>(lengths.size()); }
    int at(int v) const { return lengths[static_cast<size_t>(v) - 1]; }

    // reduce any integer into 1..n (cyclic vertex arithmetic)
    int reduce(int v) const {
        int nn = n();
        int r = (v - 1) % nn;
        if (r < 0) r += nn;
        return r + 1;
    }
    // vertex carried by layer l of P_i (layers counted from the top, 1-based)
    int layer(int i, int l) const {
        if (kind == Kind::cyclic) return reduce(i + l - 1);
        return i + l - 1;
    }
    int loewy_length() const;
    int total_points() const;  // sum of the c_i

    bool operator==(const KupischSeries&) const = default;
};

KupischSeries validate(Kind kind, const std::vector<int>& lengths);
KupischSeries cyclic_series(std::vector<int> lengths);
KupischSeries linear_series(std::vector<int> lengths);

/* Text form: "2,2,3" (cyclic) or "linear:2,2,1". */
KupischSeries parse_series(const std::string& text);
std::string format_series(const KupischSeries& ks);

/* Lexicographically smallest rotation (identity on linear series).  Two
   cyclic series present isomorphic algebras iff their canonical forms agree. */
KupischSeries canonicalize(const KupischSeries& ks);
bool is_canonical(const KupischSeries& ks);

/* Alternative normalization: rotate so that c_1 = c_n - 1 with c_1 minimal
   among the entries; undefined (nullopt) for constant series. */
std::optional<KupischSeries> paper_rotation(const KupischSeries& ks);

bool is_selfinjective(const KupischSeries& ks);
bool has_simple_projective(const KupischSeries& ks);

/* Kupisch series of the opposite algebra: the injective-envelope lengths
   read in reversed vertex order, then canonicalized. */
KupischSeries opposite(const KupischSeries& ks);

/* All valid series with the given vertex count and entries <= max_len, one
   canonical representative per isomorphism class, in lexicographic order. */
void enumerate_series(int n, int max_len, Kind kind,
                      const std::function<void(const KupischSeries&)>& emit);
std::vector<KupischSeries> enumerate_series(int n, int max_len, Kind kind);

/* Composition length of the corner algebra e_vAe_v: floor((c_v - 1)/n) + 1.
   Equals 1 exactly when c_v <= n. */
int local_size_at(const KupischSeries& ks, int v);

/* Kupisch series of A/Ae_vA on the remaining n-1 vertices (relabelled so
   that quotient vertex j is the original vertex v+j): c'_j = min(c_{v+j}, n-j).
   Throws for n = 1, where the quotient is the zero algebra. */
KupischSeries quotient_by_vertex(const KupischSeries& ks, int v);

/* Whether the trace ideal Ae_vA is projective as a right module: every
   uniserial P_i that sees vertex v must see it with a full copy of P_v
   hanging below its topmost occurrence. */
bool trace_is_projective(const KupischSeries& ks, int v);

}  // namespace nakayama
