#pragma once

/*
  Syzygy and cosyzygy dynamics on the indecomposables M(i,k) = e_iA/e_iJ^k.

  Every indecomposable of a Nakayama algebra is such a module point, so both
  maps are functions on a finite set and every projective or injective
  dimension is decided exactly by orbit walking with a visited set.
*/

#include "nakayama/kupisch.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace nakayama {

struct ModulePoint {
    int top = 1;  // vertex i
    int len = 1;  // k, 1 <= k <= c_i
    auto operator<=>(const ModulePoint&) const = default;
};

ModulePoint module_point(const KupischSeries& ks, int top, int len);
std::string format_point(const ModulePoint& m);  // "M(2,3)"
ModulePoint parse_point(const KupischSeries& ks, const std::string& text);

bool is_projective_point(const KupischSeries& ks, const ModulePoint& m);
int socle_vertex(const KupischSeries& ks, const ModulePoint& m);
std::vector<int> layer_list(const KupischSeries& ks, const ModulePoint& m);
std::vector<ModulePoint> all_points(const KupischSeries& ks);

/* Kernel of the projective cover P_i -> M(i,k); empty optional for zero. */
std::optional<ModulePoint> syzygy(const KupischSeries& ks, const ModulePoint& m);

/* Cokernel of the injective envelope M(i,k) -> I_soc; cyclic series only. */
std::optional<ModulePoint> cosyzygy(const KupischSeries& ks, const ModulePoint& m);

struct DimValue {
    static DimValue finite(int d) { return DimValue{true, d}; }
    static DimValue infinite() { return DimValue{false, 0}; }

    bool is_finite = true;
    int value = 0;  // meaningful only when finite

    bool operator==(const DimValue&) const = default;
    bool leq(const DimValue& o) const {
        if (!o.is_finite) return true;
        return is_finite && value <= o.value;
    }
    bool leq(int bound) const { return is_finite && value <= bound; }
};
std::string format_dim(const DimValue& d);  // "4" or "infinite"

struct ResolutionTrace {
    enum class Terminal { reached_zero, cycle_detected };
    std::vector<ModulePoint> steps;  // starting point followed by its (co)syzygies
    Terminal terminal = Terminal::reached_zero;
    int first_repeat_index = -1;  // index into steps where the cycle re-enters
};
ResolutionTrace resolution_trace(const KupischSeries& ks, const ModulePoint& m,
                                 bool dual = false);
std::string format_trace(const ResolutionTrace& t);  // "M(1,1) -> ... -> 0 | cycle@j"

DimValue proj_dim(const KupischSeries& ks, const ModulePoint& m);
DimValue inj_dim(const KupischSeries& ks, const ModulePoint& m);

DimValue global_dimension(const KupischSeries& ks);
int finitistic_dimension(const KupischSeries& ks);

struct DimTables {
    std::vector<DimValue> pd_simple;  // pd S_1..S_n
    std::vector<DimValue> id_simple;  // id S_1..S_n (cyclic series only)
    std::vector<DimValue> pd_point;   // indexed by point id, see point_id()
    DimValue gldim;
    int findim = 0;
};
DimTables dim_tables(const KupischSeries& ks);

/* Dense point numbering: id = (sum of c_j for j < top) + len - 1. */
int point_id(const KupischSeries& ks, const ModulePoint& m);

}  // namespace nakayama
