#pragma once

/*
  Injective-envelope lengths w(i), the psi-map S -> tau^{-w(S)} S on simples,
  psi-regularity, and the global-dimension bounds they control.
*/

#include "nakayama/homology.hpp"
#include "nakayama/kupisch.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace nakayama {

/* Length of the injective envelope of S_i: the largest k with c_{i-k+1} >= k.
   For linear series the candidates stop at k = i. */
int inj_env_length(const KupischSeries& ks, int i);

struct PsiProfile {
    std::vector<int> w;    // w(1..n)
    std::vector<int> psi;  // psi(i) = i - w(i) reduced into 1..n
    std::vector<int> regular;              // vertices on a psi-cycle, ascending
    std::vector<std::vector<int>> cycles;  // partition of regular into cycles
    int d = 0;                             // number of non-regular vertices
    std::optional<int> m;  // minimal t with some simple of pd exactly 2t
};
PsiProfile psi_profile(const KupischSeries& ks);  // cyclic series only

/* m of the profile; defined as 0 for linear series (simple projective). */
std::optional<int> minimal_even_half(const KupischSeries& ks);

struct FiniteGldimCriterion {
    bool has_even_pd_simple = false;
    bool regular_equals_even_set = false;
    bool psi_single_cycle_on_regular = false;  // psi restricted to the even-pd
                                               // set is one nonempty cycle
    bool gldim_finite = false;
};
FiniteGldimCriterion finite_gldim_criterion(const KupischSeries& ks);

struct PreconditionInfiniteGldim : std::runtime_error {
    PreconditionInfiniteGldim()
        : std::runtime_error("bound report requires finite global dimension") {}
};

struct BoundCheck {
    int bound = 0;
    bool holds = false;
};
struct BoundReport {
    int gldim = 0;
    int n = 0;
    int m = 0;
    int d = 0;
    int max_regular_pd = 0;
    BoundCheck le_n_plus_m_minus_1;   // gldim <= n + m - 1
    BoundCheck le_2n_minus_2;         // gldim <= 2n - 2
    BoundCheck le_2d;                 // gldim <= 2d
    BoundCheck twice_le_2m_2n_minus_1;  // 2*gldim <= 2m + 2n - 1
    BoundCheck le_max_regular_pd_plus_1;
    BoundCheck regular_pd_le_2m_2nd;  // max regular pd <= 2m + 2(n-d-1)
    bool main_bound_attained = false;  // gldim == n + m - 1
    bool all_hold() const;
};
BoundReport bound_report(const KupischSeries& ks);  // throws on infinite gldim

}  // namespace nakayama
