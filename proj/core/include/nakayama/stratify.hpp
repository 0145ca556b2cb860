#pragma once

/*
  Standard and proper standard modules relative to an idempotent ordering,
  proper-standard filtrations of uniserials, and the standardly-stratified /
  quasi-hereditary classification.

  A uniserial module has at most one filtration with proper standard
  subquotients: the top quotient is forced by the top vertex, so the greedy
  top-down stripping decides membership in F(delta-bar) exactly.
*/

#include "nakayama/homology.hpp"
#include "nakayama/kupisch.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nakayama {

struct IdempotentOrdering {
    std::vector<int> order;  // order[t-1] = vertex at position t; a permutation of 1..n
    bool operator==(const IdempotentOrdering&) const = default;
};
IdempotentOrdering parse_ordering(const KupischSeries& ks, const std::string& text);
std::string format_ordering(const IdempotentOrdering& ord);  // "2,1"
void check_ordering(const KupischSeries& ks, const IdempotentOrdering& ord);

struct StandardLengths {
    std::vector<int> delta;         // |Delta(t)| by position t
    std::vector<int> proper_delta;  // |Delta-bar(t)| by position t
};
StandardLengths standard_lengths(const KupischSeries& ks, const IdempotentOrdering& ord);

bool has_proper_standard_filtration(const KupischSeries& ks,
                                    const IdempotentOrdering& ord,
                                    const ModulePoint& m);

/* A is standardly stratified w.r.t. ord iff every projective filters. */
bool is_ss_with_order(const KupischSeries& ks, const IdempotentOrdering& ord);

struct CutoffExceeded : std::runtime_error {
    int n;
    explicit CutoffExceeded(int n_)
        : std::runtime_error("ordering search cutoff exceeded (n = " +
                             std::to_string(n_) + ")"),
          n(n_) {}
};

/* Lexicographically first accepted ordering over all n! candidates. */
std::optional<IdempotentOrdering> ss_search(const KupischSeries& ks, int cutoff = 8);

/* Linear series are quasi-hereditary; a cyclic series is quasi-hereditary
   iff some simple has projective dimension exactly two. */
bool is_quasi_hereditary(const KupischSeries& ks);

/* Rotation match against [k+qn, k+n-1+qn, k+n-2+qn, ..., k+1+qn] with
   2 <= k <= n and q >= 1, or k = n+1 and q >= 0. */
struct PatternMatch {
    int k = 0;
    int q = 0;
    int offset = 0;  // pattern position p is original vertex offset + p (reduced)
    bool operator==(const PatternMatch&) const = default;
};
std::optional<PatternMatch> pattern_match(const KupischSeries& ks);

enum class StratKind { quasi_hereditary, ss_not_qh, not_ss };
const char* strat_label(StratKind k);  // "QH" | "SS" | "NONE"

struct StratClass {
    StratKind klass = StratKind::not_ss;
    std::optional<IdempotentOrdering> witness;
    std::optional<PatternMatch> pattern;
    bool properly_stratified = false;
};
StratClass classify(const KupischSeries& ks);

}  // namespace nakayama
