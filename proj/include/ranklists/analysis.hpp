#pragma once

#include <optional>
#include <vector>

#include "ranklists/core.hpp"
#include "ranklists/measures.hpp"

namespace ranklists {

// Diagnostics mirroring the swap-telescoping and inversion-type arguments
// behind the weighted Diaconis-Graham bound. The production Kendall path
// never builds these; they exist for verification and the --explain output.

enum class SwapCase { Case1, Case2, Case3 };

/// One adjacent transposition on the way from the identity to the target
/// permutation. index is the 1-based left position of the swapped pair;
/// before is the state prior to the swap (as a value sequence); low_value /
/// high_value are the swapped values (low at position index before the swap).
/// delta is the footrule change under the supplied weights.
struct SwapStep {
    int index = 0;
    std::vector<int> before;
    int low_value = 0;
    int high_value = 0;
    double delta = 0.0;
    SwapCase swap_case = SwapCase::Case3;
};

/// A minimal sequence of adjacent transpositions from the identity to the
/// pair's permutation, built by recording deterministic bubble-sort swaps and
/// reversing the record. Length equals the unweighted inversion count.
std::vector<SwapStep> minimal_swap_sequence(const AlignedPair& pair, const WeightTable& weights);

struct TelescopingReport {
    double delta_sum = 0.0;
    double footrule = 0.0;
    bool sum_matches = false;
    bool cases_match = false;
    int first_mismatch = -1;  // 0-based step index, -1 when all match
};

/// Checks that the swap deltas telescope to the weighted footrule and that
/// every delta equals its case formula (w(x) -/+ w(x+1) per the three cases).
TelescopingReport telescoping_check(const std::vector<SwapStep>& steps, const AlignedPair& pair,
                                    const WeightTable& weights);

struct InversionDecomposition {
    long long total_inversions = 0;
    long long type1 = 0;
    long long type2 = 0;
    long long both = 0;
};

/// Classifies each inversion [i;j] (i < j, pi(i) > pi(j)): Type I iff
/// pi(i) >= j, Type II iff pi(i) <= j. Every inversion is at least one type,
/// both exactly when pi(i) == j.
InversionDecomposition inversion_types(const AlignedPair& pair);

struct DgReport {
    double kendall_raw = 0.0;
    double footrule_raw = 0.0;
    double twice_kendall = 0.0;
    bool holds_lower = false;  // K_w <= S_w
    bool holds_upper = false;  // S_w <= 2 K_w
    std::optional<double> ratio;
};

DgReport dg_report(const AlignedPair& pair, const WeightTable& weights);

}  // namespace ranklists
