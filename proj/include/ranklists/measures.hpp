#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ranklists/core.hpp"

namespace ranklists {

enum class KendallAlgo { Naive, Fast };

/// Relative tolerance used for inequality and equivalence checks, scaled by
/// max(1, scale).
inline double measure_tolerance(double scale) {
    return 1e-9 * (scale > 1.0 ? scale : 1.0);
}

/// Weighted Spearman's footrule: sum over elements of weight times absolute
/// rank displacement.
double footrule_weighted(const AlignedPair& pair, const WeightTable& weights);

/// Normalizer for the footrule: its value at the order-reversing permutation.
/// Zero when n == 1.
double footrule_denominator(std::span<const std::string> universe, const WeightTable& weights);

/// Weighted Kendall's tau: sum over discordant pairs of the average of the two
/// element weights. Naive is the literal O(n^2) double loop; Fast counts
/// weighted inversions with a Fenwick tree in O(n log n). Both agree (exactly
/// for integer weights).
double kendall_weighted(const AlignedPair& pair, const WeightTable& weights,
                        KendallAlgo algo = KendallAlgo::Fast);

/// Normalizer for Kendall's tau: the all-pairs weight-average sum, via the
/// closed form (n-1)/2 * sum of weights. Zero when n == 1.
double kendall_denominator(std::span<const std::string> universe, const WeightTable& weights);

/// Map a normalized value in [0,1] to [-1,1]: 1 - 2v. Rejects v outside [0,1].
double signed_scale(double v);

struct MeasureReport {
    int n = 0;
    double footrule_raw = 0.0;
    double footrule_denom = 0.0;
    double kendall_raw = 0.0;
    double kendall_denom = 0.0;
    // Absent when the denominator is zero (n == 1): 0/0 has no meaning.
    std::optional<double> footrule_norm;
    std::optional<double> kendall_norm;
    // The footrule normalizer is not the true maximum under non-uniform
    // weights, so the normalized value can exceed 1. Reported unclamped with
    // this flag set.
    bool footrule_norm_overflow = false;
    std::optional<double> ratio;  // S_w / K_w, absent when K_w == 0
    bool dg_holds = false;        // K_w <= S_w <= 2 K_w within tolerance
};

/// All measures for an already aligned pair.
MeasureReport measure(const AlignedPair& pair, const WeightTable& weights);

/// Full pipeline: complete the two (possibly partial) lists, align, measure.
MeasureReport compare(const RankedList& a, const RankedList& b, const WeightTable& weights);

// Exact integer kernels over unit-weight rank vectors (1-based values), shared
// with the enumeration experiments.
long long footrule_unweighted(std::span<const int> ranks);
long long inversion_count(std::span<const int> ranks);
// Both in one pass.
void footrule_and_inversions(std::span<const int> ranks, long long& footrule, long long& inversions);

}  // namespace ranklists
