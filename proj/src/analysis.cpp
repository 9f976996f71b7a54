#include "ranklists/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace ranklists {

namespace {

// Inverse permutation: out[v-1] holds the 1-based position of value v.
std::vector<int> invert(const std::vector<int>& perm) {
    std::vector<int> inv(perm.size());
    for (int i = 0; i < static_cast<int>(perm.size()); ++i) {
        inv[perm[i] - 1] = i + 1;
    }
    return inv;
}

double case_delta(SwapCase c, double w_low, double w_high) {
    switch (c) {
        case SwapCase::Case1: return w_low - w_high;
        case SwapCase::Case2: return w_high - w_low;
        case SwapCase::Case3: return w_low + w_high;
    }
    return 0.0;
}

}  // namespace

std::vector<SwapStep> minimal_swap_sequence(const AlignedPair& pair, const WeightTable& weights) {
    const int n = pair.size();
    // Sort in element space: state[p-1] is the reference rank of the element
    // occupying position p. The target state is the inverse of pi_ranks; the
    // footrule of a state under weights keyed to the moving values equals the
    // weighted footrule of the pair at the target.
    std::vector<int> state = invert(pair.pi_ranks);

    // Deterministic left-to-right bubble sort; record gives a minimal swap
    // sequence from the target back to the identity.
    std::vector<int> record;  // 0-based left positions
    std::vector<int> sorting = state;
    bool swapped = true;
    while (swapped) {
        swapped = false;
        for (int x = 0; x + 1 < n; ++x) {
            if (sorting[x] > sorting[x + 1]) {
                std::swap(sorting[x], sorting[x + 1]);
                record.push_back(x);
                swapped = true;
            }
        }
    }

    std::vector<double> value_weight(n);
    for (int v = 1; v <= n; ++v) value_weight[v - 1] = weights.get(pair.universe[v - 1]);

    // Replay the record in reverse from the identity; every forward swap
    // creates exactly one inversion, so the pair is ascending beforehand.
    std::vector<SwapStep> steps;
    steps.reserve(record.size());
    std::vector<int> current(n);
    for (int i = 0; i < n; ++i) current[i] = i + 1;
    for (auto it = record.rbegin(); it != record.rend(); ++it) {
        const int x0 = *it;
        const int x1 = x0 + 1;  // 1-based left position
        const int low = current[x0];
        const int high = current[x0 + 1];
        const double w_low = value_weight[low - 1];
        const double w_high = value_weight[high - 1];

        SwapStep step;
        step.index = x1;
        step.before = current;
        step.low_value = low;
        step.high_value = high;
        // Footrule change from moving low to position x1+1 and high to x1.
        step.delta = w_low * (std::abs(low - (x1 + 1)) - std::abs(low - x1)) +
                     w_high * (std::abs(high - x1) - std::abs(high - (x1 + 1)));
        if (high <= x1) {
            step.swap_case = SwapCase::Case1;
        } else if (low >= x1 + 1) {
            step.swap_case = SwapCase::Case2;
        } else {
            step.swap_case = SwapCase::Case3;
        }
        steps.push_back(std::move(step));
        std::swap(current[x0], current[x0 + 1]);
    }
    return steps;
}

TelescopingReport telescoping_check(const std::vector<SwapStep>& steps, const AlignedPair& pair,
                                    const WeightTable& weights) {
    TelescopingReport report;
    report.footrule = footrule_weighted(pair, weights);
    report.cases_match = true;
    for (std::size_t k = 0; k < steps.size(); ++k) {
        const SwapStep& step = steps[k];
        const double w_low = weights.get(pair.universe[step.low_value - 1]);
        const double w_high = weights.get(pair.universe[step.high_value - 1]);
        const double expected = case_delta(step.swap_case, w_low, w_high);
        const double tol = measure_tolerance(std::abs(expected));
        if (std::abs(step.delta - expected) > tol && report.cases_match) {
            report.cases_match = false;
            report.first_mismatch = static_cast<int>(k);
        }
        report.delta_sum += step.delta;
    }
    report.sum_matches =
        std::abs(report.delta_sum - report.footrule) <= measure_tolerance(report.footrule);
    return report;
}

InversionDecomposition inversion_types(const AlignedPair& pair) {
    InversionDecomposition out;
    const int n = pair.size();
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (pair.pi_ranks[i - 1] <= pair.pi_ranks[j - 1]) continue;
            ++out.total_inversions;
            const bool t1 = pair.pi_ranks[i - 1] >= j;
            const bool t2 = pair.pi_ranks[i - 1] <= j;
            if (t1) ++out.type1;
            if (t2) ++out.type2;
            if (t1 && t2) ++out.both;
        }
    }
    return out;
}

DgReport dg_report(const AlignedPair& pair, const WeightTable& weights) {
    DgReport report;
    report.kendall_raw = kendall_weighted(pair, weights, KendallAlgo::Fast);
    report.footrule_raw = footrule_weighted(pair, weights);
    report.twice_kendall = 2.0 * report.kendall_raw;
    const double tol = measure_tolerance(report.footrule_raw);
    report.holds_lower = report.kendall_raw <= report.footrule_raw + tol;
    report.holds_upper = report.footrule_raw <= report.twice_kendall + tol;
    if (report.kendall_raw > 0.0) report.ratio = report.footrule_raw / report.kendall_raw;
    return report;
}

}  // namespace ranklists
