#include "ranklists/measures.hpp"

#include <cmath>
#include <cstdlib>

namespace ranklists {

namespace {

// Fenwick tree over rank values, tracking per-prefix element counts and
// weight sums together.
class CountWeightFenwick {
  public:
    explicit CountWeightFenwick(int n) : counts_(n + 1, 0), weights_(n + 1, 0.0) {}

    void add(int value, double weight) {
        for (int i = value; i < static_cast<int>(counts_.size()); i += i & -i) {
            counts_[i] += 1;
            weights_[i] += weight;
        }
    }

    // count and weight sum of inserted values <= value
    std::pair<long long, double> prefix(int value) const {
        long long c = 0;
        double w = 0.0;
        for (int i = value; i > 0; i -= i & -i) {
            c += counts_[i];
            w += weights_[i];
        }
        return {c, w};
    }

  private:
    std::vector<long long> counts_;
    std::vector<double> weights_;
};

std::vector<double> resolve_weights(const AlignedPair& pair, const WeightTable& weights) {
    std::vector<double> w;
    w.reserve(pair.universe.size());
    for (const auto& tok : pair.universe) w.push_back(weights.get(tok));
    return w;
}

}  // namespace

double footrule_weighted(const AlignedPair& pair, const WeightTable& weights) {
    double total = 0.0;
    for (int i = 0; i < pair.size(); ++i) {
        total += weights.get(pair.universe[i]) * std::abs((i + 1) - pair.pi_ranks[i]);
    }
    return total;
}

double footrule_denominator(std::span<const std::string> universe, const WeightTable& weights) {
    const int n = static_cast<int>(universe.size());
    if (n == 0) throw ValidationError("footrule denominator needs a nonempty universe");
    double total = 0.0;
    for (int i = 1; i <= n; ++i) {
        total += weights.get(universe[i - 1]) * std::abs(i - (n - i + 1));
    }
    return total;
}

double kendall_weighted(const AlignedPair& pair, const WeightTable& weights, KendallAlgo algo) {
    const int n = pair.size();
    const std::vector<double> w = resolve_weights(pair, weights);
    double twice = 0.0;
    if (algo == KendallAlgo::Naive) {
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (pair.pi_ranks[i] > pair.pi_ranks[j]) twice += w[i] + w[j];
            }
        }
    } else {
        // 2 K_w splits into sum of w(i) over inversions plus sum of w(j) over
        // inversions; one scan over j accumulates both from prefix queries.
        CountWeightFenwick tree(n);
        long long inserted = 0;
        double inserted_weight = 0.0;
        for (int j = 0; j < n; ++j) {
            auto [c_le, w_le] = tree.prefix(pair.pi_ranks[j]);
            long long c_gt = inserted - c_le;
            double w_gt = inserted_weight - w_le;
            twice += static_cast<double>(c_gt) * w[j] + w_gt;
            tree.add(pair.pi_ranks[j], w[j]);
            inserted += 1;
            inserted_weight += w[j];
        }
    }
    return twice / 2.0;
}

double kendall_denominator(std::span<const std::string> universe, const WeightTable& weights) {
    const int n = static_cast<int>(universe.size());
    if (n == 0) throw ValidationError("kendall denominator needs a nonempty universe");
    double weight_sum = 0.0;
    for (const auto& tok : universe) weight_sum += weights.get(tok);
    return (static_cast<double>(n - 1) / 2.0) * weight_sum;
}

double signed_scale(double v) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw ValidationError("signed scale is defined only on [0,1]");
    }
    return 1.0 - 2.0 * v;
}

MeasureReport measure(const AlignedPair& pair, const WeightTable& weights) {
    MeasureReport report;
    report.n = pair.size();
    report.footrule_raw = footrule_weighted(pair, weights);
    report.footrule_denom = footrule_denominator(pair.universe, weights);
    report.kendall_raw = kendall_weighted(pair, weights, KendallAlgo::Fast);
    report.kendall_denom = kendall_denominator(pair.universe, weights);
    const double tol = measure_tolerance(report.footrule_raw);
    if (report.footrule_denom > 0.0) {
        report.footrule_norm = report.footrule_raw / report.footrule_denom;
        report.footrule_norm_overflow = *report.footrule_norm > 1.0 + 1e-12;
    }
    if (report.kendall_denom > 0.0) {
        report.kendall_norm = report.kendall_raw / report.kendall_denom;
    }
    if (report.kendall_raw > 0.0) {
        report.ratio = report.footrule_raw / report.kendall_raw;
    }
    report.dg_holds = report.kendall_raw <= report.footrule_raw + tol &&
                      report.footrule_raw <= 2.0 * report.kendall_raw + tol;
    return report;
}

MeasureReport compare(const RankedList& a, const RankedList& b, const WeightTable& weights) {
    auto [a_full, b_full] = complete_pair(a, b);
    return measure(align(a_full, b_full), weights);
}

long long footrule_unweighted(std::span<const int> ranks) {
    long long total = 0;
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        total += std::abs(static_cast<long long>(i + 1) - ranks[i]);
    }
    return total;
}

long long inversion_count(std::span<const int> ranks) {
    long long total = 0;
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        for (std::size_t j = i + 1; j < ranks.size(); ++j) {
            if (ranks[i] > ranks[j]) ++total;
        }
    }
    return total;
}

void footrule_and_inversions(std::span<const int> ranks, long long& footrule, long long& inversions) {
    footrule = 0;
    inversions = 0;
    const std::size_t n = ranks.size();
    for (std::size_t i = 0; i < n; ++i) {
        footrule += std::abs(static_cast<long long>(i + 1) - ranks[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            if (ranks[i] > ranks[j]) ++inversions;
        }
    }
}

}  // namespace ranklists
