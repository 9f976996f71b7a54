#pragma once

#include <algorithm>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <numeric>
#include <span>
#include <vector>

#include <json.hpp>

#include "ranklists/core.hpp"

namespace ranklists {

// Exhaustive enumeration over all permutations of {1..n}, accumulating exact
// rational frequency tables for the S/K ratio and the normalized measures.

inline constexpr int kMaxEnumN = 12;  // 12! caps desk-scale runtime

/// Exact rational in lowest terms with positive denominator.
struct Fraction {
    long long num = 0;
    long long den = 1;

    static Fraction reduced(long long num, long long den);
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    bool operator==(const Fraction&) const = default;
    bool operator<(const Fraction& other) const {
        // values here are small; cross multiplication cannot overflow
        return num * other.den < other.num * den;
    }
};

/// value -> count multiset over an enumerated population.
struct FrequencyTable {
    std::map<Fraction, std::uint64_t> entries;
    std::uint64_t total = 0;

    void add(Fraction value, std::uint64_t count = 1) {
        entries[value] += count;
        total += count;
    }
    // Associative and commutative, so parallel partial tables merge to the
    // same result as serial enumeration.
    void merge(const FrequencyTable& other) {
        for (const auto& [value, count] : other.entries) entries[value] += count;
        total += other.total;
    }
};

struct DistStats {
    double mean = 0.0;
    double median = 0.0;
    double mode = 0.0;
    double std_dev = 0.0;   // population
    double skewness = 0.0;  // population, m3 / m2^(3/2); 0 for degenerate tables
};

/// Visits every permutation of {1..n} in lexicographic order.
template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
    if (n < 1 || n > kMaxEnumN) throw ValidationError("permutation size out of range [1,12]");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        fn(std::span<const int>(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
}

/// Visits the permutations whose leading value is `first`, in lexicographic
/// order — the unit of work for parallel enumeration.
template <typename Fn>
void for_each_permutation_with_first(int n, int first, Fn&& fn) {
    if (n < 1 || n > kMaxEnumN) throw ValidationError("permutation size out of range [1,12]");
    std::vector<int> perm(n);
    perm[0] = first;
    int next = 1;
    for (int v = 1; v <= n; ++v) {
        if (v != first) perm[next++] = v;
    }
    do {
        fn(std::span<const int>(perm));
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
}

/// Distribution of S/K over all non-identity permutations of {1..n} with unit
/// weights. The identity (K = 0) is excluded; every value lies in [1,2].
FrequencyTable ratio_table(int n, int jobs = 1);

enum class NormMeasure { Footrule, Kendall };

/// Distribution of the normalized footrule (or Kendall) over all n!
/// permutations with unit weights; exact rationals over the fixed
/// denominator 2*floor(n^2/4) (or n(n-1)/2).
FrequencyTable normalized_table(int n, NormMeasure measure, int jobs = 1);

/// Moments of a frequency table. Median is the middle of the sorted multiset
/// (average of the two middles for even totals); mode is the most frequent
/// value, smallest on ties.
DistStats compute_stats(const FrequencyTable& table);

/// CSV with header `value,count`, values ascending, 12 significant digits.
void write_csv(const FrequencyTable& table, std::ostream& out);

nlohmann::json table_to_json(const FrequencyTable& table);
nlohmann::json stats_to_json(const DistStats& stats);

}  // namespace ranklists
