#include "ranklists/experiments.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <thread>

#include "ranklists/measures.hpp"

namespace ranklists {

Fraction Fraction::reduced(long long num, long long den) {
    if (den == 0) throw ValidationError("fraction with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Fraction{num, den == 0 ? 1 : den};
}

namespace {

// Runs fn(first_value, local_table&) over leading values 1..n on `jobs`
// threads and merges the per-prefix tables in ascending prefix order.
template <typename Fn>
FrequencyTable enumerate_partitioned(int n, int jobs, Fn fn) {
    if (n < 2 || n > kMaxEnumN) throw ValidationError("enumeration size out of range [2,12]");
    if (jobs < 1) throw ValidationError("jobs must be >= 1");
    jobs = std::min(jobs, n);

    std::vector<FrequencyTable> partials(n);
    if (jobs == 1) {
        for (int first = 1; first <= n; ++first) fn(first, partials[first - 1]);
    } else {
        std::atomic<int> next_first{1};
        std::vector<std::thread> workers;
        workers.reserve(jobs);
        for (int t = 0; t < jobs; ++t) {
            workers.emplace_back([&] {
                for (int first = next_first.fetch_add(1); first <= n;
                     first = next_first.fetch_add(1)) {
                    fn(first, partials[first - 1]);
                }
            });
        }
        for (auto& worker : workers) worker.join();
    }

    FrequencyTable table;
    for (const FrequencyTable& partial : partials) table.merge(partial);
    return table;
}

}  // namespace

FrequencyTable ratio_table(int n, int jobs) {
    return enumerate_partitioned(n, jobs, [n](int first, FrequencyTable& local) {
        for_each_permutation_with_first(n, first, [&](std::span<const int> perm) {
            long long footrule = 0;
            long long inversions = 0;
            footrule_and_inversions(perm, footrule, inversions);
            if (inversions == 0) return;  // identity: ratio is 0/0
            local.add(Fraction::reduced(footrule, inversions));
        });
    });
}

FrequencyTable normalized_table(int n, NormMeasure measure, int jobs) {
    const long long footrule_denom = 2LL * ((static_cast<long long>(n) * n) / 4);
    const long long kendall_denom = static_cast<long long>(n) * (n - 1) / 2;
    return enumerate_partitioned(n, jobs, [=](int first, FrequencyTable& local) {
        for_each_permutation_with_first(n, first, [&](std::span<const int> perm) {
            if (measure == NormMeasure::Footrule) {
                local.add(Fraction::reduced(footrule_unweighted(perm), footrule_denom));
            } else {
                local.add(Fraction::reduced(inversion_count(perm), kendall_denom));
            }
        });
    });
}

DistStats compute_stats(const FrequencyTable& table) {
    if (table.total == 0) throw ValidationError("stats over an empty frequency table");
    const double n = static_cast<double>(table.total);

    DistStats stats;
    double mean = 0.0;
    for (const auto& [value, count] : table.entries) {
        mean += value.value() * static_cast<double>(count);
    }
    mean /= n;
    stats.mean = mean;

    double m2 = 0.0;
    double m3 = 0.0;
    for (const auto& [value, count] : table.entries) {
        const double d = value.value() - mean;
        m2 += d * d * static_cast<double>(count);
        m3 += d * d * d * static_cast<double>(count);
    }
    m2 /= n;
    m3 /= n;
    stats.std_dev = std::sqrt(m2);
    stats.skewness = m2 > 0.0 ? m3 / std::pow(m2, 1.5) : 0.0;

    // Median: middle of the sorted multiset, averaging the two middles when
    // the total is even.
    const std::uint64_t lo_target = (table.total - 1) / 2;  // 0-based
    const std::uint64_t hi_target = table.total / 2;
    std::uint64_t seen = 0;
    double lo_value = 0.0, hi_value = 0.0;
    bool lo_found = false, hi_found = false;
    for (const auto& [value, count] : table.entries) {
        const std::uint64_t end = seen + count;
        if (!lo_found && lo_target < end) {
            lo_value = value.value();
            lo_found = true;
        }
        if (!hi_found && hi_target < end) {
            hi_value = value.value();
            hi_found = true;
            break;
        }
        seen = end;
    }
    stats.median = (lo_value + hi_value) / 2.0;

    std::uint64_t best_count = 0;
    for (const auto& [value, count] : table.entries) {
        if (count > best_count) {  // ascending iteration keeps the smallest on ties
            best_count = count;
            stats.mode = value.value();
        }
    }
    return stats;
}

void write_csv(const FrequencyTable& table, std::ostream& out) {
    out << "value,count\n";
    char buf[64];
    for (const auto& [value, count] : table.entries) {
        std::snprintf(buf, sizeof(buf), "%.12g", value.value());
        out << buf << ',' << count << '\n';
    }
}

nlohmann::json table_to_json(const FrequencyTable& table) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [value, count] : table.entries) {
        entries.push_back({{"num", value.num}, {"den", value.den}, {"count", count}});
    }
    return {{"total", table.total}, {"entries", std::move(entries)}};
}

nlohmann::json stats_to_json(const DistStats& stats) {
    return {{"mean", stats.mean},
            {"median", stats.median},
            {"mode", stats.mode},
            {"std_dev", stats.std_dev},
            {"skewness", stats.skewness}};
}

}  // namespace ranklists
