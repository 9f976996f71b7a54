#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ranklists/experiments.hpp"
#include "ranklists/measures.hpp"
#include "test_util.hpp"

using namespace ranklists;
using testutil::pair_from_ranks;
using testutil::weights_for;

TEST_CASE("worked examples, unit weights") {
    WeightTable unit;

    // identical five-element lists
    MeasureReport same = compare(RankedList({"a", "b", "c", "d", "e"}),
                                 RankedList({"a", "b", "c", "d", "e"}), unit);
    CHECK(same.footrule_raw == 0.0);
    CHECK(same.kendall_raw == 0.0);
    CHECK(*same.footrule_norm == 0.0);
    CHECK(*same.kendall_norm == 0.0);
    CHECK(!same.ratio.has_value());
    CHECK(same.dg_holds);

    // full reversal
    MeasureReport rev = compare(RankedList({"a", "b", "c", "d", "e"}),
                                RankedList({"e", "d", "c", "b", "a"}), unit);
    CHECK(rev.footrule_raw == 12.0);
    CHECK(rev.kendall_raw == 10.0);
    CHECK(*rev.footrule_norm == 1.0);
    CHECK(*rev.kendall_norm == 1.0);
    CHECK(*rev.ratio == doctest::Approx(1.2));
    CHECK(rev.dg_holds);

    // partial lists (a,b,c) vs (b,d,c,e)
    MeasureReport part = compare(RankedList({"a", "b", "c"}), RankedList({"b", "d", "c", "e"}), unit);
    CHECK(part.n == 5);
    CHECK(part.footrule_raw == 8.0);
    CHECK(part.kendall_raw == 5.0);
    CHECK(*part.footrule_norm == 2.0 / 3.0);
    CHECK(*part.kendall_norm == 0.5);
    CHECK(part.dg_holds);
}

TEST_CASE("footrule values") {
    WeightTable unit;
    CHECK(footrule_weighted(pair_from_ranks({5, 4, 3, 2, 1}), unit) == 12.0);
    CHECK(footrule_weighted(pair_from_ranks({1, 2, 3, 4}), unit) == 0.0);

    auto pair = pair_from_ranks({2, 3, 1});
    WeightTable spiky = weights_for(pair.universe, {1, 100, 1});
    CHECK(footrule_weighted(pair, spiky) == 103.0);  // 1*1 + 100*1 + 1*2
}

TEST_CASE("footrule denominator") {
    WeightTable unit;
    CHECK(footrule_denominator(testutil::tokens(5), unit) == 12.0);
    CHECK(footrule_denominator(testutil::tokens(1), unit) == 0.0);
    CHECK(footrule_denominator(testutil::tokens(3),
                               weights_for(testutil::tokens(3), {1, 100, 1})) == 4.0);
    CHECK_THROWS_AS(footrule_denominator(std::vector<std::string>{}, unit), ValidationError);
}

TEST_CASE("kendall values") {
    WeightTable unit;
    for (auto algo : {KendallAlgo::Naive, KendallAlgo::Fast}) {
        CHECK(kendall_weighted(pair_from_ranks({5, 4, 3, 2, 1}), unit, algo) == 10.0);
        CHECK(kendall_weighted(pair_from_ranks({1, 2, 3}), unit, algo) == 0.0);
        auto pair = pair_from_ranks({2, 3, 1});
        WeightTable w = weights_for(pair.universe, {3, 1, 2});
        // inverted pairs (1,3) and (2,3): (3+2)/2 + (1+2)/2
        CHECK(kendall_weighted(pair, w, algo) == 4.0);
    }
}

TEST_CASE("kendall denominator matches the explicit pair sum") {
    WeightTable unit;
    CHECK(kendall_denominator(testutil::tokens(5), unit) == 10.0);
    CHECK(kendall_denominator(testutil::tokens(1), unit) == 0.0);
    CHECK(kendall_denominator(testutil::tokens(3),
                              weights_for(testutil::tokens(3), {3, 1, 2})) == 6.0);

    std::mt19937 rng(7);
    for (int iter = 0; iter < 100; ++iter) {
        const int n = 1 + static_cast<int>(rng() % 20);
        std::vector<std::string> universe = testutil::tokens(n);
        std::vector<double> w(n);
        for (auto& x : w) x = std::uniform_real_distribution<>(0.01, 50.0)(rng);
        WeightTable table = weights_for(universe, w);
        double explicit_sum = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) explicit_sum += (w[i] + w[j]) / 2.0;
        CHECK(kendall_denominator(universe, table) ==
              doctest::Approx(explicit_sum).epsilon(1e-12));
    }
}

TEST_CASE("signed scale") {
    CHECK(signed_scale(0.0) == 1.0);
    CHECK(signed_scale(1.0) == -1.0);
    CHECK(signed_scale(0.5) == 0.0);
    CHECK_THROWS_AS(signed_scale(1.0001), ValidationError);
    CHECK_THROWS_AS(signed_scale(-0.1), ValidationError);
}

TEST_CASE("fast and naive kendall agree") {
    std::mt19937 rng(42);
    // integer weights: exact equality
    for (int iter = 0; iter < 500; ++iter) {
        const int n = 2 + static_cast<int>(rng() % 64);
        auto pair = pair_from_ranks(testutil::random_permutation(n, rng));
        std::vector<double> w(n);
        for (auto& x : w) x = static_cast<double>(1 + rng() % 1000);
        WeightTable table = weights_for(pair.universe, w);
        CHECK(kendall_weighted(pair, table, KendallAlgo::Fast) ==
              kendall_weighted(pair, table, KendallAlgo::Naive));
    }
    // real weights: relative tolerance
    for (int iter = 0; iter < 500; ++iter) {
        const int n = 2 + static_cast<int>(rng() % 128);
        auto pair = pair_from_ranks(testutil::random_permutation(n, rng));
        std::vector<double> w(n);
        for (auto& x : w) x = std::uniform_real_distribution<>(1e-3, 1000.0)(rng);
        WeightTable table = weights_for(pair.universe, w);
        const double fast = kendall_weighted(pair, table, KendallAlgo::Fast);
        const double naive = kendall_weighted(pair, table, KendallAlgo::Naive);
        CHECK(std::abs(fast - naive) <= measure_tolerance(naive));
    }
}

TEST_CASE("footrule is bounded by twice the weighted Kendall tau, randomized") {
    // Only the upper half of the Diaconis-Graham inequality survives arbitrary
    // element weights; see the counterexample test below for the lower half.
    std::mt19937 rng(99);
    for (int iter = 0; iter < 2000; ++iter) {
        const int n = 2 + static_cast<int>(rng() % 64);
        auto pair = pair_from_ranks(testutil::random_permutation(n, rng));
        std::vector<double> w(n);
        for (auto& x : w) x = std::uniform_real_distribution<>(1e-3, 1000.0)(rng);
        MeasureReport report = measure(pair, weights_for(pair.universe, w));
        CHECK(report.footrule_raw <=
              2.0 * report.kendall_raw + measure_tolerance(report.footrule_raw));
        CHECK(*report.kendall_norm <= 1.0 + 1e-12);
    }
}

TEST_CASE("full Diaconis-Graham inequality for unit weights") {
    WeightTable unit;
    std::mt19937 rng(100);
    for (int iter = 0; iter < 2000; ++iter) {
        const int n = 2 + static_cast<int>(rng() % 64);
        MeasureReport report = measure(pair_from_ranks(testutil::random_permutation(n, rng)), unit);
        CHECK(report.dg_holds);
    }
    // and for partial lists after completion
    for (int iter = 0; iter < 500; ++iter) {
        const int pool_size = 2 + static_cast<int>(rng() % 30);
        std::vector<std::string> pool = testutil::tokens(pool_size);
        auto pick = [&] {
            std::vector<std::string> out;
            for (const auto& tok : pool) {
                if (rng() % 4 != 0) out.push_back(tok);
            }
            std::shuffle(out.begin(), out.end(), rng);
            return RankedList(out);
        };
        RankedList a = pick(), b = pick();
        if (a.empty() && b.empty()) continue;
        CHECK(compare(a, b, unit).dg_holds);
    }
}

TEST_CASE("the lower Diaconis-Graham bound fails for skewed weights") {
    // A heavy element with zero displacement still sits in inversions: for the
    // n = 3 reversal with weights (1,100,1), K_w = 102 but S_w = 4.
    auto pair = pair_from_ranks({3, 2, 1});
    WeightTable w = weights_for(pair.universe, {1, 100, 1});
    MeasureReport report = measure(pair, w);
    CHECK(report.footrule_raw == 4.0);
    CHECK(report.kendall_raw == 102.0);
    CHECK(!report.dg_holds);
}

TEST_CASE("raw measures are symmetric in their arguments") {
    std::mt19937 rng(5);
    for (int iter = 0; iter < 100; ++iter) {
        const int n = 2 + static_cast<int>(rng() % 10);
        std::vector<std::string> toks = testutil::tokens(n);
        std::vector<std::string> shuffled = toks;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        std::vector<double> w(n);
        for (auto& x : w) x = std::uniform_real_distribution<>(0.1, 10.0)(rng);
        WeightTable table = weights_for(toks, w);

        RankedList a(toks), b(shuffled);
        MeasureReport ab = compare(a, b, table);
        MeasureReport ba = compare(b, a, table);
        CHECK(ab.footrule_raw == doctest::Approx(ba.footrule_raw).epsilon(1e-12));
        CHECK(ab.kendall_raw == doctest::Approx(ba.kendall_raw).epsilon(1e-12));
    }
}

TEST_CASE("metric axioms for unit weights, exhaustive n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        std::vector<std::vector<int>> perms;
        for_each_permutation(n, [&](std::span<const int> p) {
            perms.emplace_back(p.begin(), p.end());
        });
        const int m = static_cast<int>(perms.size());
        std::vector<std::vector<long long>> ds(m, std::vector<long long>(m));
        std::vector<std::vector<long long>> dk(m, std::vector<long long>(m));
        for (int x = 0; x < m; ++x) {
            for (int y = 0; y < m; ++y) {
                ds[x][y] = testutil::footrule_pairwise(perms[x], perms[y]);
                dk[x][y] = testutil::kendall_pairwise(perms[x], perms[y]);
            }
        }
        for (int x = 0; x < m; ++x) {
            for (int y = 0; y < m; ++y) {
                CHECK(ds[x][y] == ds[y][x]);
                CHECK(dk[x][y] == dk[y][x]);
                CHECK((ds[x][y] == 0) == (x == y));
                CHECK((dk[x][y] == 0) == (x == y));
                for (int z = 0; z < m; ++z) {
                    CHECK(ds[x][z] <= ds[x][y] + ds[y][z]);
                    CHECK(dk[x][z] <= dk[x][y] + dk[y][z]);
                }
            }
        }
    }
}

TEST_CASE("triangle inequality on random weighted triples") {
    std::mt19937 rng(31337);
    for (int iter = 0; iter < 300; ++iter) {
        const int n = 2 + static_cast<int>(rng() % 10);
        auto x = testutil::random_permutation(n, rng);
        auto y = testutil::random_permutation(n, rng);
        auto z = testutil::random_permutation(n, rng);
        std::vector<double> w(n);
        for (auto& v : w) v = std::uniform_real_distribution<>(0.01, 100.0)(rng);
        const double tol = 1e-9;
        CHECK(testutil::footrule_pairwise_w(x, z, w) <=
              testutil::footrule_pairwise_w(x, y, w) + testutil::footrule_pairwise_w(y, z, w) + tol);
        CHECK(testutil::kendall_pairwise_w(x, z, w) <=
              testutil::kendall_pairwise_w(x, y, w) + testutil::kendall_pairwise_w(y, z, w) + tol);
    }
}

TEST_CASE("right invariance for unit weights, n <= 8") {
    std::mt19937 rng(2718);
    for (int iter = 0; iter < 200; ++iter) {
        const int n = 2 + static_cast<int>(rng() % 7);
        auto sigma = testutil::random_permutation(n, rng);
        auto pi = testutil::random_permutation(n, rng);
        auto eta = testutil::random_permutation(n, rng);
        // compose: (p . eta)[i] = p[eta[i] - 1]
        std::vector<int> sigma_eta(n), pi_eta(n);
        for (int i = 0; i < n; ++i) {
            sigma_eta[i] = sigma[eta[i] - 1];
            pi_eta[i] = pi[eta[i] - 1];
        }
        CHECK(testutil::footrule_pairwise(sigma, pi) ==
              testutil::footrule_pairwise(sigma_eta, pi_eta));
        CHECK(testutil::kendall_pairwise(sigma, pi) ==
              testutil::kendall_pairwise(sigma_eta, pi_eta));

        // d(identity, sigma) == d(identity, sigma^-1)
        std::vector<int> identity(n), inverse(n);
        std::iota(identity.begin(), identity.end(), 1);
        for (int i = 0; i < n; ++i) inverse[sigma[i] - 1] = i + 1;
        CHECK(testutil::footrule_pairwise(identity, sigma) ==
              testutil::footrule_pairwise(identity, inverse));
        CHECK(testutil::kendall_pairwise(identity, sigma) ==
              testutil::kendall_pairwise(identity, inverse));
    }
}

TEST_CASE("unit-weight normalized footrule never exceeds 1, exhaustive n <= 6") {
    WeightTable unit;
    for (int n = 2; n <= 6; ++n) {
        for_each_permutation(n, [&](std::span<const int> p) {
            auto pair = pair_from_ranks(std::vector<int>(p.begin(), p.end()));
            MeasureReport report = measure(pair, unit);
            CHECK(*report.footrule_norm <= 1.0 + 1e-12);
            CHECK(!report.footrule_norm_overflow);
        });
    }
}

TEST_CASE("weighted normalization can overflow and is flagged") {
    auto pair = pair_from_ranks({2, 3, 1});
    WeightTable spiky = weights_for(pair.universe, {1, 100, 1});
    MeasureReport report = measure(pair, spiky);
    CHECK(*report.footrule_norm == 25.75);  // 103 / 4
    CHECK(report.footrule_norm_overflow);
    CHECK(*report.kendall_norm <= 1.0);
}

TEST_CASE("n = 1 normalizations are undefined") {
    WeightTable unit;
    MeasureReport report = compare(RankedList({"only"}), RankedList({"only"}), unit);
    CHECK(report.n == 1);
    CHECK(!report.footrule_norm.has_value());
    CHECK(!report.kendall_norm.has_value());
    CHECK(!report.ratio.has_value());
    CHECK(report.dg_holds);
}
