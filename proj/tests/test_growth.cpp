#include "doctest.h"

#include <cmath>
#include <string>
#include <vector>

#include "folner/growth.hpp"
#include "folner/random_sets.hpp"
#include "folner/standard_sets.hpp"

using namespace folner;

namespace {

// brute-force words over {t, delta_1..delta_(d-1)} with no two consecutive
// deltas, counted by exact length
long long count_reduced_words(int d, int n) {
    long long total = 0;
    // state: length, last-was-delta
    std::vector<std::vector<long long>> cnt(static_cast<size_t>(n) + 1, std::vector<long long>(2, 0));
    cnt[0][0] = 1;
    for (int len = 0; len < n; len++)
        for (int last = 0; last < 2; last++) {
            long long c = cnt[static_cast<size_t>(len)][static_cast<size_t>(last)];
            if (!c) continue;
            cnt[static_cast<size_t>(len + 1)][0] += c;                       // append t
            if (!last) cnt[static_cast<size_t>(len + 1)][1] += c * (d - 1);  // append a delta
        }
    total = cnt[static_cast<size_t>(n)][0] + cnt[static_cast<size_t>(n)][1];
    return total;
}

}  // namespace

TEST_CASE("ball volumes at radius 1") {
    CHECK(ball_volume(GroupModel::parse("lamp:2"), 1).volumes == std::vector<mpz_class>{1, 4});
    CHECK(ball_volume(GroupModel::parse("lamp:3"), 1).volumes[1] == 5);
    CHECK(ball_volume(GroupModel::parse("bs:2"), 1).volumes[1] == 5);
    CHECK(ball_volume(GroupModel::parse("lamp-sws"), 1).volumes[1] == 10);
}

TEST_CASE("growth tables are strictly increasing and budget-guarded") {
    GrowthTable t = ball_volume(GroupModel::parse("lamp:2"), 10);
    CHECK(t.complete);
    for (int r = 1; r <= 10; r++) CHECK(t.volumes[static_cast<size_t>(r)] > t.volumes[static_cast<size_t>(r - 1)]);
    GrowthTable partial = ball_volume(GroupModel::parse("lamp:2"), 10, 50);
    CHECK_FALSE(partial.complete);
}

TEST_CASE("reduced word counts: recurrence equals direct enumeration") {
    ReducedWordCounts rc2 = reduced_word_count(2, 8);
    std::vector<long> expect{1, 2, 3, 5, 8, 13, 21, 34, 55};
    for (size_t i = 0; i < expect.size(); i++) CHECK(rc2.exact[i] == expect[i]);
    for (int d : {2, 3, 4}) {
        ReducedWordCounts rc = reduced_word_count(d, 8);
        for (int n = 0; n <= 8; n++) CHECK(rc.exact[static_cast<size_t>(n)] == count_reduced_words(d, n));
    }
    // d=3: W(2) = W(1) + 2 W(0) = 5
    CHECK(reduced_word_count(3, 2).exact[2] == 5);
    // the cumulative counts do NOT satisfy the same recurrence (boundary terms)
    ReducedWordCounts rc3 = reduced_word_count(3, 4);
    CHECK(rc3.cumulative[2] != rc3.cumulative[1] + 2 * rc3.cumulative[0]);
}

TEST_CASE("volume sandwich against cumulative reduced words") {
    GrowthTable t = ball_volume(GroupModel::parse("lamp:2"), 12);
    ReducedWordCounts rc = reduced_word_count(2, 12);
    for (int r = 1; r <= 12; r++) {
        const mpz_class& V = t.volumes[static_cast<size_t>(r)];
        CHECK(rc.cumulative[static_cast<size_t>(r)] <= V);
        CHECK(V <= 8 * mpz_class(r) * r * r * rc.cumulative[static_cast<size_t>(r)]);
    }
}

TEST_CASE("exact growth rates") {
    ExactGrowthRate r2 = growth_rate_exact(2);
    CHECK(r2.radicand == 5);
    CHECK(r2.value == doctest::Approx(1.6180339887));
    CHECK_FALSE(r2.is_integer);
    ExactGrowthRate r3 = growth_rate_exact(3);
    CHECK(r3.is_integer);
    CHECK(r3.integer_value == 2);
    CHECK(growth_rate_exact(5).value == doctest::Approx(2.5615528128));
    // W(n)^(1/n) converges to the rate
    ReducedWordCounts rc = reduced_word_count(2, 60);
    double w60 = std::exp(ln_mpz(rc.exact[60]) / 60.0);
    CHECK(std::abs(w60 - r2.value) / r2.value < 0.01);
}

TEST_CASE("csc constants") {
    CscReport c2 = csc_constant(2);
    CHECK(c2.constant == doctest::Approx(2.88084).epsilon(1e-4));
    CHECK(c2.constant >= 2.88);
    CHECK(c2.exponent_converges);
    CscReport c3 = csc_constant(3);
    CHECK(c3.constant == doctest::Approx(2 * std::log(3.0) / std::log(2.0)));
    // the constant grows with d, and d=2 is the minimum
    double prev = 0;
    for (int d = 2; d <= 100; d++) {
        double c = csc_constant(d).constant;
        CHECK(c > prev);
        CHECK(c >= c2.constant - 1e-12);
        prev = c;
    }
}

TEST_CASE("phi brackets the volume") {
    GrowthTable t = ball_volume(GroupModel::parse("lamp:2"), 8);
    CHECK(phi(t, 1) == 1);   // V(1) = 4 > 1
    CHECK(phi(t, 0) == 0);   // V(0) = 1 > 0
    CHECK(phi(t, 4) == 2);
    for (int r = 0; r <= 7; r++) CHECK(phi(t, t.volumes[static_cast<size_t>(r)]) <= r + 1);
    int prev_phi = 0;
    for (long l = 0; l <= 150; l += 10) {
        int p = phi(t, l);
        CHECK(p >= prev_phi);
        prev_phi = p;
    }
    CHECK_THROWS_AS(phi(t, mpz_class(1000000)), std::runtime_error);
}

TEST_CASE("csc instance bounds hold on explicit and random sets") {
    GroupModel m = GroupModel::parse("lamp:2");
    GrowthTable t = ball_volume(m, 11);
    CscInstanceReport r = csc_instance_check(standard_closure_lamp(2, 2), t);
    CHECK(r.inner_ratio == make_ratio(1, 2));
    CHECK(r.all_hold());
    FiniteSubset single = make_subset(m, {GroupElement(LampElement{})});
    CscInstanceReport r1 = csc_instance_check(single, t);
    CHECK(r1.inner_ratio == 1);
    CHECK(r1.all_hold());
    Rng rng(2718);
    for (int i = 0; i < 100; i++) {
        FiniteSubset F = random_lamp_set(2, 50, 6, rng);
        CHECK(csc_instance_check(F, t).all_hold());
    }
}

TEST_CASE("sws checks: adapted standard set ratio and volume sandwich") {
    SwsReport r4 = sws_checks(4);
    CHECK(r4.outer_ratio == make_ratio(1, 2));
    CHECK(r4.ratio_ok);
    CHECK(r4.sandwich_ok);
    SwsReport r1 = sws_checks(1);
    CHECK(r1.outer_ratio == 2);
    CHECK(r1.ratio_ok);
    // the unwidened standard set has sws outer ratio 4/n, not 2/n: the
    // switch-then-walk moves escape with a lamp lit just outside the window
    FiniteSubset latticeF2 = standard_set_lamp(2, 2);
    latticeF2.model = GroupModel::parse("lamp-sws");
    CHECK(boundaries(latticeF2).outer_ratio == 2);  // 4/n at n=2
}
