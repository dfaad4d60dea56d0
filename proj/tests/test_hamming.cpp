#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "folner/hamming.hpp"

using namespace folner;

TEST_CASE("hamming edge counts") {
    HammingSubset full22{2, 2, {0, 1, 2, 3}};
    CHECK(hamming_edge_count(full22) == 4);
    HammingSubset full32{2, 3, {0, 1, 2, 3, 4, 5, 6, 7, 8}};
    CHECK(hamming_edge_count(full32) == 18);
    CHECK(hamming_edge_count(HammingSubset{3, 2, {5}}) == 0);
}

TEST_CASE("cubal sets: canonical construction and edge counts") {
    CHECK(hamming_edge_count(cubal_set(4, 3)) == 4);
    CHECK(hamming_edge_count(cubal_set(5, 3)) == 5);
    CHECK(hamming_edge_count(cubal_set(8, 3)) == 12);  // whole cube m=3
    CHECK(hamming_edge_count(cubal_set(16, 4)) == 32);
    CHECK(is_cubal(cubal_set(5, 3)));
    CHECK(is_cubal(cubal_set(7, 4)));
    CHECK_FALSE(is_cubal(HammingSubset{3, 2, {0, 7}}));        // two antipodal points
    CHECK_FALSE(is_cubal(HammingSubset{3, 2, {0, 1, 2, 7}}));  // not a 2-subcube
    CHECK_THROWS_AS(cubal_set(9, 3), std::domain_error);
}

TEST_CASE("brute force maxima agree with cubal counts on the 3-cube") {
    for (int k = 1; k <= 8; k++) {
        MaxEdgesResult r = brute_force_max_edges(k, 2, 3);
        CHECK(r.max_edges == hamming_edge_count(cubal_set(k, 3)));
        for (const auto& w : r.witnesses) CHECK(is_cubal(w));
    }
}

TEST_CASE("ternary Hamming square: maxima and the log bound") {
    std::vector<long long> expect{0, 1, 3, 4, 6, 9, 11, 14, 18};
    for (int k = 1; k <= 9; k++) {
        MaxEdgesResult r = brute_force_max_edges(k, 3, 2);
        CHECK(r.max_edges == expect[static_cast<size_t>(k - 1)]);
        CHECK(edge_bound_holds(r.max_edges, k, 3));
        CHECK(edge_bound_tight(r.max_edges, k, 3) == (k == 1 || k == 3 || k == 9));
    }
    CHECK(edge_bound(4, 2) == doctest::Approx(4.0));
    CHECK(edge_bound(9, 3) == doctest::Approx(18.0));
    CHECK(edge_bound(1, 5) == 0.0);
}

TEST_CASE("work budget guards the subset scan") {
    CHECK_THROWS_AS(brute_force_max_edges(8, 2, 4, 100), std::domain_error);
}

TEST_CASE("kkt objective values and invariances") {
    // uniform point sits exactly at zero: -C ln d + (d-1)/2 = 0
    for (int d : {2, 3, 4, 5}) {
        std::vector<double> uni(static_cast<size_t>(d), 1.0 / d);
        CHECK(kkt_objective(uni, d) == doctest::Approx(0.0).epsilon(1e-12));
    }
    CHECK(kkt_objective({1.0, 0.0}, 2) == doctest::Approx(0.0));
    CHECK(kkt_objective({0.5, 0.3, 0.2}, 3) < 0);
    // permutation invariance
    CHECK(kkt_objective({0.2, 0.3, 0.5}, 3) == doctest::Approx(kkt_objective({0.5, 0.3, 0.2}, 3)));
    // zero parts contribute nothing to either term
    double C3 = 2.0 / (2.0 * std::log(3.0));
    double expect = C3 * (0.6 * std::log(0.6) + 0.4 * std::log(0.4)) + 0.4;
    CHECK(kkt_objective({0.6, 0.4, 0.0}, 3) == doctest::Approx(expect).epsilon(1e-12));
    CHECK_THROWS_AS(kkt_objective({0.5, 0.6}, 2), std::domain_error);
    CHECK_THROWS_AS(kkt_objective({-0.1, 1.1}, 2), std::domain_error);
}

TEST_CASE("kkt grid scans peak at the uniform point") {
    KktGridReport r2 = kkt_grid_check(2, 0.01);
    CHECK(r2.max_ok);
    CHECK(r2.argmax == std::vector<double>{0.5, 0.5});
    KktGridReport r3 = kkt_grid_check(3, 0.01);
    CHECK(r3.max_ok);
    for (double x : r3.argmax) CHECK(std::abs(x - 1.0 / 3) <= 0.02 + 1e-12);
    CHECK(r3.near_zero_local);
    CHECK_THROWS_AS(kkt_grid_check(7, 0.01), std::domain_error);
    CHECK_THROWS_AS(kkt_grid_check(3, 1e-4), std::domain_error);
}
