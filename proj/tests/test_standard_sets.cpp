#include "doctest.h"

#include "folner/boundary.hpp"
#include "folner/standard_sets.hpp"

using namespace folner;

TEST_CASE("standard lamp set sizes and boundary ratios") {
    CHECK(standard_set_lamp(2, 1).size() == 2);
    CHECK(standard_set_lamp(2, 3).size() == 24);
    FiniteSubset F32 = standard_set_lamp(3, 2);
    CHECK(F32.size() == 18);
    BoundaryReport r32 = boundaries(F32);
    CHECK(r32.outer_size == 18);
    CHECK(r32.outer_ratio == 1);
    // outer ratio 2/n with edge = outer, for both alphabets
    for (int d : {2, 3}) {
        for (int n = 1; n <= (d == 2 ? 8 : 5); n++) {
            BoundaryReport r = boundaries(standard_set_lamp(d, n));
            CHECK(r.outer_ratio == make_ratio(2, n));
            CHECK(r.edge_size == r.outer_size);
        }
    }
}

TEST_CASE("standard closures: size (n+2) d^n, inner ratio 2/(n+2)") {
    FiniteSubset C = standard_closure_lamp(2, 2);
    CHECK(C.size() == 16);
    BoundaryReport r = boundaries(C);
    CHECK(r.inner_ratio == make_ratio(1, 2));
    CHECK(mpz_class(static_cast<long>(standard_closure_lamp(3, 4).size())) == 486);
    for (int d : {2, 3}) {
        for (int n = 1; n <= (d == 2 ? 8 : 4); n++) {
            FiniteSubset W = standard_closure_lamp(d, n);
            CHECK(boundaries(W).inner_ratio == make_ratio(2, n + 2));
        }
    }
}

TEST_CASE("fol_value matches its closure witness") {
    CHECK(fol_value(2, 2) == 16);
    CHECK(fol_value(2, 3) == 96);
    CHECK(fol_value(3, 3) == 486);
    CHECK_THROWS_AS(fol_value(3, 2), std::domain_error);  // below the formula's range
    for (int d : {2, 3}) {
        for (int n = d; n <= (d == 2 ? 5 : 4); n++) {
            FiniteSubset W = standard_closure_lamp(d, 2 * n - 2);
            CHECK(mpz_class(static_cast<long>(W.size())) == fol_value(d, n));
            CHECK(folner_test(W, n));
            CHECK(boundaries(W).inner_ratio == make_ratio(1, n));  // exactly 1/n
        }
    }
}

TEST_CASE("element budget guards explicit constructions") {
    CHECK_THROWS_AS(standard_set_lamp(2, 3, 10), BudgetExceeded);
    CHECK_NOTHROW(fol_value(2, 60));  // formula path has no budget
}

TEST_CASE("series expansion: d=2 coefficients and empty residual") {
    auto co = fol_series_coefficients(2, 6);
    std::vector<long> expect{1, 16, 96, 512, 2560, 12288};
    REQUIRE(co.size() == 6);
    for (size_t i = 0; i < 6; i++) CHECK(co[i] == expect[i]);
    SeriesResidual r = fol_series_check(2, 6, {mpz_class(1)});
    CHECK(r.degree() == -1);
    CHECK(r.pd_coeffs.empty());
}

TEST_CASE("series residual for d=3 has degree <= 0") {
    // Fol_3(2) is not covered by the closed form; the closure of the standard
    // set at n=2 gives the upper-bound witness 36 with inner ratio exactly 1/2
    FiniteSubset W = lamp_box_set(3, 0, 3, 1, 2);
    CHECK(W.size() == 36);
    CHECK(boundaries(W).inner_ratio == make_ratio(1, 2));
    SeriesResidual r = fol_series_check(3, 6, {mpz_class(1), mpz_class(36)});
    CHECK(r.degree() <= 0);
    CHECK(r.pd_coeffs.size() == 1);
    CHECK_THROWS_AS(fol_series_check(3, 6, {mpz_class(2), mpz_class(36)}), std::runtime_error);
}

TEST_CASE("standard BS sets: sizes and split edge counts") {
    CHECK(standard_set_bs(2, 2).size() == 8);
    FiniteSubset F23 = standard_set_bs(2, 3);
    CHECK(F23.size() == 24);
    BsEdgeSplit s = bs_edge_split(F23);
    CHECK(s.a_edges == 2 * 8);
    CHECK(s.b_edges == 2 * 7);
    CHECK(boundaries(F23).edge_size == 30);
    FiniteSubset F32 = standard_set_bs(3, 2);
    CHECK(F32.size() == 18);
    CHECK(boundaries(F32).edge_size == 26);
    // edge ratio (2/n)(p - p^-n)/(p-1) exactly, for n <= 5, p in {2,3}
    for (int p : {2, 3}) {
        for (int n = 1; n <= 5; n++) {
            FiniteSubset F = standard_set_bs(p, n);
            mpz_class pn;
            mpz_ui_pow_ui(pn.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(n));
            mpq_class expect(2 * (pn * pn - 1), n * pn * (p - 1));
            expect.canonicalize();
            CHECK(boundaries(F).edge_ratio == expect);
        }
    }
}

TEST_CASE("counterexample family to BS(1,p) standard-set optimality") {
    BsCounterexampleReport r36 = bs_counterexample(36);
    CHECK(r36.F_size == 82944);
    CHECK(r36.F3_size == 139968);
    CHECK(r36.ratio_F == make_ratio(2, 3));
    CHECK(r36.size_ok);
    CHECK(r36.strict);
    CHECK(r36.enumeration_ok);
    BsCounterexampleReport r60 = bs_counterexample(60);
    CHECK(r60.F_size == 640000);
    CHECK(r60.F3_size == 648000);
    CHECK(r60.ratio_F == make_ratio(3, 5));  // 1/2 + 1/10
    CHECK(r60.strict);
    CHECK_THROWS_AS(bs_counterexample(33), std::domain_error);  // below the verified range
    CHECK_THROWS_AS(bs_counterexample(40), std::domain_error);  // not divisible by 3
}
