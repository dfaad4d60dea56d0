#include "doctest.h"

#include <sstream>

#include "folner/assoc_graph.hpp"
#include "folner/boundary.hpp"
#include "folner/random_sets.hpp"
#include "folner/standard_sets.hpp"

using namespace folner;

namespace {

FiniteSubset singleton_lamp(int d) {
    GroupModel m;
    m.kind = GroupModel::Kind::Lamplighter;
    m.param = d;
    return make_subset(m, {GroupElement(LampElement{})});
}

FiniteSubset bs_set(int p, std::initializer_list<const char*> elems) {
    GroupModel m;
    m.kind = GroupModel::Kind::BaumslagSolitar;
    m.param = p;
    std::vector<GroupElement> v;
    for (const char* s : elems) v.emplace_back(bs_from_string(s, p));
    return make_subset(m, std::move(v));
}

}  // namespace

TEST_CASE("lamp associated subgraph of a singleton") {
    LampAssocGraph g2 = assoc_subgraph_lamp(singleton_lamp(2));
    CHECK(g2.vertices.size() == 2);
    CHECK(g2.edges.size() == 1);
    CHECK(leaves(g2).size() == 1);
    // the leaf is the lit configuration, the edge's head
    CHECK(lamp_config_to_string(g2.vertices[static_cast<size_t>(g2.edges[0].second)]) == "0:1");

    LampAssocGraph g4 = assoc_subgraph_lamp(singleton_lamp(4));
    CHECK(g4.vertices.size() == 4);
    CHECK(g4.edges.size() == 3);
    CHECK(leaves(g4).size() == 3);
    LampInequalityReport r4 = check_lamp_inequality(singleton_lamp(4));
    CHECK(r4.outer == 5);
    CHECK(2 * r4.vertex_count - r4.leaf_count == 5);  // equality case
    CHECK(r4.holds);
}

TEST_CASE("lamp associated subgraph of standard sets: d^n vertices, n(d-1)d^n edges, no leaves") {
    for (int d : {2, 3}) {
        for (int n = 1; n <= 3; n++) {
            LampAssocGraph g = assoc_subgraph_lamp(standard_set_lamp(d, n));
            long long dn = 1;
            for (int i = 0; i < n; i++) dn *= d;
            CHECK(static_cast<long long>(g.vertices.size()) == dn);
            CHECK(static_cast<long long>(g.edges.size()) == static_cast<long long>(n) * (d - 1) * dn);
            CHECK(leaves(g).empty());
        }
    }
}

TEST_CASE("edge count of the lamp associated subgraph is (d-1)|F|") {
    Rng rng(1234);
    for (int d : {2, 3}) {
        for (int i = 0; i < 300; i++) {
            FiniteSubset F = random_lamp_set(d, 20, 5, rng);
            LampAssocGraph g = assoc_subgraph_lamp(F);
            CHECK(g.edges.size() == static_cast<size_t>(d - 1) * F.size());
        }
    }
}

TEST_CASE("outer bound via the associated subgraph holds on random sets") {
    Rng rng(56789);
    for (int d : {2, 3}) {
        for (int i = 0; i < 1000; i++) {
            FiniteSubset F = random_lamp_set(d, 30, 8, rng);
            CHECK(check_lamp_inequality(F).holds);
        }
    }
    // explicit equality instance: F_2 has outer 8 = 2*4 - 0
    LampInequalityReport r = check_lamp_inequality(standard_set_lamp(2, 2));
    CHECK(r.outer == 8);
    CHECK(r.vertex_count == 4);
    CHECK(r.leaf_count == 0);
}

TEST_CASE("bs associated subgraph: one-way edges and the undirected reduction") {
    BsAssocGraph g1 = assoc_subgraph_bs(bs_set(2, {"0|0"}));
    CHECK(g1.directed_edges.size() == 2);
    CHECK(g1.oneway.size() == 2);
    CHECK(g1.undirected.empty());
    CHECK(g1.reduction_vertices.empty());

    BsAssocGraph g2 = assoc_subgraph_bs(bs_set(2, {"0|0", "0|1"}));
    CHECK(g2.directed_edges.size() == 4);
    CHECK(g2.undirected.size() == 1);
    CHECK(g2.oneway.size() == 2);

    // standard F_2: reduction = {0,1,2,3} with 5 edges (diffs 1 and 2) = e(4)
    BsAssocGraph gF2 = assoc_subgraph_bs(standard_set_bs(2, 2));
    CHECK(gF2.reduction_vertices.size() == 4);
    CHECK(gF2.undirected.size() == 5);
    CHECK(static_cast<long long>(gF2.undirected.size()) == e_formula(4));
}

TEST_CASE("directed edge count is 2|F| and splits as |L| + 2|reduction|") {
    Rng rng(999);
    for (int i = 0; i < 300; i++) {
        FiniteSubset F = random_bs_set(2, 25, 3, 12, rng);
        BsAssocGraph g = assoc_subgraph_bs(F);
        CHECK(g.directed_edges.size() == 2 * F.size());
        CHECK(g.directed_edges.size() == g.oneway.size() + 2 * g.undirected.size());
    }
}

TEST_CASE("orbit counting") {
    CHECK(orbit_count({1, 2, 3, 4}).total == 3);
    CHECK(orbit_count({1, 3, 9}).total == 2);
    CHECK(orbit_count({5}).total == 0);
    for (long long n : {1LL, 2LL, 7LL, 64LL, 100LL, 1024LL}) CHECK(o_interval(n) == n - 1);
    // normalization: scaling by powers of two and translating changes nothing
    std::vector<PadicRational> vs;
    for (long v : {2L, 4L, 6L}) {
        PadicRational q;
        q.p = 2;
        q.m = v;
        vs.push_back(padic_normalize(q));
    }
    auto ints = dyadic_to_integer_vertices(vs);
    CHECK(ints == std::vector<long long>{0, 1, 2});
    CHECK(orbit_count(ints).total == 2);
}

TEST_CASE("interval edge formula against brute force") {
    CHECK(e_formula(1) == 0);
    CHECK(e_formula(4) == 5);
    CHECK(e_formula(8) == 17);
    for (long long n = 1; n <= 1024; n++) CHECK(e_formula(n) == e_interval_brute(n));
}

TEST_CASE("corollary quotient values") {
    CHECK(corollary_quotient(4).value == make_ratio(7, 8));
    CHECK(corollary_quotient(8).value == make_ratio(5, 8));
    CorollaryQuotient q1 = corollary_quotient(1);
    CHECK(q1.degenerate);
    CHECK(q1.value == 1);
    CHECK_FALSE(corollary_quotient(2).degenerate);
}

TEST_CASE("bs bounds: standard sets and random instances") {
    BsBoundsReport r4 = check_bs_bounds(standard_set_bs(2, 4));
    CHECK(r4.hypothesis_met);
    CHECK(r4.edge_ratio == make_ratio(62, 64));
    CHECK(r4.all_hold());
    // equality throughout on the standard set
    CHECK(r4.F_size == r4.reduction_edges + r4.orbits);
    CHECK(r4.a_edges == 2 * r4.reduction_vertices);

    BsBoundsReport r3 = check_bs_bounds(standard_set_bs(2, 3));
    CHECK_FALSE(r3.hypothesis_met);  // ratio 5/4 > 1
    CHECK(r3.identities);

    Rng rng(31415);
    for (int i = 0; i < 300; i++) {
        FiniteSubset F = random_bs_set_ratio_le1(rng);
        BsBoundsReport r = check_bs_bounds(F);
        CHECK(r.hypothesis_met);
        CHECK(r.all_hold());
    }
}

TEST_CASE("bounded-vertex-set subgraph edge maximum (exhaustive spot check)") {
    // every vertex set within [1,12] of size <= 6: V + o pins n, then E <= e(n)
    for (unsigned mask = 1; mask < (1u << 12); mask++) {
        if (__builtin_popcount(mask) > 6) continue;
        std::vector<long long> verts;
        for (int b = 0; b < 12; b++)
            if (mask & (1u << b)) verts.push_back(b + 1);
        long long E = 0;
        for (size_t i = 0; i < verts.size(); i++)
            for (size_t j = i + 1; j < verts.size(); j++) {
                long long diff = verts[j] - verts[i];
                if ((diff & (diff - 1)) == 0) E++;
            }
        long long vo = static_cast<long long>(verts.size()) + orbit_count(verts).total;
        long long n = (vo + 1) / 2;
        REQUIRE(E <= e_formula(n));
    }
}

TEST_CASE("graph dumps") {
    std::ostringstream os;
    dump_graph(os, assoc_subgraph_lamp(singleton_lamp(2)));
    CHECK(os.str() == "e -> 0:1\n");
    std::ostringstream os2;
    dump_graph(os2, assoc_subgraph_bs(bs_set(2, {"0|0", "0|1"})));
    std::string s = os2.str();
    CHECK(s.find("0 -- 1") != std::string::npos);
    CHECK(s.find("0 -> -1") != std::string::npos);
}
