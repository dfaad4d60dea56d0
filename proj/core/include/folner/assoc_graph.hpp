#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <utility>
#include <vector>

#include "folner/subset.hpp"

namespace folner {

/// Associated subgraph of a lamplighter set: vertices are lamp configurations,
/// and each element (k,f) contributes the d-1 directed edges f -> f' where f'
/// differs from f exactly at k. Labels are discarded. |edges| = (d-1)|F|.
struct LampAssocGraph {
    std::vector<LampConfig> vertices;                // sorted
    std::vector<std::pair<int, int>> edges;          // directed, by vertex index
};

LampAssocGraph assoc_subgraph_lamp(const FiniteSubset& F);

/// A leaf is a vertex incident to exactly one edge of the subgraph, with that
/// edge pointing into the vertex.
std::vector<int> leaves(const LampAssocGraph& g);

struct LampInequalityReport {
    long long outer = 0;
    long long vertex_count = 0;
    long long leaf_count = 0;
    bool holds = false;  // outer >= 2|V| - |L|
};

/// The associated-graph lower bound on the outer boundary of a lamplighter set.
LampInequalityReport check_lamp_inequality(const FiniteSubset& F);

/// Associated subgraph of a BS(1,p) set: vertices are the p-adic translations,
/// each element (k,f) contributes directed edges f -> f +- p^k. |edges| = 2|F|.
/// `oneway` collects the edges whose reverse is absent; the undirected
/// reduction keeps one edge per mutual pair and only the vertices incident to
/// such an edge.
struct BsAssocGraph {
    std::vector<PadicRational> vertices;             // sorted, all touched vertices
    std::vector<std::pair<int, int>> directed_edges;
    std::vector<std::pair<int, int>> oneway;         // the set L
    std::vector<std::pair<int, int>> undirected;     // reduction edges (i < j)
    std::vector<int> reduction_vertices;             // vertex indices in the reduction
};

BsAssocGraph assoc_subgraph_bs(const FiniteSubset& F);

/// Non-trivial orbit counts of an integer vertex set under x -> x + 2^i,
/// totalled over all i >= 0 with 2^i <= span: maximal arithmetic chains of
/// step 2^i with at least two vertices.
struct OrbitCount {
    std::vector<std::pair<int, long long>> per_step;  // (i, chains of step 2^i)
    long long total = 0;
};

OrbitCount orbit_count(const std::vector<long long>& vertices);

/// Clear denominators (x 2^max_e), strip the common power of 2, translate the
/// minimum to 0. Orbit counts are invariant under all three.
std::vector<long long> dyadic_to_integer_vertices(const std::vector<PadicRational>& vs);

/// Maximum number of edges induced by the interval [1,n] in the graph on Z
/// with power-of-2 differences: kn - 2^k + 1 where 2^(k-1) < n <= 2^k.
long long e_formula(long long n);
/// Same quantity by direct pair counting (independent route).
long long e_interval_brute(long long n);
/// o([1..n]) = n - 1; direct chain decomposition.
long long o_interval(long long n);

struct BsBoundsReport {
    bool hypothesis_met = false;  // edge ratio <= 1
    mpq_class edge_ratio;
    long long F_size = 0;
    long long reduction_vertices = 0;
    long long reduction_edges = 0;
    long long orbits = 0;
    long long oneway = 0;
    long long a_edges = 0;
    long long b_edges = 0;
    bool size_bound = false;      // |F| >= |E| + o
    bool ratio_bound = false;     // ratio >= 2(|V|+o)/(|E|+o)
    bool a_bound = false;         // |edge-a boundary| >= 2|V|
    bool identities = false;      // |E_dir| = 2|F|, |E_dir| = |L| + 2|E|, |b-boundary| = |L|, |L| >= 2o
    bool all_hold() const { return size_bound && ratio_bound && a_bound && identities; }
};

/// The associated-graph bounds for BS(1,2) sets with edge ratio <= 1.
BsBoundsReport check_bs_bounds(const FiniteSubset& F);

struct CorollaryQuotient {
    mpq_class value;
    bool degenerate = false;  // n = 1: denominator 0; reported as 1 with this flag
};

/// (n + o(n)) / (e(n) + o(n)) = (2n-1)/(e(n)+n-1), exactly.
CorollaryQuotient corollary_quotient(long long n);

/// Edge-list dumps: `u -> v` (directed) / `u -- v` (undirected reduction),
/// vertices serialized as configurations.
void dump_graph(std::ostream& os, const LampAssocGraph& g);
void dump_graph(std::ostream& os, const BsAssocGraph& g);

std::string lamp_config_to_string(const LampConfig& c);

}  // namespace folner
