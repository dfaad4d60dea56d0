#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace folner {

/// A set of vertices in the d-ary Hamming graph on words of length m
/// (two words adjacent iff they differ in exactly one coordinate).
/// Words are encoded as base-d integers, coordinate j = digit j.
struct HammingSubset {
    int m = 0;
    int d = 2;
    std::vector<uint32_t> verts;  // sorted, each < d^m
};

long long hamming_edge_count(const HammingSubset& S);

/// The canonical cubal set of cardinality k in the binary m-cube: the initial
/// segment {0,...,k-1} of the integer order, a nested union of c_i-subcubes
/// for the binary expansion of k, each contained in the neighborhood of every
/// larger one.
HammingSubset cubal_set(long long k, int m);

/// Whether S decomposes as a cubal set (disjoint subcubes sized by the binary
/// expansion of |S|, smaller ones inside the neighborhood of all larger ones).
bool is_cubal(const HammingSubset& S);

struct MaxEdgesResult {
    long long max_edges = -1;
    std::vector<HammingSubset> witnesses;  // all maximizers, deduplicated up to
                                           // coordinate permutation + per-coordinate
                                           // symbol permutation
    long long maximizer_count = 0;         // before symmetry reduction
};

/// Exact maximum of induced edges over all V_count-subsets of the d-ary
/// m-dimensional Hamming graph, by exhaustive scan.
/// Throws std::domain_error when C(d^m, V_count) exceeds work_budget.
MaxEdgesResult brute_force_max_edges(int V_count, int d, int m, long long work_budget = 2'000'000'000);

/// (d-1)/2 * V * log_d(V), floating point. When V is a power of d the value
/// is exact ((d-1)/2 * V * integer).
double edge_bound(long long V, int d);
/// True iff edges <= edge_bound(V,d) + 1e-9, using the exact integer
/// comparison when V is a power of d.
bool edge_bound_holds(long long edges, long long V, int d);
/// True iff edges == edge_bound exactly; decided exactly at powers of d and
/// within 1e-9 otherwise.
bool edge_bound_tight(long long edges, long long V, int d);

/// f(v) = sum C v_i ln v_i + sum_{i<j} min(v_i, v_j) with C = (d-1)/(2 ln d);
/// entries must be >= 0 and sum to 1 within 1e-12; zero entries contribute 0.
double kkt_objective(const std::vector<double>& v, int d);

struct KktGridReport {
    int d = 0;
    double step = 0;
    double max_value = 0;
    std::vector<double> argmax;
    long long grid_points = 0;
    bool max_ok = false;        // max <= 1e-9
    bool near_zero_local = false;  // every point with f > -1e-6 lies within
                                   // 2*step of uniform in l-infinity
};

/// Scans f over the positive interior grid of the simplex (all parts >= step).
/// Points with a zero part reduce to the d-1 objective and are covered by the
/// lower-dimensional scans.
KktGridReport kkt_grid_check(int d, double step);

}  // namespace folner
