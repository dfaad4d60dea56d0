#pragma once

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "folner/subset.hpp"

namespace folner {

enum class BoundaryKind { Inner, Outer, Edge };

std::string to_string(BoundaryKind k);
BoundaryKind boundary_kind_from_string(const std::string& s);

enum class SearchMode { ConnectedOnly, Exhaustive };

/// Ambient region for exhaustive mode: a ball around the identity, or (for
/// lamplighter models) a cursor/support box.
struct SearchAmbient {
    enum class Type { Ball, Box };
    Type type = Type::Ball;
    int ball_radius = 6;
    int cursor_lo = 0, cursor_hi = 0, supp_lo = 0, supp_hi = 0;
};

struct SearchProblem {
    GroupModel model;
    BoundaryKind kind = BoundaryKind::Edge;
    int size_limit = 8;
    SearchMode mode = SearchMode::ConnectedOnly;
    SearchAmbient ambient;
    long long node_budget = 100'000'000'000;  // explored-node cap; partial results past it
    int workers = 1;
    /// Resume support: top-level branch indices already completed by a
    /// previous run; they are skipped (their results must be merged by the caller).
    std::set<int> skip_prefixes;
};

/// Per-cardinality outcome. `min_boundary` is exact over the searched family
/// when `exact`; when the node budget was exhausted the flag is false and the
/// value is only an upper bound.
struct SizeResult {
    int size = 0;
    long long min_boundary = -1;
    mpq_class ratio;
    bool exact = true;
    bool includes_disconnected = false;  // composed component minima cover disconnected sets
    bool disconnected_ties = false;      // a disconnected composition matches min_boundary
    std::vector<FiniteSubset> witnesses; // canonical representatives attaining the minimum
    /// Def-4.1 flags relative to the report: strictly better than every
    /// smaller cardinality, and no larger... (optimality = min over <= size with
    /// strictness below).
    bool strictly_better_than_smaller = false;
    bool optimal = false;
};

struct OptimalityReport {
    SearchProblem problem;
    std::vector<SizeResult> per_size;  // [0] unused; sizes 1..size_limit
    /// Connected-only search is a sound oracle for the edge and inner kinds
    /// (boundaries are additive over connected components, so disconnected
    /// minima are covered by the composition step); for the outer kind it is
    /// not (outer boundaries of distinct components may overlap) and results
    /// are flagged as non-oracle.
    bool oracle_sound = true;
    long long nodes_visited = 0;
    bool budget_exhausted = false;
    std::vector<int> completed_prefixes;
    int prefix_count = 0;
};

/// Streams each left-translation class of connected subsets of cardinality
/// <= size_limit exactly once, as its canonical representative.
void enumerate_connected_subsets(const GroupModel& model, int size_limit,
                                 const std::function<void(const FiniteSubset&)>& emit,
                                 long long node_budget = 1'000'000'000);

/// Minimal boundary per cardinality over the searched family (connected
/// classes, or all subsets of the ambient region), with all witnesses
/// attaining the minimum.
OptimalityReport min_boundary_ratio(const SearchProblem& problem);

/// Closure correspondence between outer- and inner-optimal sets:
/// for every cardinality s where the outer report certifies Def-4.1 optimality,
/// the closures F u outer(F) of the outer witnesses must be inner-optimal at
/// their size, and every inner witness of that size must be such a closure.
struct CorrespondenceEntry {
    int outer_size = 0;
    long long outer_min = 0;
    int closure_size = 0;
    bool closure_attains_inner_min = false;
    bool closure_inner_optimal = false;
    bool all_inner_witnesses_are_closures = false;
    bool ok() const { return closure_attains_inner_min && closure_inner_optimal && all_inner_witnesses_are_closures; }
};

struct CorrespondenceReport {
    std::vector<CorrespondenceEntry> entries;
    bool holds = true;
};

CorrespondenceReport verify_closure_correspondence(const OptimalityReport& outer, const OptimalityReport& inner);

/// Convenience wrapper: runs the outer search (exhaustive over a ball) and the
/// inner search (connected + composition) and checks the correspondence.
CorrespondenceReport verify_closure_correspondence(const GroupModel& model, int outer_size_limit, int ball_radius,
                                                   int workers = 1);

}  // namespace folner
