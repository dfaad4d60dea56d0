#pragma once

#include <gmpxx.h>

#include <string>

#include "folner/subset.hpp"

namespace folner {

/// Exact boundary counts of a finite set F:
///   inner: elements of F with a Cayley neighbor outside F,
///   outer: elements outside F with a Cayley neighbor in F,
///   edge:  unordered Cayley edges with exactly one endpoint in F.
/// Ratios are exact rationals (size / |F|); floating point only at output.
struct BoundaryReport {
    long long set_size = 0;
    long long inner_size = 0;
    long long outer_size = 0;
    long long edge_size = 0;
    mpq_class inner_ratio;
    mpq_class outer_ratio;
    mpq_class edge_ratio;

    std::string csv_row(const GroupModel& model) const;
};

std::string rat_str(const mpq_class& q);

/// gmpxx has no long long overloads; long is 64-bit on every supported target.
inline mpz_class mpz_of(long long v) { return mpz_class(static_cast<long>(v)); }
inline mpq_class make_ratio(long long num, long long den) {
    mpq_class q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return q;
}

BoundaryReport boundaries(const FiniteSubset& F);

/// Inner boundary only (cheaper; used by search and sweeps).
long long inner_boundary_size(const FiniteSubset& F);

/// The set F u outer(F).
FiniteSubset closure(const FiniteSubset& F);
/// The outer boundary as a set.
FiniteSubset outer_boundary_set(const FiniteSubset& F);

/// True iff |inner(F)|/|F| <= 1/n, compared in exact rational arithmetic.
bool folner_test(const FiniteSubset& F, long long n);

}  // namespace folner
