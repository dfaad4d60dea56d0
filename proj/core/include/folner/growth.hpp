#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "folner/boundary.hpp"
#include "folner/subset.hpp"

namespace folner {

inline constexpr long long kDefaultStateBudget = 20'000'000;

/// Exact |B(r)| for r = 0..radius, from BFS over the Cayley graph.
struct GrowthTable {
    GroupModel model;
    std::vector<mpz_class> volumes;  // volumes[r] = |B(r)|
    bool complete = true;            // false when the state budget cut BFS short

    int radius() const { return static_cast<int>(volumes.size()) - 1; }
};

GrowthTable ball_volume(const GroupModel& model, int radius, long long state_budget = kDefaultStateBudget);

/// phi(lambda) = min(r : V(r) > lambda). Throws std::runtime_error when the
/// table is too short to bracket lambda.
int phi(const GrowthTable& table, const mpz_class& lambda);

/// Counts of reduced right-moving words on {t, delta_1..delta_(d-1)} with no
/// two consecutive deltas: exact-length counts W(0)=1, W(1)=d,
/// W(k) = W(k-1) + (d-1) W(k-2), and their partial sums (words of length <= k).
/// The recurrence holds for the exact-length counts; the cumulative counts
/// satisfy it only up to boundary terms, so both are exposed.
struct ReducedWordCounts {
    std::vector<mpz_class> exact;       // W(0..n)
    std::vector<mpz_class> cumulative;  // sum of W(0..k)
};

ReducedWordCounts reduced_word_count(int d, int n);

/// The dominant root of x^2 = x + (d-1): (1 + sqrt(4d-3))/2.
struct ExactGrowthRate {
    long radicand = 0;       // 4d-3
    double value = 0;        // (1+sqrt(radicand))/2
    bool is_integer = false; // radicand is a perfect square
    long integer_value = 0;  // the rate when is_integer
    std::string description; // "(1+sqrt(R))/2"
};

ExactGrowthRate growth_rate_exact(int d);

/// The Coulhon--Saloff-Coste constant of Z wr D with the standard generators:
/// 2 ln d / ln((1+sqrt(4d-3))/2), plus the exponent identity
/// lim Fol(n)^(1/n) = d^2 checked numerically from the exact values.
struct CscReport {
    int d = 0;
    ExactGrowthRate rate;
    double constant = 0;
    double fol_exponent = 0;        // ln(Fol(n))/n at the probe n
    double fol_exponent_target = 0; // 2 ln d
    bool exponent_converges = false;
};

CscReport csc_constant(int d);

/// ln of a positive big integer, without overflow.
double ln_mpz(const mpz_class& v);

/// Instance check of the inner-boundary lower bounds:
///   |inner F|/|F| >= 1/(8|S| phi(2|F|))           (the original inequality)
///   |inner F|/|F| >= 1/(2 phi(2|F|))              (sharpened constant)
///   |inner F|/|F| >= (1-1/lambda)/phi(lambda |F|) for lambda in {2,4,8}
/// All comparisons in exact rationals.
struct CscInstanceReport {
    long long F_size = 0;
    mpq_class inner_ratio;
    mpq_class bound_original;
    mpq_class bound_sharp;
    std::vector<std::pair<int, mpq_class>> bounds_lambda;
    bool original_ok = false;
    bool sharp_ok = false;
    bool lambda_ok = false;
    bool all_hold() const { return original_ok && sharp_ok && lambda_ok; }
};

CscInstanceReport csc_instance_check(const FiniteSubset& F, const GrowthTable& table);

/// Switch-walk-switch checks at parameter n: the adapted standard set has
/// outer ratio exactly 2/n, and 2^r <= V_sws(r) <= 8 r^3 2^r for r <= n.
struct SwsReport {
    int n = 0;
    mpq_class outer_ratio;   // exactly 2/n
    bool ratio_ok = false;
    bool sandwich_ok = false;
    GrowthTable table;
};

SwsReport sws_checks(int n, long long state_budget = kDefaultStateBudget);

}  // namespace folner
