#pragma once

#include <random>

#include "folner/subset.hpp"

namespace folner {

/// All sweeps use mt19937_64 with fixed seeds; the raw output sequence is
/// pinned by the standard, so sweeps are reproducible across platforms.
using Rng = std::mt19937_64;

inline uint64_t rand_below(Rng& rng, uint64_t n) { return rng() % n; }

/// Arbitrary (not necessarily connected) lamplighter set: up to max_size
/// elements with cursor and support inside [-window, window].
FiniteSubset random_lamp_set(int d, int max_size, int window, Rng& rng);

/// Arbitrary BS(1,p) set: levels in [-level_window, level_window],
/// translations m/p^e with |m| <= mant_window, e <= level_window.
FiniteSubset random_bs_set(int p, int max_size, int level_window, int mant_window, Rng& rng);

/// Connected set grown by random neighbor attachment from the identity.
FiniteSubset random_connected_set(const GroupModel& model, int size, Rng& rng);

/// A BS(1,2) set with edge ratio <= 1: a randomly sized level-box (which has
/// ratio <= 1 by the standard-set boundary count), randomly translated and
/// perturbed; draws are retried until the ratio condition holds.
FiniteSubset random_bs_set_ratio_le1(Rng& rng);

}  // namespace folner
