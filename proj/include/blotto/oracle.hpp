#pragma once

#include <cstdint>
#include <utility>

#include "blotto/model.hpp"
#include "blotto/ring.hpp"

namespace blotto::oracle {

// Exact expected net payoff by full enumeration of every joint pure play,
// weighted by profile probabilities. No independence factorization; payoffs
// are recomputed from the per-opponent win/lose/tie rule. Throws TooLarge
// when the opponents' joint support exceeds 10^7 combinations.
double brute_force_payoff(const GameSpec& spec, const StrategyProfile& profile, int player);

// Exact integer determinant of the n x n 0/1 circulant with ones on the two
// cyclic off-diagonals (fraction-free elimination). Valid for 3 <= n <= 12.
long long ring_determinant(int n);

// Sweeps the player's own mixing probability over grid_size evenly spaced
// points in [0,1], holding everyone else at eq, and evaluates each point by
// brute-force enumeration. Returns (max payoff on the grid, payoff at eq's
// own probability).
std::pair<double, double> grid_best_response(const ring::RingGame& ring,
                                             const ring::RingEquilibrium& eq, int player,
                                             int grid_size);

}  // namespace blotto::oracle
