#pragma once

#include <vector>

#include "blotto/model.hpp"

namespace blotto::ring {

// The cyclic game where player i can enter only fields i and i+1 (mod n).
struct RingGame {
    int n = 0;                    // players = fields, >= 3
    std::vector<double> weights;  // one positive value per field
    double tie_factor = 0.5;

    RingGame(int n_players, std::vector<double> w, double r = 0.5);
};

// Mixing solution of the ring: p[i] is the probability player i enters its
// own field i (and 1-p[i] field i+1). interior is true iff every p[i] lies
// strictly inside (0,1); only then is the solution an equilibrium.
struct RingEquilibrium {
    std::vector<double> p;
    double residual = 0.0;  // max |A p - b| over the indifference rows
    bool interior = false;
};

struct LinearSystem {
    std::vector<double> matrix;  // row-major n x n
    std::vector<double> rhs;
    int n = 0;

    double at(int row, int col) const { return matrix[static_cast<std::size_t>(row) * n + col]; }
};

// Row i equates the two entry values of player i:
//   w_i p_{i-1} + w_{i+1} p_{i+1} = (w_{i+1} - r w_i) / (1 - r)
// The matrix is independent of r; at r = 1/2 the right-hand side becomes
// 2 w_{i+1} - w_i. Indices mod n.
LinearSystem indifference_system(const RingGame& game);

// Whether the equal-weight indifference matrix is invertible: n mod 4 != 0.
bool is_invertible(int n);

// Solves the indifference system by partial-pivot elimination. Throws
// SingularSystem (carrying n mod 4) when a pivot falls below 1e-10 relative
// to the matrix scale. Non-interior solutions are returned with
// interior=false rather than rejected.
RingEquilibrium solve(const RingGame& game);

// Expands the scalar mixing vector into a full per-field profile.
StrategyProfile to_profile(const RingGame& game, const RingEquilibrium& eq);

// GameSpec view of the ring game (hunting cost 0).
GameSpec to_game_spec(const RingGame& game);

// Per-player expected payoff at the indifference solution:
//   p_i w_i (r + (1-r) p_{i-1}) + (1-p_i) w_{i+1} (1 - (1-r) p_{i+1}).
// Routed through the exact profile evaluation whenever p lies in [0,1];
// non-interior solutions outside the box are evaluated by the same algebra.
std::vector<double> solution_payoffs(const RingGame& game, const RingEquilibrium& eq);

// Exact probability that no player enters field j: p_{j-1} * (1 - p_j).
double field_survival(const RingEquilibrium& eq, int field);

// Mean of field_survival over all fields.
double mean_survival(const RingEquilibrium& eq);

struct SweepRow {
    double epsilon = 0.0;
    std::vector<double> p;
    std::vector<double> payoffs;
    double avg_payoff = 0.0;
    double survival_rate = 0.0;
    bool interior = false;
};

// Weights in arithmetic sequence with common difference epsilon, anchored so
// field ceil(n/2) (1-based) has weight 1. Rejects epsilon >= 2/n (weights
// would reach zero).
std::vector<double> arithmetic_weights(int n, double epsilon);

// Solves the ring for each epsilon and evaluates exact payoffs and survival.
std::vector<SweepRow> dispersion_sweep(int n, const std::vector<double>& epsilon_grid,
                                       double tie_factor);

}  // namespace blotto::ring
