#pragma once

#include <cstdint>
#include <vector>

#include "blotto/model.hpp"

namespace blotto::sim {

struct SimConfig {
    long long replications = 1;
    std::uint64_t seed = 0;
    // When true, ensemble runs redraw the random access sets every
    // replication; when false a single draw (from the seed) is reused.
    bool topology_resample = true;
};

struct SimReport {
    std::vector<double> mean_payoffs;
    std::vector<double> payoff_stderr;
    // Empirical fraction of (replication, field) pairs with no entrant;
    // fields are pooled within each replication, so the standard error is
    // computed over per-replication fractions.
    double survival_rate = 0.0;
    double survival_stderr = 0.0;
    long long replications = 0;
    std::uint64_t seed = 0;
};

// Samples every player's action independently per replication and aggregates
// realized payoffs and field survival. Each replication consumes its own
// counter-derived stream, and partial results merge in a fixed block order,
// so the report is bit-identical for any thread count. threads <= 0 picks
// the hardware count.
SimReport simulate(const GameSpec& spec, const StrategyProfile& profile, const SimConfig& config,
                   int threads = 0);

// Random-topology ensemble: every replication redraws each player's k-subset
// of fields (unless config.topology_resample is false); a player hunts with
// probability hunt_prob, uniformly over her k fields, paying cost v; field
// weights are 1 and ties scale by r.
SimReport simulate_random_ensemble(int n, int m, int k, double v, double r, double hunt_prob,
                                   const SimConfig& config, int threads = 0);

struct PlayerGain {
    double gain = 0.0;
    PureAction best_action = PureAction::abstain();
};

struct CertificationReport {
    std::vector<PlayerGain> players;
    double max_gain = 0.0;
    double tolerance = 0.0;
    bool equilibrium = false;
};

// Exact (no sampling) per-player deviation gains; the profile is an
// epsilon-equilibrium iff the largest gain is within tolerance.
CertificationReport verify_equilibrium(const GameSpec& spec, const StrategyProfile& profile,
                                       double tolerance);

}  // namespace blotto::sim
