#pragma once

#include <cstdint>
#include <vector>

#include "blotto/errors.hpp"

namespace blotto {

// Bipartite player/field adjacency. Entry (i,j) is true iff player i can
// enter field j. Every player must have access to at least one field.
class AccessibilityNetwork {
public:
    AccessibilityNetwork(int n_players, int n_fields, std::vector<std::uint8_t> adjacency);

    int players() const { return n_; }
    int fields() const { return m_; }

    bool accessible(int player, int field) const {
        return adjacency_[static_cast<std::size_t>(player) * m_ + field] != 0;
    }

    // Fields accessible to one player, in ascending order.
    std::vector<int> accessible_fields(int player) const;

    bool operator==(const AccessibilityNetwork&) const = default;

private:
    int n_;
    int m_;
    std::vector<std::uint8_t> adjacency_;  // row-major n x m
};

// Player i accesses fields i, i+1, ..., i+k-1 (mod m).
AccessibilityNetwork make_regular_network(int n, int m, int k);

// Each player's accessible set is an independent uniform k-subset of the m
// fields. Deterministic given the seed, independent of call ordering.
AccessibilityNetwork make_random_network(int n, int m, int k, std::uint64_t seed);

// A full game instance: who can reach what, field values, the tie discount r
// applied once per tied opponent, and the per-entry hunting cost v.
struct GameSpec {
    AccessibilityNetwork network;
    std::vector<double> weights;  // one positive value per field
    double tie_factor = 0.5;      // in [0,1)
    double hunting_cost = 0.0;    // >= 0

    GameSpec(AccessibilityNetwork net, std::vector<double> w, double r, double v);

    int players() const { return network.players(); }
    int fields() const { return network.fields(); }

    bool operator==(const GameSpec&) const = default;
};

// One player's move: stay out, or enter a single field.
class PureAction {
public:
    static PureAction abstain() { return PureAction(kAbstain); }
    static PureAction hunt(int field);

    bool is_hunt() const { return field_ >= 0; }
    int field() const;

    bool operator==(const PureAction&) const = default;

private:
    explicit PureAction(int field) : field_(field) {}
    static constexpr int kAbstain = -1;
    int field_;
};

struct FieldProbability {
    int field = 0;
    double probability = 0.0;
};

// One player's mixed strategy: an abstention probability plus probabilities
// on the fields it plays. Mass may only sit on accessible fields and must
// total 1 within 1e-12.
struct PlayerStrategy {
    double abstain = 1.0;
    std::vector<FieldProbability> hunt;
};

struct StrategyProfile {
    std::vector<PlayerStrategy> players;
};

inline constexpr double kProfileTolerance = 1e-12;

// Throws InvalidProfile on dimension, support, sign, or normalization
// violations.
void validate_profile(const GameSpec& spec, const StrategyProfile& profile);

// Net payoff per player for one joint pure play. A field entered by exactly
// c players pays each entrant w_j * r^(c-1); entrants additionally pay the
// hunting cost; abstainers get 0.
std::vector<double> realized_payoffs(const GameSpec& spec, const std::vector<PureAction>& actions);

// Expected net payoff of one pure action against independently mixing
// opponents: hunting field j is worth w_j * prod_{p != i} (1 - (1-r) q_pj)
// minus the hunting cost, where q_pj is opponent p's probability on j.
double expected_action_payoff(const GameSpec& spec, const StrategyProfile& profile, int player,
                              const PureAction& action);

// Expected net payoff of the player's own mixed strategy against the rest of
// the profile.
double expected_payoff(const GameSpec& spec, const StrategyProfile& profile, int player);

struct BestResponse {
    double gain = 0.0;  // best pure payoff minus current expected payoff
    PureAction action = PureAction::abstain();
};

// Best pure deviation for one player. gain >= -1e-12 always; ties resolve to
// abstain first, then the lowest field index.
BestResponse deviation_gain(const GameSpec& spec, const StrategyProfile& profile, int player);

}  // namespace blotto
