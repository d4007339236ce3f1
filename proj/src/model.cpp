#include "blotto/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "blotto/rng.hpp"

namespace blotto {

AccessibilityNetwork::AccessibilityNetwork(int n_players, int n_fields,
                                           std::vector<std::uint8_t> adjacency)
    : n_(n_players), m_(n_fields), adjacency_(std::move(adjacency)) {
    if (n_ < 1 || m_ < 1) {
        throw InvalidDimensions("network needs at least one player and one field");
    }
    if (adjacency_.size() != static_cast<std::size_t>(n_) * m_) {
        throw InvalidDimensions("adjacency size does not match n x m");
    }
    for (int i = 0; i < n_; ++i) {
        bool any = false;
        for (int j = 0; j < m_; ++j) {
            any = any || accessible(i, j);
        }
        if (!any) {
            throw InvalidDimensions("player " + std::to_string(i + 1) + " has no accessible field");
        }
    }
}

std::vector<int> AccessibilityNetwork::accessible_fields(int player) const {
    std::vector<int> fields;
    for (int j = 0; j < m_; ++j) {
        if (accessible(player, j)) fields.push_back(j);
    }
    return fields;
}

AccessibilityNetwork make_regular_network(int n, int m, int k) {
    if (n < 1 || m < 1 || k < 1 || k > m) {
        throw InvalidDimensions("regular network requires n,m >= 1 and 1 <= k <= m");
    }
    std::vector<std::uint8_t> adj(static_cast<std::size_t>(n) * m, 0);
    for (int i = 0; i < n; ++i) {
        for (int t = 0; t < k; ++t) {
            adj[static_cast<std::size_t>(i) * m + (i + t) % m] = 1;
        }
    }
    return AccessibilityNetwork(n, m, std::move(adj));
}

AccessibilityNetwork make_random_network(int n, int m, int k, std::uint64_t seed) {
    if (n < 1 || m < 1 || k < 1 || k > m) {
        throw InvalidDimensions("random network requires n,m >= 1 and 1 <= k <= m");
    }
    std::vector<std::uint8_t> adj(static_cast<std::size_t>(n) * m, 0);
    std::vector<int> pool(m);
    for (int i = 0; i < n; ++i) {
        // One stream per player, so construction order never matters.
        CounterRng rng(seed, static_cast<std::uint64_t>(i));
        std::iota(pool.begin(), pool.end(), 0);
        for (int t = 0; t < k; ++t) {
            int pick = t + static_cast<int>(rng.next_below(static_cast<std::uint32_t>(m - t)));
            std::swap(pool[t], pool[pick]);
            adj[static_cast<std::size_t>(i) * m + pool[t]] = 1;
        }
    }
    return AccessibilityNetwork(n, m, std::move(adj));
}

GameSpec::GameSpec(AccessibilityNetwork net, std::vector<double> w, double r, double v)
    : network(std::move(net)), weights(std::move(w)), tie_factor(r), hunting_cost(v) {
    if (weights.size() != static_cast<std::size_t>(network.fields())) {
        throw InvalidDimensions("weight count does not match field count");
    }
    for (double weight : weights) {
        if (!(weight > 0.0) || !std::isfinite(weight)) {
            throw ParameterError("field weights must be positive and finite");
        }
    }
    if (!(tie_factor >= 0.0 && tie_factor < 1.0)) {
        throw ParameterError("tie factor must lie in [0, 1)");
    }
    if (!(hunting_cost >= 0.0) || !std::isfinite(hunting_cost)) {
        throw ParameterError("hunting cost must be nonnegative and finite");
    }
}

PureAction PureAction::hunt(int field) {
    if (field < 0) throw InvalidAction("field index must be nonnegative");
    return PureAction(field);
}

int PureAction::field() const {
    if (!is_hunt()) throw InvalidAction("abstain carries no field");
    return field_;
}

void validate_profile(const GameSpec& spec, const StrategyProfile& profile) {
    const int n = spec.players();
    const int m = spec.fields();
    if (profile.players.size() != static_cast<std::size_t>(n)) {
        throw InvalidProfile("profile has wrong player count");
    }
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(m));
    for (int i = 0; i < n; ++i) {
        const PlayerStrategy& s = profile.players[i];
        if (!(s.abstain >= 0.0) || !std::isfinite(s.abstain)) {
            throw InvalidProfile("player " + std::to_string(i + 1) + ": abstain probability invalid");
        }
        std::fill(seen.begin(), seen.end(), 0);
        double total = s.abstain;
        for (const FieldProbability& fp : s.hunt) {
            if (fp.field < 0 || fp.field >= m) {
                throw InvalidProfile("player " + std::to_string(i + 1) + ": field index out of range");
            }
            if (!spec.network.accessible(i, fp.field)) {
                throw InvalidProfile("player " + std::to_string(i + 1) + ": mass on inaccessible field " +
                                     std::to_string(fp.field + 1));
            }
            if (seen[fp.field]) {
                throw InvalidProfile("player " + std::to_string(i + 1) + ": duplicate field entry");
            }
            seen[fp.field] = 1;
            if (!(fp.probability >= 0.0) || !std::isfinite(fp.probability)) {
                throw InvalidProfile("player " + std::to_string(i + 1) + ": negative or non-finite probability");
            }
            total += fp.probability;
        }
        if (std::abs(total - 1.0) > kProfileTolerance) {
            throw InvalidProfile("player " + std::to_string(i + 1) + ": probabilities sum to " +
                                 std::to_string(total));
        }
    }
}

std::vector<double> realized_payoffs(const GameSpec& spec, const std::vector<PureAction>& actions) {
    const int n = spec.players();
    const int m = spec.fields();
    if (actions.size() != static_cast<std::size_t>(n)) {
        throw InvalidAction("need exactly one action per player");
    }
    std::vector<int> entrants(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < n; ++i) {
        if (!actions[i].is_hunt()) continue;
        const int j = actions[i].field();
        if (j >= m || !spec.network.accessible(i, j)) {
            throw InvalidAction("player " + std::to_string(i + 1) + " cannot enter field " +
                                std::to_string(j + 1));
        }
        ++entrants[j];
    }
    std::vector<double> payoff(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        if (!actions[i].is_hunt()) continue;
        const int j = actions[i].field();
        double value = spec.weights[j];
        for (int t = 1; t < entrants[j]; ++t) value *= spec.tie_factor;
        payoff[i] = value - spec.hunting_cost;
    }
    return payoff;
}

namespace {

// Gross expected value of player i entering field j, before the hunting cost.
double entry_value(const GameSpec& spec, const StrategyProfile& profile, int player, int field) {
    const double shrink = 1.0 - spec.tie_factor;
    double value = spec.weights[field];
    const int n = spec.players();
    for (int p = 0; p < n; ++p) {
        if (p == player) continue;
        for (const FieldProbability& fp : profile.players[p].hunt) {
            if (fp.field == field) {
                value *= 1.0 - shrink * fp.probability;
                break;
            }
        }
    }
    return value;
}

}  // namespace

double expected_action_payoff(const GameSpec& spec, const StrategyProfile& profile, int player,
                              const PureAction& action) {
    if (!action.is_hunt()) return 0.0;
    const int j = action.field();
    if (j >= spec.fields() || !spec.network.accessible(player, j)) {
        throw InvalidAction("player " + std::to_string(player + 1) + " cannot enter field " +
                            std::to_string(j + 1));
    }
    return entry_value(spec, profile, player, j) - spec.hunting_cost;
}

double expected_payoff(const GameSpec& spec, const StrategyProfile& profile, int player) {
    validate_profile(spec, profile);
    double total = 0.0;
    for (const FieldProbability& fp : profile.players[player].hunt) {
        if (fp.probability == 0.0) continue;
        total += fp.probability * (entry_value(spec, profile, player, fp.field) - spec.hunting_cost);
    }
    return total;
}

BestResponse deviation_gain(const GameSpec& spec, const StrategyProfile& profile, int player) {
    validate_profile(spec, profile);
    BestResponse best;
    best.action = PureAction::abstain();
    double best_value = 0.0;
    for (int j : spec.network.accessible_fields(player)) {
        const double value = entry_value(spec, profile, player, j) - spec.hunting_cost;
        if (value > best_value) {
            best_value = value;
            best.action = PureAction::hunt(j);
        }
    }
    best.gain = best_value - expected_payoff(spec, profile, player);
    return best;
}

}  // namespace blotto
