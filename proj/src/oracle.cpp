#include "blotto/oracle.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace blotto::oracle {

namespace {

struct WeightedAction {
    PureAction action = PureAction::abstain();
    double probability = 0.0;
};

// Support = actions carrying positive probability.
std::vector<WeightedAction> support_of(const PlayerStrategy& strategy) {
    std::vector<WeightedAction> support;
    if (strategy.abstain > 0.0) support.push_back({PureAction::abstain(), strategy.abstain});
    for (const FieldProbability& fp : strategy.hunt) {
        if (fp.probability > 0.0) support.push_back({PureAction::hunt(fp.field), fp.probability});
    }
    return support;
}

// Net payoff of one player under one joint pure play, evaluated from the
// per-opponent rule: an entrant's field value picks up a factor r for every
// opponent entering the same field, abstainers get 0, entrants pay the cost.
double pure_payoff(const GameSpec& spec, const std::vector<PureAction>& actions, int player) {
    if (!actions[player].is_hunt()) return 0.0;
    const int j = actions[player].field();
    double value = spec.weights[j];
    for (int p = 0; p < spec.players(); ++p) {
        if (p == player) continue;
        if (actions[p].is_hunt() && actions[p].field() == j) value *= spec.tie_factor;
    }
    return value - spec.hunting_cost;
}

}  // namespace

double brute_force_payoff(const GameSpec& spec, const StrategyProfile& profile, int player) {
    validate_profile(spec, profile);
    const int n = spec.players();

    std::vector<int> opponents;
    std::vector<std::vector<WeightedAction>> supports;
    double combinations = 1.0;
    for (int p = 0; p < n; ++p) {
        if (p == player) continue;
        opponents.push_back(p);
        supports.push_back(support_of(profile.players[p]));
        combinations *= static_cast<double>(supports.back().size());
        if (combinations > 1e7) {
            throw TooLarge("joint opponent support exceeds 10^7 combinations");
        }
    }
    const std::vector<WeightedAction> own = support_of(profile.players[player]);

    std::vector<PureAction> actions(static_cast<std::size_t>(n), PureAction::abstain());
    std::vector<std::size_t> index(opponents.size(), 0);
    double total = 0.0;
    while (true) {
        double joint = 1.0;
        for (std::size_t t = 0; t < opponents.size(); ++t) {
            const WeightedAction& wa = supports[t][index[t]];
            actions[opponents[t]] = wa.action;
            joint *= wa.probability;
        }
        for (const WeightedAction& mine : own) {
            actions[player] = mine.action;
            total += joint * mine.probability * pure_payoff(spec, actions, player);
        }
        // Odometer over opponent supports.
        std::size_t t = 0;
        for (; t < index.size(); ++t) {
            if (++index[t] < supports[t].size()) break;
            index[t] = 0;
        }
        if (t == index.size()) break;
    }
    return total;
}

long long ring_determinant(int n) {
    if (n < 3 || n > 12) throw InvalidDimensions("determinant supported for 3 <= n <= 12");

    // 0/1 circulant with ones where the column is one step off the row.
    std::vector<long long> a(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
        a[static_cast<std::size_t>(i) * n + (i + 1) % n] = 1;
        a[static_cast<std::size_t>(i) * n + (i + n - 1) % n] = 1;
    }

    // Bareiss fraction-free elimination: stays in exact integers.
    long long sign = 1;
    long long prev = 1;
    for (int col = 0; col < n - 1; ++col) {
        if (a[static_cast<std::size_t>(col) * n + col] == 0) {
            int pivot = -1;
            for (int row = col + 1; row < n; ++row) {
                if (a[static_cast<std::size_t>(row) * n + col] != 0) {
                    pivot = row;
                    break;
                }
            }
            if (pivot < 0) return 0;
            for (int j = 0; j < n; ++j) {
                std::swap(a[static_cast<std::size_t>(col) * n + j],
                          a[static_cast<std::size_t>(pivot) * n + j]);
            }
            sign = -sign;
        }
        for (int row = col + 1; row < n; ++row) {
            for (int j = col + 1; j < n; ++j) {
                a[static_cast<std::size_t>(row) * n + j] =
                    (a[static_cast<std::size_t>(row) * n + j] *
                         a[static_cast<std::size_t>(col) * n + col] -
                     a[static_cast<std::size_t>(row) * n + col] *
                         a[static_cast<std::size_t>(col) * n + j]) /
                    prev;
            }
            a[static_cast<std::size_t>(row) * n + col] = 0;
        }
        prev = a[static_cast<std::size_t>(col) * n + col];
    }
    return sign * a[static_cast<std::size_t>(n - 1) * n + (n - 1)];
}

std::pair<double, double> grid_best_response(const ring::RingGame& game,
                                             const ring::RingEquilibrium& eq, int player,
                                             int grid_size) {
    if (grid_size < 2) throw ParameterError("grid needs at least two points");
    const int n = game.n;
    if (eq.p.size() != static_cast<std::size_t>(n)) {
        throw InvalidDimensions("equilibrium vector does not match ring size");
    }

    GameSpec spec(make_regular_network(n, n, 2), game.weights, game.tie_factor, 0.0);
    StrategyProfile profile;
    profile.players.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double pi = eq.p[i];
        if (!(pi >= 0.0 && pi <= 1.0)) {
            throw OutOfRange("p[" + std::to_string(i + 1) + "] = " + std::to_string(pi) +
                             " outside [0,1]");
        }
        profile.players[i].abstain = 0.0;
        profile.players[i].hunt = {{i, pi}, {(i + 1) % n, 1.0 - pi}};
    }

    auto payoff_at = [&](double own) {
        profile.players[player].hunt[0].probability = own;
        profile.players[player].hunt[1].probability = 1.0 - own;
        return brute_force_payoff(spec, profile, player);
    };

    double best = payoff_at(0.0);
    for (int g = 1; g < grid_size; ++g) {
        best = std::max(best, payoff_at(static_cast<double>(g) / (grid_size - 1)));
    }
    const double at_eq = payoff_at(eq.p[player]);
    return {best, at_eq};
}

}  // namespace blotto::oracle
