#include "blotto/ring.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace blotto::ring {

RingGame::RingGame(int n_players, std::vector<double> w, double r)
    : n(n_players), weights(std::move(w)), tie_factor(r) {
    if (n < 3) throw InvalidDimensions("ring game needs n >= 3");
    if (weights.size() != static_cast<std::size_t>(n)) {
        throw InvalidDimensions("ring game needs one weight per field");
    }
    for (double weight : weights) {
        if (!(weight > 0.0) || !std::isfinite(weight)) {
            throw ParameterError("ring weights must be positive and finite");
        }
    }
    if (!(tie_factor >= 0.0 && tie_factor < 1.0)) {
        throw ParameterError("tie factor must lie in [0, 1)");
    }
}

LinearSystem indifference_system(const RingGame& game) {
    const int n = game.n;
    LinearSystem sys;
    sys.n = n;
    sys.matrix.assign(static_cast<std::size_t>(n) * n, 0.0);
    sys.rhs.assign(static_cast<std::size_t>(n), 0.0);
    const double r = game.tie_factor;
    for (int i = 0; i < n; ++i) {
        const double wi = game.weights[i];
        const double wn = game.weights[(i + 1) % n];
        sys.matrix[static_cast<std::size_t>(i) * n + (i + n - 1) % n] = wi;
        sys.matrix[static_cast<std::size_t>(i) * n + (i + 1) % n] = wn;
        sys.rhs[i] = (wn - r * wi) / (1.0 - r);
    }
    return sys;
}

bool is_invertible(int n) {
    if (n < 3) throw InvalidDimensions("ring matrix defined for n >= 3");
    return n % 4 != 0;
}

RingEquilibrium solve(const RingGame& game) {
    const int n = game.n;
    LinearSystem sys = indifference_system(game);

    double scale = 0.0;
    for (double entry : sys.matrix) scale = std::max(scale, std::abs(entry));

    // Partial-pivot elimination on the augmented system.
    std::vector<double> a = sys.matrix;
    std::vector<double> b = sys.rhs;
    const double pivot_floor = 1e-10 * scale;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int row = col + 1; row < n; ++row) {
            if (std::abs(a[static_cast<std::size_t>(row) * n + col]) >
                std::abs(a[static_cast<std::size_t>(pivot) * n + col])) {
                pivot = row;
            }
        }
        const double head = a[static_cast<std::size_t>(pivot) * n + col];
        if (std::abs(head) < pivot_floor) {
            throw SingularSystem("indifference system is singular (n mod 4 = " +
                                     std::to_string(n % 4) + ", n = " + std::to_string(n) + ")",
                                 n);
        }
        if (pivot != col) {
            for (int j = col; j < n; ++j) {
                std::swap(a[static_cast<std::size_t>(col) * n + j],
                          a[static_cast<std::size_t>(pivot) * n + j]);
            }
            std::swap(b[col], b[pivot]);
        }
        for (int row = col + 1; row < n; ++row) {
            const double factor = a[static_cast<std::size_t>(row) * n + col] / head;
            if (factor == 0.0) continue;
            a[static_cast<std::size_t>(row) * n + col] = 0.0;
            for (int j = col + 1; j < n; ++j) {
                a[static_cast<std::size_t>(row) * n + j] -=
                    factor * a[static_cast<std::size_t>(col) * n + j];
            }
            b[row] -= factor * b[col];
        }
    }

    RingEquilibrium eq;
    eq.p.assign(static_cast<std::size_t>(n), 0.0);
    for (int row = n - 1; row >= 0; --row) {
        double value = b[row];
        for (int j = row + 1; j < n; ++j) {
            value -= a[static_cast<std::size_t>(row) * n + j] * eq.p[j];
        }
        eq.p[row] = value / a[static_cast<std::size_t>(row) * n + row];
    }

    eq.residual = 0.0;
    for (int i = 0; i < n; ++i) {
        double lhs = 0.0;
        for (int j = 0; j < n; ++j) {
            lhs += sys.at(i, j) * eq.p[j];
        }
        eq.residual = std::max(eq.residual, std::abs(lhs - sys.rhs[i]));
    }
    eq.interior = std::all_of(eq.p.begin(), eq.p.end(),
                              [](double pi) { return pi > 0.0 && pi < 1.0; });
    return eq;
}

StrategyProfile to_profile(const RingGame& game, const RingEquilibrium& eq) {
    const int n = game.n;
    if (eq.p.size() != static_cast<std::size_t>(n)) {
        throw InvalidDimensions("equilibrium vector does not match ring size");
    }
    StrategyProfile profile;
    profile.players.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double pi = eq.p[i];
        if (!(pi >= 0.0 && pi <= 1.0)) {
            throw OutOfRange("p[" + std::to_string(i + 1) + "] = " + std::to_string(pi) +
                             " outside [0,1]");
        }
        PlayerStrategy& s = profile.players[i];
        s.abstain = 0.0;
        s.hunt = {{i, pi}, {(i + 1) % n, 1.0 - pi}};
    }
    return profile;
}

GameSpec to_game_spec(const RingGame& game) {
    return GameSpec(make_regular_network(game.n, game.n, 2), game.weights, game.tie_factor, 0.0);
}

std::vector<double> solution_payoffs(const RingGame& game, const RingEquilibrium& eq) {
    const int n = game.n;
    if (eq.p.size() != static_cast<std::size_t>(n)) {
        throw InvalidDimensions("equilibrium vector does not match ring size");
    }
    const bool boxed = std::all_of(eq.p.begin(), eq.p.end(),
                                   [](double pi) { return pi >= 0.0 && pi <= 1.0; });
    std::vector<double> payoffs(static_cast<std::size_t>(n));
    if (boxed) {
        const GameSpec spec = to_game_spec(game);
        const StrategyProfile profile = to_profile(game, eq);
        for (int i = 0; i < n; ++i) payoffs[i] = expected_payoff(spec, profile, i);
        return payoffs;
    }
    const double r = game.tie_factor;
    for (int i = 0; i < n; ++i) {
        const double own = game.weights[i] * (r + (1.0 - r) * eq.p[(i + n - 1) % n]);
        const double next = game.weights[(i + 1) % n] * (1.0 - (1.0 - r) * eq.p[(i + 1) % n]);
        payoffs[i] = eq.p[i] * own + (1.0 - eq.p[i]) * next;
    }
    return payoffs;
}

double field_survival(const RingEquilibrium& eq, int field) {
    const int n = static_cast<int>(eq.p.size());
    const double prev = eq.p[(field + n - 1) % n];
    return prev * (1.0 - eq.p[field]);
}

double mean_survival(const RingEquilibrium& eq) {
    const int n = static_cast<int>(eq.p.size());
    double total = 0.0;
    for (int j = 0; j < n; ++j) total += field_survival(eq, j);
    return total / n;
}

std::vector<double> arithmetic_weights(int n, double epsilon) {
    if (n < 3) throw InvalidDimensions("ring game needs n >= 3");
    if (!(epsilon >= 0.0) || epsilon >= 2.0 / n) {
        throw ParameterError("epsilon must lie in [0, 2/n) to keep weights positive");
    }
    const int anchor = (n + 1) / 2;  // 1-based field with weight 1
    std::vector<double> weights(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        weights[j - 1] = 1.0 + (j - anchor) * epsilon;
    }
    return weights;
}

std::vector<SweepRow> dispersion_sweep(int n, const std::vector<double>& epsilon_grid,
                                       double tie_factor) {
    std::vector<SweepRow> rows;
    rows.reserve(epsilon_grid.size());
    for (double epsilon : epsilon_grid) {
        RingGame game(n, arithmetic_weights(n, epsilon), tie_factor);
        RingEquilibrium eq = solve(game);

        SweepRow row;
        row.epsilon = epsilon;
        row.p = eq.p;
        row.interior = eq.interior;
        row.payoffs = solution_payoffs(game, eq);
        double total = 0.0;
        for (double payoff : row.payoffs) total += payoff;
        row.avg_payoff = total / n;
        row.survival_rate = mean_survival(eq);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace blotto::ring
