// Acceptance suite: every release gate in one binary, one verdict line each.
// Gates cover the solved ring fixed point, the mod-4 singularity rule,
// indifference certification, dispersion monotonicity, both closed-form
// families against Monte Carlo, topology dominance, oracle equivalence, and
// bit-level simulation determinism.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "blotto/model.hpp"
#include "blotto/oracle.hpp"
#include "blotto/ring.hpp"
#include "blotto/serialize.hpp"
#include "blotto/simulate.hpp"
#include "blotto/symmetric.hpp"

#ifndef BLOTTO_CLI_PATH
#error "BLOTTO_CLI_PATH must point at the built binary"
#endif

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

struct Gate {
    std::string label;
    double budget_s;
    Clock::time_point start = Clock::now();
    bool ok = true;
    std::string detail;

    Gate(std::string name, double budget) : label(std::move(name)), budget_s(budget) {}

    void require(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }

    void finish() {
        const double elapsed =
            std::chrono::duration_cast<std::chrono::duration<double>>(Clock::now() - start)
                .count();
        if (elapsed >= budget_s && ok) {
            ok = false;
            detail = "runtime " + std::to_string(elapsed) + "s over budget";
        }
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2fs/%.0fs", elapsed, budget_s);
        if (ok) {
            std::cout << "[PASS] " << label << " (" << timing << ")\n";
        } else {
            std::cout << "[FAIL] " << label << " (" << timing << "): " << detail << "\n";
            ++failures;
        }
    }
};

std::string run_command(const std::string& args, int& exit_code) {
    const std::string command = std::string(BLOTTO_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) {
        exit_code = -1;
        return "";
    }
    std::string out;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, got);
    const int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

blotto::StrategyProfile band_profile(const blotto::GameSpec& spec, double hunt_prob) {
    blotto::StrategyProfile profile;
    profile.players.resize(static_cast<std::size_t>(spec.players()));
    for (int i = 0; i < spec.players(); ++i) {
        const auto fields = spec.network.accessible_fields(i);
        profile.players[i].abstain = 1.0 - hunt_prob;
        for (int j : fields) {
            profile.players[i].hunt.push_back(
                {j, hunt_prob / static_cast<double>(fields.size())});
        }
    }
    return profile;
}

void criterion_1_ring_fixed_point() {
    Gate gate("criterion 1: equal-weight ring solves to p=1/2, payoff 3/4", 1.0);
    for (int n : {3, 5, 6, 7, 9, 10, 11}) {
        blotto::ring::RingGame game(n, std::vector<double>(n, 1.0), 0.5);
        const blotto::ring::RingEquilibrium eq = blotto::ring::solve(game);
        gate.require(eq.interior, "n=" + std::to_string(n) + " not interior");
        for (double p : eq.p) {
            gate.require(std::abs(p - 0.5) <= 1e-12,
                         "n=" + std::to_string(n) + " p=" + std::to_string(p));
        }
        const blotto::GameSpec spec = blotto::ring::to_game_spec(game);
        const blotto::StrategyProfile profile = blotto::ring::to_profile(game, eq);
        for (int i = 0; i < n; ++i) {
            const double w = blotto::expected_payoff(spec, profile, i);
            gate.require(std::abs(w - 0.75) <= 1e-12,
                         "n=" + std::to_string(n) + " payoff=" + std::to_string(w));
        }
    }
    gate.finish();
}

void criterion_2_mod4_singularity() {
    Gate gate("criterion 2: mod-4 singularity and exact determinants", 1.0);
    for (int n : {4, 8, 12}) {
        bool threw = false;
        try {
            blotto::ring::solve(blotto::ring::RingGame(n, std::vector<double>(n, 1.0), 0.5));
        } catch (const blotto::SingularSystem& e) {
            threw = true;
            gate.require(e.n_mod_4 == 0, "diagnostic lost n mod 4");
        }
        gate.require(threw, "n=" + std::to_string(n) + " did not raise SingularSystem");
    }
    for (int n = 3; n <= 12; ++n) {
        const long long det = blotto::oracle::ring_determinant(n);
        if (n % 4 == 0) {
            gate.require(det == 0, "determinant nonzero at n=" + std::to_string(n));
        } else {
            gate.require(det != 0, "determinant zero at n=" + std::to_string(n));
        }
    }
    gate.finish();
}

void criterion_3_indifference_certification() {
    Gate gate("criterion 3: dispersed ring profiles certify to 1e-9", 1.0);
    for (double epsilon : {0.0, 0.01, 0.02, 0.03}) {
        blotto::ring::RingGame game(11, blotto::ring::arithmetic_weights(11, epsilon), 0.5);
        const blotto::ring::RingEquilibrium eq = blotto::ring::solve(game);
        const blotto::GameSpec spec = blotto::ring::to_game_spec(game);
        const blotto::StrategyProfile profile = blotto::ring::to_profile(game, eq);
        for (int i = 0; i < 11; ++i) {
            const double gain = blotto::deviation_gain(spec, profile, i).gain;
            gate.require(gain <= 1e-9, "epsilon=" + std::to_string(epsilon) + " player " +
                                           std::to_string(i + 1) + " gain " +
                                           std::to_string(gain));
        }
    }
    gate.finish();
}

void criterion_4_dispersion_monotonicity() {
    Gate gate("criterion 4: average payoff non-increasing in dispersion", 1.0);
    std::vector<double> grid;
    for (int i = 0; i <= 10; ++i) grid.push_back(0.005 * i);
    const auto rows = blotto::ring::dispersion_sweep(11, grid, 0.5);
    for (std::size_t t = 1; t < rows.size(); ++t) {
        gate.require(rows[t].avg_payoff <= rows[t - 1].avg_payoff + 1e-12,
                     "avg rose between epsilon " + std::to_string(rows[t - 1].epsilon) + " and " +
                         std::to_string(rows[t].epsilon));
    }
    gate.finish();
}

void criterion_5_regular_closed_form() {
    Gate gate("criterion 5: regular closed form (identity + Monte Carlo survival)", 60.0);
    const int n = 50;
    // The root identity is exact and cheap: check every grid cell.
    for (int k : {2, 3, 5, 10}) {
        for (int vi = 1; vi <= 9; ++vi) {
            const double v = vi / 10.0;
            for (double r : {0.0, 0.5}) {
                const blotto::symmetric::SymmetricParams params(n, n, k, v, r);
                const double p_star = blotto::symmetric::regular_hunt_prob(params);
                if (p_star > 0.0 && p_star < 1.0) {
                    const double back = std::pow(1.0 - (1.0 - r) * p_star / k, k - 1);
                    gate.require(std::abs(back - v) <= 1e-12,
                                 "identity off at k=" + std::to_string(k) +
                                     " v=" + std::to_string(v) + " r=" + std::to_string(r));
                }
            }
        }
    }
    // Monte Carlo survival at the symmetric p* profile: costs picked so both
    // the saturated and interior branches appear for every degree and tie
    // factor within the runtime budget.
    blotto::sim::SimConfig config{.replications = 1000000, .seed = 1};
    for (int k : {2, 3, 5, 10}) {
        const blotto::GameSpec base(blotto::make_regular_network(n, n, k),
                                    std::vector<double>(n, 1.0), 0.0, 0.0);
        for (double v : {0.3, 0.6, 0.8}) {
            for (double r : {0.0, 0.5}) {
                const blotto::symmetric::SymmetricParams params(n, n, k, v, r);
                const double p_star = blotto::symmetric::regular_hunt_prob(params);
                const blotto::GameSpec spec(base.network, base.weights, r, v);
                const blotto::StrategyProfile profile = band_profile(spec, p_star);
                const blotto::sim::SimReport report =
                    blotto::sim::simulate(spec, profile, config);
                const double target = blotto::symmetric::regular_survival(params);
                const double gap = std::abs(report.survival_rate - target);
                gate.require(gap <= 3.0 * report.survival_stderr,
                             "survival off at k=" + std::to_string(k) + " v=" + std::to_string(v) +
                                 " r=" + std::to_string(r) + ": gap " + std::to_string(gap) +
                                 " vs 3se " + std::to_string(3.0 * report.survival_stderr));
            }
        }
    }
    gate.finish();
}

void criterion_6_random_closed_form() {
    Gate gate("criterion 6: random closed form, k-independence, large-n limit", 120.0);
    const int n = 100;
    const double v = 0.6, r = 0.0;
    const blotto::symmetric::SymmetricParams params(n, n, 1, v, r);
    const double p_star = blotto::symmetric::random_hunt_prob(params);
    const double target = blotto::symmetric::random_survival(params);
    blotto::sim::SimConfig config{.replications = 1000000, .seed = 77007};
    std::vector<blotto::sim::SimReport> reports;
    for (int k : {1, 3, 10}) {
        reports.push_back(blotto::sim::simulate_random_ensemble(n, n, k, v, r, p_star, config));
        const blotto::sim::SimReport& rep = reports.back();
        gate.require(std::abs(rep.survival_rate - target) <= 3.0 * rep.survival_stderr,
                     "k=" + std::to_string(k) + " survival gap " +
                         std::to_string(std::abs(rep.survival_rate - target)));
    }
    for (std::size_t a = 0; a < reports.size(); ++a) {
        for (std::size_t b = a + 1; b < reports.size(); ++b) {
            const double gap = std::abs(reports[a].survival_rate - reports[b].survival_rate);
            const double joint =
                std::sqrt(reports[a].survival_stderr * reports[a].survival_stderr +
                          reports[b].survival_stderr * reports[b].survival_stderr);
            gate.require(gap <= 3.0 * joint, "k pair " + std::to_string(a) + "," +
                                                 std::to_string(b) + " gap " + std::to_string(gap));
        }
    }
    const blotto::symmetric::SymmetricParams huge(100000, 100000, 3, 0.8, 0.0);
    const double p_large = blotto::symmetric::random_hunt_prob(huge);
    gate.require(std::abs(p_large - (-std::log(0.8))) <= 1e-3,
                 "limit gap " + std::to_string(std::abs(p_large + std::log(0.8))));
    gate.finish();
}

void criterion_7_topology_dominance() {
    Gate gate("criterion 7: regular access dominates random access", 5.0);
    for (int k : {2, 3, 5, 10}) {
        for (int vi = 1; vi <= 9; ++vi) {
            for (double r : {0.0, 0.5}) {
                for (int n : {20, 100, 1000}) {
                    const blotto::symmetric::SymmetricParams params(n, n, k, vi / 10.0, r);
                    const auto cmp = blotto::symmetric::compare_topologies(params);
                    gate.require(cmp.s_reg <= cmp.s_rnd + 1e-12,
                                 "survival order broken at k=" + std::to_string(k) +
                                     " v=" + std::to_string(vi / 10.0) + " n=" + std::to_string(n));
                    gate.require(cmp.w_reg >= cmp.w_rnd - 1e-12,
                                 "payoff order broken at k=" + std::to_string(k) +
                                     " v=" + std::to_string(vi / 10.0) + " n=" + std::to_string(n));
                }
            }
        }
    }
    gate.finish();
}

void criterion_8_oracle_equivalence() {
    Gate gate("criterion 8: factorized expectation equals enumeration on 100 specs", 10.0);
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<int> nd(1, 5);
    std::uniform_real_distribution<double> ud(0.0, 1.0);
    std::uniform_real_distribution<double> wd(0.1, 3.0);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = nd(rng);
        const int m = nd(rng);
        std::vector<std::uint8_t> adj(static_cast<std::size_t>(n) * m, 0);
        for (int i = 0; i < n; ++i) {
            bool any = false;
            for (int j = 0; j < m; ++j) {
                if (ud(rng) < 0.6) {
                    adj[static_cast<std::size_t>(i) * m + j] = 1;
                    any = true;
                }
            }
            if (!any) adj[static_cast<std::size_t>(i) * m + (trial % m)] = 1;
        }
        std::vector<double> weights(static_cast<std::size_t>(m));
        for (double& w : weights) w = wd(rng);
        const blotto::GameSpec spec(blotto::AccessibilityNetwork(n, m, adj), weights, ud(rng) * 0.9,
                                    ud(rng) * 0.5);
        blotto::StrategyProfile profile;
        for (int i = 0; i < n; ++i) {
            blotto::PlayerStrategy s;
            double total = 0.2 + ud(rng);
            s.abstain = total;
            for (int j : spec.network.accessible_fields(i)) {
                const double w = ud(rng);
                s.hunt.push_back({j, w});
                total += w;
            }
            s.abstain /= total;
            for (auto& fp : s.hunt) fp.probability /= total;
            profile.players.push_back(std::move(s));
        }
        for (int i = 0; i < n; ++i) {
            const double fast = blotto::expected_payoff(spec, profile, i);
            const double exact = blotto::oracle::brute_force_payoff(spec, profile, i);
            gate.require(std::abs(fast - exact) <= 1e-12,
                         "trial " + std::to_string(trial) + " player " + std::to_string(i + 1) +
                             " gap " + std::to_string(std::abs(fast - exact)));
        }
    }
    gate.finish();
}

void criterion_9_simulation_determinism() {
    Gate gate("criterion 9: simulate emits byte-identical JSON across thread counts", 30.0);
    const std::string spec_path = "acceptance_ring_spec.json";
    {
        blotto::ring::RingGame game(7, std::vector<double>(7, 1.0), 0.5);
        blotto::save_game_spec(blotto::ring::to_game_spec(game), spec_path);
    }
    int code_one = 0, code_two = 0, code_again = 0;
    const std::string base =
        "simulate --spec " + spec_path + " --use-solved --reps 400000 --seed 31415";
    const std::string one = run_command(base + " --threads 1", code_one);
    const std::string two = run_command(base + " --threads 2", code_two);
    const std::string again = run_command(base + " --threads 1", code_again);
    gate.require(code_one == 0 && code_two == 0 && code_again == 0, "simulate exited nonzero");
    gate.require(!one.empty(), "empty report");
    gate.require(one == two, "thread count changed the report bytes");
    gate.require(one == again, "repeat run changed the report bytes");
    std::remove(spec_path.c_str());
    gate.finish();
}

}  // namespace

int main() {
    criterion_1_ring_fixed_point();
    criterion_2_mod4_singularity();
    criterion_3_indifference_certification();
    criterion_4_dispersion_monotonicity();
    criterion_5_regular_closed_form();
    criterion_6_random_closed_form();
    criterion_7_topology_dominance();
    criterion_8_oracle_equivalence();
    criterion_9_simulation_determinism();
    if (failures == 0) {
        std::cout << "acceptance: all criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " criteria failed\n";
    return 1;
}
