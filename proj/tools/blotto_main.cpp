// Command-line front end: ring equilibria, parameter sweeps, closed-form
// symmetric solutions, Monte Carlo simulation, and equilibrium certification.
//
// Exit codes: 0 success, 1 bad flags or unreadable input, 2 singular
// indifference system, 3 certification failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "blotto/model.hpp"
#include "blotto/oracle.hpp"
#include "blotto/ring.hpp"
#include "blotto/serialize.hpp"
#include "blotto/simulate.hpp"
#include "blotto/symmetric.hpp"

namespace {

using nlohmann::json;

std::string full(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw blotto::ParameterError("cannot write " + path);
    return out;
}

blotto::ring::RingGame ring_from_flags(int n, const std::vector<double>& weights, double epsilon,
                                       bool have_weights, bool have_epsilon, double r) {
    if (have_weights == have_epsilon) {
        throw blotto::ParameterError("give exactly one of --weights or --epsilon");
    }
    if (have_weights) return blotto::ring::RingGame(n, weights, r);
    return blotto::ring::RingGame(n, blotto::ring::arithmetic_weights(n, epsilon), r);
}

// The solver applies only to the cyclic two-field layout; recognize it.
blotto::ring::RingGame ring_from_spec(const blotto::GameSpec& spec) {
    const int n = spec.players();
    if (spec.fields() != n || n < 3) {
        throw blotto::ParameterError("--use-solved needs the cyclic spec: n = m >= 3");
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const bool expected = j == i || j == (i + 1) % n;
            if (spec.network.accessible(i, j) != expected) {
                throw blotto::ParameterError(
                    "--use-solved needs each player on fields i and i+1 (mod n)");
            }
        }
    }
    return blotto::ring::RingGame(n, spec.weights, spec.tie_factor);
}

json ring_solution_json(const blotto::ring::RingGame& game, const blotto::ring::RingEquilibrium& eq) {
    const std::vector<double> payoffs = blotto::ring::solution_payoffs(game, eq);
    double total = 0.0;
    for (double payoff : payoffs) total += payoff;
    json doc;
    doc["n"] = game.n;
    doc["r"] = game.tie_factor;
    doc["weights"] = game.weights;
    doc["p"] = eq.p;
    doc["residual"] = eq.residual;
    doc["interior"] = eq.interior;
    doc["payoffs"] = payoffs;
    doc["avg_payoff"] = total / game.n;
    doc["survival_rate"] = blotto::ring::mean_survival(eq);
    return doc;
}

void write_dispersion_csv(std::ostream& out, const std::vector<blotto::ring::SweepRow>& rows,
                          int n) {
    out << "epsilon,avg_payoff,survival_rate";
    for (int i = 1; i <= n; ++i) out << ",p_" << i;
    for (int i = 1; i <= n; ++i) out << ",payoff_" << i;
    out << "\n";
    for (const blotto::ring::SweepRow& row : rows) {
        out << full(row.epsilon) << ',' << full(row.avg_payoff) << ',' << full(row.survival_rate);
        for (double p : row.p) out << ',' << full(p);
        for (double payoff : row.payoffs) out << ',' << full(payoff);
        out << "\n";
    }
}

struct RingSolveArgs {
    int n = 0;
    std::vector<double> weights;
    double epsilon = 0.0;
    double r = 0.5;
};

struct SweepArgs {
    std::string mode = "dispersion";
    int n = 0;
    double epsilon_max = 0.0;
    int steps = 0;
    double r = 0.5;
    double v = 0.0;
    int k = 2;
    int x_max = 100;
    std::string out;
};

struct SymmetricArgs {
    std::string topology;
    int k = 0;
    int n = 0;
    int m = 0;
    double v = 0.0;
    double r = 0.0;
};

struct SimulateArgs {
    std::string spec_path;
    std::string profile_path;
    bool use_solved = false;
    long long reps = 0;
    std::uint64_t seed = 0;
    int threads = 0;
    double tolerance = 1e-9;
    std::string out;
};

struct MakeSpecArgs {
    std::string topology;
    int n = 0;
    int m = 0;
    int k = 2;
    std::vector<double> weights;
    double epsilon = 0.0;
    bool have_epsilon = false;
    double r = 0.5;
    double v = 0.0;
    std::uint64_t seed = 0;
    std::string out;
};

struct MakeProfileArgs {
    std::string spec_path;
    std::string mode;
    double hunt_prob = 1.0;
    std::string out;
};

int run_ring_solve(const RingSolveArgs& args, bool have_weights, bool have_epsilon) {
    blotto::ring::RingGame game =
        ring_from_flags(args.n, args.weights, args.epsilon, have_weights, have_epsilon, args.r);
    const blotto::ring::RingEquilibrium eq = blotto::ring::solve(game);
    std::cout << ring_solution_json(game, eq).dump(2) << "\n";
    return 0;
}

int run_sweep(const SweepArgs& args) {
    if (args.mode == "dispersion") {
        if (args.n < 3 || args.steps < 1) {
            throw blotto::ParameterError("dispersion sweep needs --n >= 3 and --steps >= 1");
        }
        std::vector<double> grid;
        if (args.steps == 1) {
            grid.push_back(args.epsilon_max);
        } else {
            for (int i = 0; i < args.steps; ++i) {
                grid.push_back(args.epsilon_max * i / (args.steps - 1));
            }
        }
        const auto rows = blotto::ring::dispersion_sweep(args.n, grid, args.r);
        std::ofstream out = open_output(args.out);
        write_dispersion_csv(out, rows, args.n);
        return 0;
    }
    if (args.mode == "survival-curve") {
        if (args.x_max < 2) throw blotto::ParameterError("survival curve needs --x-max >= 2");
        std::ofstream out = open_output(args.out);
        out << "x,f_x\n";
        for (int x = 2; x <= args.x_max; ++x) {
            out << x << ',' << full(blotto::symmetric::survival_growth(x, args.v, args.r)) << "\n";
        }
        return 0;
    }
    if (args.mode == "compare") {
        if (args.n < 3 || args.k < 2) {
            throw blotto::ParameterError("compare sweep needs --n >= 3 and --k >= 2");
        }
        std::ofstream out = open_output(args.out);
        out << "v,r,k,n,case,s_reg,s_rnd,w_reg,w_rnd\n";
        for (int step = 1; step <= 19; ++step) {
            const double v = 0.05 * step;
            const blotto::symmetric::SymmetricParams params(args.n, args.n, args.k, v, args.r);
            const auto cmp = blotto::symmetric::compare_topologies(params);
            out << full(v) << ',' << full(args.r) << ',' << args.k << ',' << args.n << ','
                << blotto::symmetric::to_string(cmp.case_label) << ',' << full(cmp.s_reg) << ','
                << full(cmp.s_rnd) << ',' << full(cmp.w_reg) << ',' << full(cmp.w_rnd) << "\n";
        }
        return 0;
    }
    throw blotto::ParameterError("unknown sweep mode: " + args.mode);
}

int run_symmetric(const SymmetricArgs& args) {
    json doc;
    if (args.topology == "regular") {
        if (args.k < 1) throw blotto::ParameterError("regular topology needs --k >= 1");
        const int n = args.n > 0 ? args.n : 2;
        const int m = args.m > 0 ? args.m : std::max(args.k, n);
        const blotto::symmetric::SymmetricParams params(n, m, args.k, args.v, args.r);
        doc["topology"] = "regular";
        doc["k"] = args.k;
        doc["v"] = args.v;
        doc["r"] = args.r;
        doc["threshold"] = blotto::symmetric::regular_threshold(args.k, args.r);
        doc["p_star"] = blotto::symmetric::regular_hunt_prob(params);
        doc["survival"] = blotto::symmetric::regular_survival(params);
        doc["net_payoff"] =
            blotto::symmetric::expected_net_payoff(blotto::symmetric::Topology::Regular, params);
    } else if (args.topology == "random") {
        if (args.n < 2) throw blotto::ParameterError("random topology needs --n >= 2");
        const int m = args.m > 0 ? args.m : args.n;
        // k never enters the random-topology formulas; accept and ignore it.
        const int k = args.k > 0 ? std::min(args.k, m) : 1;
        const blotto::symmetric::SymmetricParams params(args.n, m, k, args.v, args.r);
        doc["topology"] = "random";
        doc["n"] = args.n;
        doc["m"] = m;
        doc["v"] = args.v;
        doc["r"] = args.r;
        doc["threshold"] = blotto::symmetric::random_threshold(args.n, m, args.r);
        doc["p_star"] = blotto::symmetric::random_hunt_prob(params);
        doc["survival"] = blotto::symmetric::random_survival(params);
        doc["net_payoff"] =
            blotto::symmetric::expected_net_payoff(blotto::symmetric::Topology::Random, params);
    } else if (args.topology == "compare") {
        if (args.n < 3 || args.k < 2) {
            throw blotto::ParameterError("compare needs --n >= 3 and --k >= 2");
        }
        if (args.m > 0 && args.m != args.n) {
            throw blotto::ParameterError("compare requires m = n");
        }
        const blotto::symmetric::SymmetricParams params(args.n, args.n, args.k, args.v, args.r);
        const auto cmp = blotto::symmetric::compare_topologies(params);
        doc["topology"] = "compare";
        doc["k"] = args.k;
        doc["n"] = args.n;
        doc["v"] = args.v;
        doc["r"] = args.r;
        doc["case"] = blotto::symmetric::to_string(cmp.case_label);
        doc["s_reg"] = cmp.s_reg;
        doc["s_rnd"] = cmp.s_rnd;
        doc["w_reg"] = cmp.w_reg;
        doc["w_rnd"] = cmp.w_rnd;
    } else {
        throw blotto::ParameterError("unknown topology: " + args.topology);
    }
    std::cout << doc.dump(2) << "\n";
    return 0;
}

blotto::StrategyProfile profile_for(const blotto::GameSpec& spec, const SimulateArgs& args) {
    if (args.use_solved == !args.profile_path.empty()) {
        throw blotto::ParameterError("give exactly one of --profile or --use-solved");
    }
    if (args.use_solved) {
        const blotto::ring::RingGame game = ring_from_spec(spec);
        return blotto::ring::to_profile(game, blotto::ring::solve(game));
    }
    return blotto::load_profile(args.profile_path);
}

int run_simulate(const SimulateArgs& args) {
    const blotto::GameSpec spec = blotto::load_game_spec(args.spec_path);
    const blotto::StrategyProfile profile = profile_for(spec, args);
    blotto::sim::SimConfig config;
    config.replications = args.reps;
    config.seed = args.seed;
    const blotto::sim::SimReport report =
        blotto::sim::simulate(spec, profile, config, args.threads);
    const std::string text = blotto::write_sim_report(report);
    if (args.out.empty()) {
        std::cout << text;
    } else {
        open_output(args.out) << text;
    }
    return 0;
}

int run_certify(const SimulateArgs& args) {
    const blotto::GameSpec spec = blotto::load_game_spec(args.spec_path);
    const blotto::StrategyProfile profile = profile_for(spec, args);
    const blotto::sim::CertificationReport report =
        blotto::sim::verify_equilibrium(spec, profile, args.tolerance);
    std::cout << blotto::write_certification(report);
    return report.equilibrium ? 0 : 3;
}

int run_make_spec(const MakeSpecArgs& args, bool have_weights) {
    blotto::GameSpec spec = [&]() -> blotto::GameSpec {
        if (args.topology == "ring") {
            const blotto::ring::RingGame game =
                ring_from_flags(args.n, args.weights, args.epsilon, have_weights,
                                args.have_epsilon, args.r);
            blotto::GameSpec ring_spec = blotto::ring::to_game_spec(game);
            return blotto::GameSpec(ring_spec.network, ring_spec.weights, args.r, args.v);
        }
        const int m = args.m > 0 ? args.m : args.n;
        std::vector<double> weights =
            have_weights ? args.weights : std::vector<double>(static_cast<std::size_t>(m), 1.0);
        if (args.topology == "regular") {
            return blotto::GameSpec(blotto::make_regular_network(args.n, m, args.k), weights,
                                    args.r, args.v);
        }
        if (args.topology == "random") {
            return blotto::GameSpec(blotto::make_random_network(args.n, m, args.k, args.seed),
                                    weights, args.r, args.v);
        }
        throw blotto::ParameterError("unknown topology: " + args.topology);
    }();
    const std::string text = blotto::write_game_spec(spec);
    if (args.out.empty()) {
        std::cout << text;
    } else {
        open_output(args.out) << text;
    }
    return 0;
}

int run_make_profile(const MakeProfileArgs& args) {
    const blotto::GameSpec spec = blotto::load_game_spec(args.spec_path);
    blotto::StrategyProfile profile;
    if (args.mode == "solved-ring") {
        const blotto::ring::RingGame game = ring_from_spec(spec);
        profile = blotto::ring::to_profile(game, blotto::ring::solve(game));
    } else if (args.mode == "symmetric") {
        if (!(args.hunt_prob >= 0.0 && args.hunt_prob <= 1.0)) {
            throw blotto::ParameterError("--hunt-prob must lie in [0, 1]");
        }
        profile.players.resize(static_cast<std::size_t>(spec.players()));
        for (int i = 0; i < spec.players(); ++i) {
            const std::vector<int> fields = spec.network.accessible_fields(i);
            blotto::PlayerStrategy& s = profile.players[i];
            s.abstain = 1.0 - args.hunt_prob;
            for (int j : fields) {
                s.hunt.push_back({j, args.hunt_prob / static_cast<double>(fields.size())});
            }
        }
    } else {
        throw blotto::ParameterError("unknown profile mode: " + args.mode);
    }
    const std::string text = blotto::write_profile(profile);
    if (args.out.empty()) {
        std::cout << text;
    } else {
        open_output(args.out) << text;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Boolean field-contest toolkit: solvers, sweeps, simulation, certification"};
    app.require_subcommand(1);

    RingSolveArgs ring_args;
    CLI::App* ring_cmd = app.add_subcommand("ring-solve", "Solve the cyclic two-field game");
    ring_cmd->add_option("--n", ring_args.n, "players (= fields)")->required();
    CLI::Option* ring_weights =
        ring_cmd->add_option("--weights", ring_args.weights, "field weights")->delimiter(',');
    CLI::Option* ring_eps = ring_cmd->add_option(
        "--epsilon", ring_args.epsilon, "arithmetic weight spread (field ceil(n/2) has weight 1)");
    ring_cmd->add_option("--r", ring_args.r, "tie factor")->capture_default_str();

    SweepArgs sweep_args;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "Write a parameter sweep as CSV");
    sweep_cmd->add_option("--mode", sweep_args.mode, "dispersion | survival-curve | compare")
        ->capture_default_str();
    sweep_cmd->add_option("--n", sweep_args.n, "players");
    sweep_cmd->add_option("--epsilon-max", sweep_args.epsilon_max, "largest weight spread");
    sweep_cmd->add_option("--steps", sweep_args.steps, "number of sweep rows");
    sweep_cmd->add_option("--r", sweep_args.r, "tie factor")->capture_default_str();
    sweep_cmd->add_option("--v", sweep_args.v, "hunting cost");
    sweep_cmd->add_option("--k", sweep_args.k, "access degree (compare mode)");
    sweep_cmd->add_option("--x-max", sweep_args.x_max, "largest x (survival-curve mode)");
    sweep_cmd->add_option("--out", sweep_args.out, "output CSV path")->required();

    SymmetricArgs sym_args;
    CLI::App* sym_cmd = app.add_subcommand("symmetric", "Closed-form equal-weight solutions");
    sym_cmd->add_option("--topology", sym_args.topology, "regular | random | compare")->required();
    sym_cmd->add_option("--k", sym_args.k, "access degree");
    sym_cmd->add_option("--n", sym_args.n, "players");
    sym_cmd->add_option("--m", sym_args.m, "fields (default n)");
    sym_cmd->add_option("--v", sym_args.v, "hunting cost")->required();
    sym_cmd->add_option("--r", sym_args.r, "tie factor")->capture_default_str();

    SimulateArgs sim_args;
    CLI::App* sim_cmd = app.add_subcommand("simulate", "Monte Carlo estimate for a spec + profile");
    sim_cmd->add_option("--spec", sim_args.spec_path, "game spec JSON")->required();
    sim_cmd->add_option("--profile", sim_args.profile_path, "strategy profile JSON");
    sim_cmd->add_flag("--use-solved", sim_args.use_solved, "solve the cyclic spec for the profile");
    sim_cmd->add_option("--reps", sim_args.reps, "replications")->required();
    sim_cmd->add_option("--seed", sim_args.seed, "RNG seed")->capture_default_str();
    sim_cmd->add_option("--threads", sim_args.threads, "worker threads (0 = hardware)")
        ->capture_default_str();
    sim_cmd->add_option("--out", sim_args.out, "write the report here instead of stdout");

    SimulateArgs certify_args;
    CLI::App* certify_cmd = app.add_subcommand("certify", "Exact per-player deviation gains");
    certify_cmd->add_option("--spec", certify_args.spec_path, "game spec JSON")->required();
    certify_cmd->add_option("--profile", certify_args.profile_path, "strategy profile JSON");
    certify_cmd->add_flag("--use-solved", certify_args.use_solved,
                          "solve the cyclic spec for the profile");
    certify_cmd->add_option("--tolerance", certify_args.tolerance, "gain tolerance")
        ->capture_default_str();

    MakeSpecArgs spec_args;
    CLI::App* make_spec_cmd = app.add_subcommand("make-spec", "Write a game spec JSON");
    make_spec_cmd->add_option("--topology", spec_args.topology, "ring | regular | random")
        ->required();
    make_spec_cmd->add_option("--n", spec_args.n, "players")->required();
    make_spec_cmd->add_option("--m", spec_args.m, "fields (default n)");
    make_spec_cmd->add_option("--k", spec_args.k, "access degree")->capture_default_str();
    CLI::Option* spec_weights =
        make_spec_cmd->add_option("--weights", spec_args.weights, "field weights")->delimiter(',');
    CLI::Option* spec_eps =
        make_spec_cmd->add_option("--epsilon", spec_args.epsilon, "arithmetic weight spread");
    make_spec_cmd->add_option("--r", spec_args.r, "tie factor")->capture_default_str();
    make_spec_cmd->add_option("--v", spec_args.v, "hunting cost")->capture_default_str();
    make_spec_cmd->add_option("--seed", spec_args.seed, "seed (random topology)");
    make_spec_cmd->add_option("--out", spec_args.out, "output path (default stdout)");

    MakeProfileArgs profile_args;
    CLI::App* make_profile_cmd = app.add_subcommand("make-profile", "Write a profile JSON");
    make_profile_cmd->add_option("--spec", profile_args.spec_path, "game spec JSON")->required();
    make_profile_cmd->add_option("--mode", profile_args.mode, "solved-ring | symmetric")
        ->required();
    make_profile_cmd->add_option("--hunt-prob", profile_args.hunt_prob,
                                 "total hunting probability (symmetric mode)");
    make_profile_cmd->add_option("--out", profile_args.out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (ring_cmd->parsed()) {
            return run_ring_solve(ring_args, ring_weights->count() > 0, ring_eps->count() > 0);
        }
        if (sweep_cmd->parsed()) return run_sweep(sweep_args);
        if (sym_cmd->parsed()) return run_symmetric(sym_args);
        if (sim_cmd->parsed()) return run_simulate(sim_args);
        if (certify_cmd->parsed()) return run_certify(certify_args);
        if (make_spec_cmd->parsed()) {
            spec_args.have_epsilon = spec_eps->count() > 0;
            return run_make_spec(spec_args, spec_weights->count() > 0);
        }
        if (make_profile_cmd->parsed()) return run_make_profile(profile_args);
    } catch (const blotto::SingularSystem& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const blotto::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
