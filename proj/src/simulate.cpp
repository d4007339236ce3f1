#include "blotto/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

#include "blotto/rng.hpp"

namespace blotto::sim {

namespace {

constexpr long long kBlockSize = 16384;

// Streaming mean/variance over one block. Tracks whether every observation
// was the same value so deterministic inputs report exactly zero spread.
struct MomentAccumulator {
    long long count = 0;
    double sum = 0.0;
    double sumsq = 0.0;
    bool uniform = true;
    double uniform_value = 0.0;

    void add(double x) {
        if (count == 0) {
            uniform_value = x;
        } else if (x != uniform_value) {
            uniform = false;
        }
        ++count;
        sum += x;
        sumsq += x * x;
    }

    void merge(const MomentAccumulator& other) {
        if (other.count == 0) return;
        if (count == 0) {
            *this = other;
            return;
        }
        if (!other.uniform || other.uniform_value != uniform_value) uniform = false;
        count += other.count;
        sum += other.sum;
        sumsq += other.sumsq;
    }

    double mean() const {
        if (count == 0) return 0.0;
        return uniform ? uniform_value : sum / static_cast<double>(count);
    }

    double std_error() const {
        if (uniform || count < 2) return 0.0;
        const double n = static_cast<double>(count);
        const double variance = std::max(0.0, (sumsq - sum * sum / n) / (n - 1.0));
        return std::sqrt(variance / n);
    }
};

struct BlockStats {
    std::vector<MomentAccumulator> payoff;  // one per player
    MomentAccumulator survival;             // per-replication empty-field fraction
};

// Per-player inverse-CDF sampler. Hunt entries first; the tail (whatever
// normalization slack remains) is abstention unless the player never
// abstains, in which case it falls back to the last hunted field.
struct ActionSampler {
    std::vector<double> cumulative;
    std::vector<int> fields;
    bool can_abstain = true;

    int sample(CounterRng& rng) const {  // returns field index, -1 = abstain
        const double u = rng.next_unit();
        for (std::size_t t = 0; t < cumulative.size(); ++t) {
            if (u < cumulative[t]) return fields[t];
        }
        if (can_abstain || fields.empty()) return -1;
        return fields.back();
    }
};

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs `body(block_first, block_last, stats)` over the replication range in
// fixed-size blocks; blocks are merged in index order afterwards, so the
// totals never depend on the thread schedule.
template <typename Body>
SimReport run_blocks(int n_players, const SimConfig& config, int threads, Body body) {
    const long long reps = config.replications;
    const long long n_blocks = (reps + kBlockSize - 1) / kBlockSize;
    std::vector<BlockStats> blocks(static_cast<std::size_t>(n_blocks));
    for (BlockStats& b : blocks) b.payoff.resize(static_cast<std::size_t>(n_players));

    const int workers = std::min<long long>(resolve_threads(threads), n_blocks);
    std::atomic<long long> next_block{0};
    auto worker = [&]() {
        while (true) {
            const long long b = next_block.fetch_add(1);
            if (b >= n_blocks) break;
            const long long first = b * kBlockSize;
            const long long last = std::min(reps, first + kBlockSize);
            body(first, last, blocks[static_cast<std::size_t>(b)]);
        }
    };
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    BlockStats total;
    total.payoff.resize(static_cast<std::size_t>(n_players));
    for (const BlockStats& b : blocks) {
        for (int i = 0; i < n_players; ++i) total.payoff[i].merge(b.payoff[i]);
        total.survival.merge(b.survival);
    }

    SimReport report;
    report.replications = reps;
    report.seed = config.seed;
    report.mean_payoffs.resize(static_cast<std::size_t>(n_players));
    report.payoff_stderr.resize(static_cast<std::size_t>(n_players));
    for (int i = 0; i < n_players; ++i) {
        report.mean_payoffs[i] = total.payoff[i].mean();
        report.payoff_stderr[i] = total.payoff[i].std_error();
    }
    report.survival_rate = total.survival.mean();
    report.survival_stderr = total.survival.std_error();
    return report;
}

}  // namespace

SimReport simulate(const GameSpec& spec, const StrategyProfile& profile, const SimConfig& config,
                   int threads) {
    validate_profile(spec, profile);
    if (config.replications < 1) throw ParameterError("need at least one replication");

    const int n = spec.players();
    const int m = spec.fields();

    std::vector<ActionSampler> samplers(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const PlayerStrategy& s = profile.players[i];
        double cum = 0.0;
        for (const FieldProbability& fp : s.hunt) {
            if (fp.probability == 0.0) continue;
            cum += fp.probability;
            samplers[i].cumulative.push_back(cum);
            samplers[i].fields.push_back(fp.field);
        }
        samplers[i].can_abstain = s.abstain > 0.0 || samplers[i].fields.empty();
    }

    // r^t by tie count; exact at t=0 even when r=0.
    std::vector<double> tie_power(static_cast<std::size_t>(n), 1.0);
    for (int t = 1; t < n; ++t) tie_power[t] = tie_power[t - 1] * spec.tie_factor;

    return run_blocks(n, config, threads, [&](long long first, long long last, BlockStats& out) {
        std::vector<int> chosen(static_cast<std::size_t>(n));
        std::vector<int> entrants(static_cast<std::size_t>(m), 0);
        for (long long rep = first; rep < last; ++rep) {
            CounterRng rng(config.seed, static_cast<std::uint64_t>(rep));
            int entered_fields = 0;
            for (int i = 0; i < n; ++i) {
                const int j = samplers[i].sample(rng);
                chosen[i] = j;
                if (j >= 0 && entrants[j]++ == 0) ++entered_fields;
            }
            for (int i = 0; i < n; ++i) {
                const int j = chosen[i];
                const double pay =
                    j < 0 ? 0.0
                          : spec.weights[j] * tie_power[entrants[j] - 1] - spec.hunting_cost;
                out.payoff[i].add(pay);
            }
            out.survival.add(static_cast<double>(m - entered_fields) / m);
            for (int i = 0; i < n; ++i) {
                if (chosen[i] >= 0) entrants[chosen[i]] = 0;
            }
        }
    });
}

SimReport simulate_random_ensemble(int n, int m, int k, double v, double r, double hunt_prob,
                                   const SimConfig& config, int threads) {
    if (n < 1 || m < 1 || k < 1 || k > m) {
        throw InvalidDimensions("ensemble requires n,m >= 1 and 1 <= k <= m");
    }
    if (!(hunt_prob >= 0.0 && hunt_prob <= 1.0)) {
        throw ParameterError("hunting probability must lie in [0, 1]");
    }
    if (!(r >= 0.0 && r < 1.0)) throw ParameterError("tie factor must lie in [0, 1)");
    if (config.replications < 1) throw ParameterError("need at least one replication");

    std::vector<double> tie_power(static_cast<std::size_t>(n), 1.0);
    for (int t = 1; t < n; ++t) tie_power[t] = tie_power[t - 1] * r;

    return run_blocks(n, config, threads, [&](long long first, long long last, BlockStats& out) {
        std::vector<int> pool(static_cast<std::size_t>(m));
        std::iota(pool.begin(), pool.end(), 0);
        std::vector<int> swaps(static_cast<std::size_t>(k));
        std::vector<int> chosen(static_cast<std::size_t>(n));
        std::vector<int> entrants(static_cast<std::size_t>(m), 0);
        for (long long rep = first; rep < last; ++rep) {
            // A fixed topology replays replication 0's access draws.
            const std::uint64_t draw = config.topology_resample ? static_cast<std::uint64_t>(rep) : 0;
            CounterRng topology_rng(mix64(config.seed) ^ 0x746f706fULL, draw);
            CounterRng play_rng(config.seed, static_cast<std::uint64_t>(rep));
            int entered_fields = 0;
            for (int i = 0; i < n; ++i) {
                // Draw the k-subset first so the stream layout is fixed.
                for (int t = 0; t < k; ++t) {
                    const int pick =
                        t + static_cast<int>(topology_rng.next_below(static_cast<std::uint32_t>(m - t)));
                    swaps[t] = pick;
                    std::swap(pool[t], pool[pick]);
                }
                int j = -1;
                if (play_rng.next_unit() < hunt_prob) {
                    j = pool[play_rng.next_below(static_cast<std::uint32_t>(k))];
                }
                for (int t = k - 1; t >= 0; --t) std::swap(pool[t], pool[swaps[t]]);
                chosen[i] = j;
                if (j >= 0 && entrants[j]++ == 0) ++entered_fields;
            }
            for (int i = 0; i < n; ++i) {
                const int j = chosen[i];
                out.payoff[i].add(j < 0 ? 0.0 : tie_power[entrants[j] - 1] - v);
            }
            out.survival.add(static_cast<double>(m - entered_fields) / m);
            for (int i = 0; i < n; ++i) {
                if (chosen[i] >= 0) entrants[chosen[i]] = 0;
            }
        }
    });
}

CertificationReport verify_equilibrium(const GameSpec& spec, const StrategyProfile& profile,
                                       double tolerance) {
    validate_profile(spec, profile);
    CertificationReport report;
    report.tolerance = tolerance;
    report.players.resize(static_cast<std::size_t>(spec.players()));
    report.max_gain = 0.0;
    for (int i = 0; i < spec.players(); ++i) {
        const BestResponse br = deviation_gain(spec, profile, i);
        report.players[i].gain = br.gain;
        report.players[i].best_action = br.action;
        report.max_gain = std::max(report.max_gain, br.gain);
    }
    report.equilibrium = report.max_gain <= tolerance;
    return report;
}

}  // namespace blotto::sim
