#pragma once

#include <string>

#include "blotto/errors.hpp"

namespace blotto::symmetric {

// Equal-weight game with hunting cost v (in field-value units): n players,
// m fields, each player reaching k of them.
struct SymmetricParams {
    int n = 2;
    int m = 1;
    int k = 1;
    double v = 0.0;
    double r = 0.0;

    SymmetricParams(int n_players, int n_fields, int degree, double cost, double tie);
};

enum class Topology { Regular, Random };

// Participation payoff of an all-in (p = 1) population on the k-regular
// band: (1 - 1/k + r/k)^(k-1). Below this cost everyone hunts outright.
double regular_threshold(int k, double r);

// Equilibrium hunting probability on the regular topology: 1 below the
// threshold, else the root of (1 - (1-r)p/k)^(k-1) = v.
double regular_hunt_prob(const SymmetricParams& params);

// Probability a given field sees no entrant: (1 - p*/k)^k.
double regular_survival(const SymmetricParams& params);

// Random-topology participation threshold (1 - 1/m + r/m)^(n-1); the access
// degree k drops out entirely.
double random_threshold(int n, int m, double r);

// Equilibrium hunting probability with per-player random k-subsets: 1 below
// the threshold, else m(1 - v^(1/(n-1)))/(1-r). Independent of k.
double random_hunt_prob(const SymmetricParams& params);

// Probability a given field sees no entrant: (1 - p*/m)^n.
double random_survival(const SymmetricParams& params);

struct HuntProbLimit {
    double value = 0.0;    // -ln(v)/(1-r)
    bool saturated = false;  // limit exceeds 1: interior branch inactive at large n
};

// Large-n limit of the random-topology hunting probability when m = n.
HuntProbLimit hunt_prob_limit(double v, double r);

// Interior-branch survival as a function of the effective contention size x:
// f(x) = (1 - (1 - v^(1/(x-1)))/(1-r))^x. Increasing in x (tested, not
// assumed).
double survival_growth(double x, double v, double r);

// Expected per-player net payoff at equilibrium: threshold - v when
// saturated, 0 on the interior branch. Random topology evaluated at m = n.
double expected_net_payoff(Topology topology, const SymmetricParams& params);

enum class ComparisonCase { BothSaturated, Mixed, BothInterior };

struct TopologyComparison {
    double s_reg = 0.0;
    double s_rnd = 0.0;
    double w_reg = 0.0;
    double w_rnd = 0.0;
    ComparisonCase case_label = ComparisonCase::BothSaturated;
};

std::string to_string(ComparisonCase c);

// Side-by-side survival and net payoff for regular vs random access at the
// same (n = m, k, v, r). Requires 2 <= k < n.
TopologyComparison compare_topologies(const SymmetricParams& params);

}  // namespace blotto::symmetric
