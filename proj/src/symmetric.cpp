#include "blotto/symmetric.hpp"

#include <cmath>

namespace blotto::symmetric {

SymmetricParams::SymmetricParams(int n_players, int n_fields, int degree, double cost, double tie)
    : n(n_players), m(n_fields), k(degree), v(cost), r(tie) {
    if (n < 2) throw ParameterError("need at least two players");
    if (m < 1 || k < 1 || k > m) throw ParameterError("need 1 <= k <= m");
    if (!(v >= 0.0) || !std::isfinite(v)) throw ParameterError("hunting cost must be nonnegative");
    if (!(r >= 0.0 && r < 1.0)) throw ParameterError("tie factor must lie in [0, 1)");
}

double regular_threshold(int k, double r) {
    if (k < 1) throw ParameterError("access degree must be >= 1");
    return std::pow(1.0 - (1.0 - r) / k, k - 1);
}

double regular_hunt_prob(const SymmetricParams& params) {
    const double threshold = regular_threshold(params.k, params.r);
    if (params.v < threshold) return 1.0;
    if (params.k == 1) return 0.0;  // entry is worth 1 against no contention
    const double p =
        params.k * (1.0 - std::pow(params.v, 1.0 / (params.k - 1))) / (1.0 - params.r);
    return std::max(0.0, p);  // v > 1 drives the root negative; nobody hunts
}

double regular_survival(const SymmetricParams& params) {
    const double p = regular_hunt_prob(params);
    return std::pow(1.0 - p / params.k, params.k);
}

double random_threshold(int n, int m, double r) {
    if (n < 2 || m < 1) throw ParameterError("need n >= 2 and m >= 1");
    return std::pow(1.0 - (1.0 - r) / m, n - 1);
}

double random_hunt_prob(const SymmetricParams& params) {
    const double threshold = random_threshold(params.n, params.m, params.r);
    if (params.v < threshold) return 1.0;
    // expm1 keeps v^(1/(n-1)) - 1 accurate for large n.
    const double p =
        params.m * (-std::expm1(std::log(params.v) / (params.n - 1))) / (1.0 - params.r);
    if (p > 1.0) {
        if (p > 1.0 + 1e-9) {
            throw ParameterError("interior hunting probability exceeded 1 above threshold");
        }
        return 1.0;  // rounding at the threshold boundary
    }
    return std::max(0.0, p);
}

double random_survival(const SymmetricParams& params) {
    const double p = random_hunt_prob(params);
    return std::pow(1.0 - p / params.m, params.n);
}

HuntProbLimit hunt_prob_limit(double v, double r) {
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("cost must be positive");
    if (!(r >= 0.0 && r < 1.0)) throw DomainError("tie factor must lie in [0, 1)");
    HuntProbLimit limit;
    limit.value = -std::log(v) / (1.0 - r);
    limit.saturated = limit.value > 1.0;
    return limit;
}

double survival_growth(double x, double v, double r) {
    if (!(x > 1.0)) throw DomainError("x must exceed 1");
    if (!(v > 0.0 && v <= 1.0)) throw DomainError("cost must lie in (0, 1]");
    if (!(r >= 0.0 && r < 1.0)) throw DomainError("tie factor must lie in [0, 1)");
    const double contest = -std::expm1(std::log(v) / (x - 1.0)) / (1.0 - r);
    return std::pow(1.0 - contest, x);
}

double expected_net_payoff(Topology topology, const SymmetricParams& params) {
    const double threshold = topology == Topology::Regular
                                 ? regular_threshold(params.k, params.r)
                                 : random_threshold(params.n, params.m, params.r);
    return std::max(0.0, threshold - params.v);
}

std::string to_string(ComparisonCase c) {
    switch (c) {
        case ComparisonCase::BothSaturated: return "BothSaturated";
        case ComparisonCase::Mixed: return "Mixed";
        case ComparisonCase::BothInterior: return "BothInterior";
    }
    return "?";
}

TopologyComparison compare_topologies(const SymmetricParams& params) {
    if (params.m != params.n) {
        throw ParameterError("comparison requires m = n");
    }
    if (params.k < 2 || params.k >= params.n) {
        throw ParameterError("comparison requires 2 <= k < n; at k >= n the topologies coincide");
    }
    const double a_reg = regular_threshold(params.k, params.r);
    const double a_rnd = random_threshold(params.n, params.m, params.r);

    TopologyComparison cmp;
    cmp.s_reg = regular_survival(params);
    cmp.s_rnd = random_survival(params);
    cmp.w_reg = expected_net_payoff(Topology::Regular, params);
    cmp.w_rnd = expected_net_payoff(Topology::Random, params);
    if (params.v < a_rnd) {
        cmp.case_label = ComparisonCase::BothSaturated;
    } else if (params.v < a_reg) {
        cmp.case_label = ComparisonCase::Mixed;
    } else {
        cmp.case_label = ComparisonCase::BothInterior;
    }
    return cmp;
}

}  // namespace blotto::symmetric
