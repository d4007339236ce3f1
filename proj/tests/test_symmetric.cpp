#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "blotto/symmetric.hpp"

using namespace blotto;
using namespace blotto::symmetric;

namespace {

SymmetricParams params_for(int n, int m, int k, double v, double r) {
    return SymmetricParams(n, m, k, v, r);
}

constexpr double kVGrid[] = {0.05, 0.10, 0.15, 0.20, 0.25, 0.30, 0.35, 0.40, 0.45, 0.50,
                             0.55, 0.60, 0.65, 0.70, 0.75, 0.80, 0.85, 0.90, 0.95};
constexpr double kRGrid[] = {0.0, 0.25, 0.5, 0.9};
constexpr int kKGrid[] = {2, 3, 5, 10};
constexpr int kNGrid[] = {20, 100, 1000};

}  // namespace

TEST_CASE("regular threshold: degree one, the half at k=2, and (5/6)^2") {
    CHECK(regular_threshold(1, 0.0) == 1.0);
    CHECK(regular_threshold(1, 0.7) == 1.0);
    CHECK(regular_threshold(2, 0.0) == 0.5);
    CHECK(regular_threshold(3, 0.5) == doctest::Approx(25.0 / 36.0).epsilon(1e-15));
    CHECK_THROWS_AS(regular_threshold(0, 0.0), ParameterError);
}

TEST_CASE("regular hunting probability: saturated, interior, and priced-out branches") {
    CHECK(regular_hunt_prob(params_for(2, 2, 2, 0.25, 0.0)) == 1.0);
    const double p = regular_hunt_prob(params_for(2, 2, 2, 0.6, 0.0));
    CHECK(p == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(std::abs((1.0 - 0.5 * p) - 0.6) <= 1e-15);  // indifference at the root
    CHECK(regular_hunt_prob(params_for(2, 2, 2, 1.0, 0.0)) == 0.0);
    CHECK(regular_hunt_prob(params_for(2, 2, 1, 0.99, 0.0)) == 1.0);
    CHECK(regular_hunt_prob(params_for(2, 2, 1, 1.0, 0.0)) == 0.0);
}

TEST_CASE("regular survival: saturated quarter, interior square, k=1 certainty") {
    CHECK(regular_survival(params_for(2, 2, 2, 0.05, 0.0)) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(regular_survival(params_for(2, 2, 2, 0.6, 0.0)) == doctest::Approx(0.36).epsilon(1e-14));
    CHECK(regular_survival(params_for(2, 2, 1, 0.5, 0.0)) == 0.0);
}

TEST_CASE("random threshold: single field, two players, and the e^-1 limit") {
    for (int n : {2, 3, 7}) {
        CHECK(random_threshold(n, 1, 0.5) == doctest::Approx(std::pow(0.5, n - 1)).epsilon(1e-15));
    }
    CHECK(random_threshold(2, 2, 0.0) == 0.5);
    CHECK(std::abs(random_threshold(10000, 10000, 0.0) - std::exp(-1.0)) <= 1e-3);
}

TEST_CASE("random hunting probability: interior root and k-independence") {
    const double p = random_hunt_prob(params_for(2, 2, 1, 0.6, 0.0));
    CHECK(p == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(std::abs((1.0 - p / 2.0) - 0.6) <= 1e-15);
    CHECK(random_hunt_prob(params_for(50, 100, 3, 0.1, 0.0)) == 1.0);

    // Bit-identical across every access degree.
    const SymmetricParams base = params_for(100, 100, 1, 0.6, 0.25);
    const double reference_p = random_hunt_prob(base);
    const double reference_s = random_survival(base);
    for (int k = 2; k <= 100; k += 7) {
        const SymmetricParams alt = params_for(100, 100, k, 0.6, 0.25);
        CHECK(random_hunt_prob(alt) == reference_p);
        CHECK(random_survival(alt) == reference_s);
    }
}

TEST_CASE("random survival: saturated and interior values") {
    CHECK(random_survival(params_for(100, 100, 3, 0.01, 0.0)) ==
          doctest::Approx(std::pow(0.99, 100)).epsilon(1e-14));
    CHECK(random_survival(params_for(2, 2, 1, 0.6, 0.0)) == doctest::Approx(0.36).epsilon(1e-14));
    CHECK(random_survival(params_for(20, 20, 2, 0.999999, 0.0)) == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(random_survival(params_for(20, 20, 2, 1.0, 0.0)) == 1.0);  // nobody hunts at unit cost
}

TEST_CASE("interior indifference identity across the closed-form grid") {
    for (int k : kKGrid) {
        for (double v : kVGrid) {
            for (double r : kRGrid) {
                const SymmetricParams params = params_for(20, 20, k, v, r);
                const double p = regular_hunt_prob(params);
                if (p < 1.0 && p > 0.0) {
                    CHECK(std::abs(std::pow(1.0 - (1.0 - r) * p / k, k - 1) - v) <= 1e-12);
                }
                const double q = random_hunt_prob(params);
                if (q < 1.0 && q > 0.0) {
                    CHECK(std::abs(std::pow(1.0 - (1.0 - r) * q / 20.0, 19) - v) <= 1e-12);
                }
            }
        }
    }
}

TEST_CASE("hunting probability limit: exact points and the saturation flag") {
    CHECK(hunt_prob_limit(1.0, 0.0).value == 0.0);
    CHECK_FALSE(hunt_prob_limit(1.0, 0.0).saturated);
    CHECK(hunt_prob_limit(std::exp(-1.0), 0.0).value == doctest::Approx(1.0).epsilon(1e-14));
    const HuntProbLimit hot = hunt_prob_limit(0.6, 0.5);
    CHECK(hot.value == doctest::Approx(-std::log(0.6) / 0.5).epsilon(1e-15));
    CHECK(hot.saturated);  // exceeds 1: no interior branch at large n
    CHECK_THROWS_AS(hunt_prob_limit(0.0, 0.0), DomainError);
    CHECK_THROWS_AS(hunt_prob_limit(-0.5, 0.0), DomainError);
}

TEST_CASE("limit convergence: large finite n approaches -ln(v)/(1-r)") {
    const int n = 100000;
    for (double r : {0.0, 0.5}) {
        for (double v = 0.5; v <= 0.951; v += 0.05) {
            const SymmetricParams params = params_for(n, n, 3, v, r);
            const double p = random_hunt_prob(params);
            if (p >= 1.0) continue;  // saturated: the limit lies above 1 here
            CHECK(std::abs(p - hunt_prob_limit(v, r).value) <= 1e-3);
        }
    }
}

TEST_CASE("survival growth function: unit cost, hand value, and growth") {
    for (double x : {2.0, 5.0, 50.0}) CHECK(survival_growth(x, 1.0, 0.0) == 1.0);
    CHECK(survival_growth(2.0, 0.6, 0.0) == doctest::Approx(0.36).epsilon(1e-14));
    CHECK(survival_growth(2.0, 0.6, 0.0) < survival_growth(10.0, 0.6, 0.0));
    CHECK(survival_growth(10.0, 0.6, 0.0) < survival_growth(100.0, 0.6, 0.0));
    CHECK_THROWS_AS(survival_growth(1.0, 0.6, 0.0), DomainError);
    CHECK_THROWS_AS(survival_growth(2.0, 0.0, 0.0), DomainError);
}

TEST_CASE("survival growth function: nondecreasing wherever the interior branch applies") {
    // f(x) is a survival probability only once v clears the participation
    // threshold at contention size x; the threshold falls in x, so the
    // applicable region is an upward ray.
    for (double v : kVGrid) {
        for (double r : kRGrid) {
            int start = 0;
            for (int x = 2; x <= 10000; ++x) {
                if (regular_threshold(x, r) <= v) {
                    start = x;
                    break;
                }
            }
            if (start == 0) continue;  // cost below even the large-x threshold
            double previous = survival_growth(start, v, r);
            CHECK(previous >= 0.0);
            CHECK(previous <= 1.0);
            bool monotone = true;
            for (int x = start + 1; x <= 10000; ++x) {
                const double current = survival_growth(static_cast<double>(x), v, r);
                monotone = monotone && current >= previous - 1e-12;
                previous = current;
            }
            CHECK(monotone);
        }
    }
}

TEST_CASE("expected net payoff: zero above threshold, surplus below") {
    CHECK(expected_net_payoff(Topology::Regular, params_for(10, 10, 2, 0.6, 0.0)) == 0.0);
    CHECK(expected_net_payoff(Topology::Regular, params_for(10, 10, 2, 0.1, 0.0)) ==
          doctest::Approx(0.4).epsilon(1e-15));
    // Between the two thresholds the regular side keeps a strict surplus.
    const SymmetricParams mid = params_for(100, 100, 2, 0.45, 0.0);
    CHECK(expected_net_payoff(Topology::Regular, mid) == doctest::Approx(0.05).epsilon(1e-12));
    CHECK(expected_net_payoff(Topology::Random, mid) == 0.0);
}

TEST_CASE("comparison cases: saturated, mixed, interior") {
    const TopologyComparison low = compare_topologies(params_for(100, 100, 2, 0.01, 0.0));
    CHECK(low.case_label == ComparisonCase::BothSaturated);
    CHECK(low.s_reg == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(low.s_rnd == doctest::Approx(std::pow(0.99, 100)).epsilon(1e-14));
    CHECK(low.s_reg < low.s_rnd);

    const TopologyComparison mid = compare_topologies(params_for(100, 100, 2, 0.45, 0.0));
    CHECK(mid.case_label == ComparisonCase::Mixed);
    CHECK(mid.w_reg == doctest::Approx(0.05).epsilon(1e-12));
    CHECK(mid.w_rnd == 0.0);

    const TopologyComparison high = compare_topologies(params_for(100, 100, 2, 0.9, 0.0));
    CHECK(high.case_label == ComparisonCase::BothInterior);
    CHECK(high.s_reg == doctest::Approx(survival_growth(2, 0.9, 0.0)).epsilon(1e-14));
    CHECK(high.s_rnd == doctest::Approx(survival_growth(100, 0.9, 0.0)).epsilon(1e-14));
    CHECK(high.w_reg == 0.0);
    CHECK(high.w_rnd == 0.0);

    CHECK_THROWS_AS(compare_topologies(params_for(10, 10, 10, 0.5, 0.0)), ParameterError);
    CHECK_THROWS_AS(compare_topologies(params_for(10, 10, 1, 0.5, 0.0)), ParameterError);
}

TEST_CASE("dominance sweep: random access never beats regular access") {
    for (double v : kVGrid) {
        for (double r : kRGrid) {
            for (int k : kKGrid) {
                for (int n : kNGrid) {
                    const TopologyComparison cmp = compare_topologies(params_for(n, n, k, v, r));
                    CHECK(cmp.s_reg <= cmp.s_rnd + 1e-12);
                    CHECK(cmp.w_reg >= cmp.w_rnd - 1e-12);
                }
            }
        }
    }
}

TEST_CASE("continuity at the threshold: the interior root lands on 1") {
    for (int k : kKGrid) {
        for (double r : kRGrid) {
            const double at = regular_threshold(k, r);
            CHECK(regular_hunt_prob(params_for(20, 20, k, at, r)) ==
                  doctest::Approx(1.0).epsilon(1e-9));
            CHECK(regular_hunt_prob(params_for(20, 20, k, at - 1e-12, r)) == 1.0);
        }
    }
    for (int n : {10, 100}) {
        const double at = random_threshold(n, n, 0.25);
        CHECK(random_hunt_prob(params_for(n, n, 2, at, 0.25)) == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(params_for(1, 2, 1, 0.0, 0.0), ParameterError);
    CHECK_THROWS_AS(params_for(2, 2, 3, 0.0, 0.0), ParameterError);
    CHECK_THROWS_AS(params_for(2, 2, 0, 0.0, 0.0), ParameterError);
    CHECK_THROWS_AS(params_for(2, 2, 1, -0.1, 0.0), ParameterError);
    CHECK_THROWS_AS(params_for(2, 2, 1, 0.1, 1.0), ParameterError);
}
