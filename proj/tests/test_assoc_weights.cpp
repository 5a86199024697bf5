#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "gen.hpp"
#include "wseq/assoc.hpp"
#include "wseq/conjugation.hpp"
#include "wseq/families.hpp"
#include "wseq/weight_function.hpp"

using namespace wseq;

namespace {

// sup_{0<=j<=J} (j log t - log M_j) by direct scan
double brute_omega(const WeightSequence& M, double t) {
    double best = 0;
    for (int j = 0; j <= M.J(); ++j) best = std::max(best, j * std::log(t) - M.log_M(j));
    return best;
}

}  // namespace

TEST_CASE("omega_M point values") {
    WeightSequence f = make_sequence("gevrey:s=1", 64);
    CHECK(omega_M_at(f, std::exp(1.0)) == doctest::Approx(2 - std::log(2.0)).epsilon(1e-12));
    CHECK(omega_M_at(f, std::exp(1.0)) == doctest::Approx(brute_omega(f, std::exp(1.0))).epsilon(1e-12));
    CHECK(omega_M_at(f, 1.0) == 0.0);
    CHECK(omega_M_at(f, 0.5) == 0.0);
    WeightSequence q = make_sequence("qgevrey:q=2", 32);
    CHECK(omega_M_at(q, 8.0) == doctest::Approx(2 * std::log(2.0)));
    CHECK(omega_M_direct(q, 8.0) == doctest::Approx(2 * std::log(2.0)));
}

TEST_CASE("property: counting route agrees with the direct supremum") {
    std::mt19937 rng(21);
    std::uniform_real_distribution<double> lt(0.0, 1.0);
    for (int trial = 0; trial < 40; ++trial) {
        WeightSequence M = testgen::log_convex(rng, 80);
        const double lmax = quotients(M).log_mu[78];
        for (int k = 0; k < 25; ++k) {
            const double t = std::exp(lmax * lt(rng));
            CHECK(omega_M_at(M, t) == doctest::Approx(brute_omega(M, t)).epsilon(1e-10));
        }
    }
}

TEST_CASE("omega_M tables") {
    AssociatedWeightTable a = omega_M_table(make_sequence("gevrey:s=1", 256), 1.0, std::exp(8.0), 64);
    REQUIRE(a.values.size() == 64);
    CHECK(a.values.front() == 0.0);
    for (std::size_t i = 1; i < a.values.size(); ++i) CHECK(a.values[i] >= a.values[i - 1]);
    std::vector<double> ys;
    for (double t : a.t_grid) ys.push_back(std::log(t));
    CHECK(first_convexity_violation(ys, a.values) == -1);

    AssociatedWeightTable b = omega_M_table(make_sequence("qgevrey:q=2", 64), 1.0, 1024.0, 128);
    CHECK(b.values.back() == doctest::Approx(25 * std::log(2.0)));
}

TEST_CASE("reconstruct_M") {
    WeightFunction w = associated_weight(make_sequence("gevrey:s=1", 128));
    CHECK(reconstruct_M(w, 2) == doctest::Approx(std::log(2.0)).epsilon(1e-8));
    CHECK(reconstruct_M(w, 0) == doctest::Approx(0.0));
    WeightFunction q = associated_weight(make_sequence("qgevrey:q=2", 64));
    CHECK(reconstruct_M(q, 3) == doctest::Approx(9 * std::log(2.0)).epsilon(1e-8));
}

TEST_CASE("property: roundtrip on random log-convex sequences") {
    std::mt19937 rng(22);
    for (int trial = 0; trial < 20; ++trial) {
        WeightSequence M = testgen::log_convex(rng, 80);
        WeightFunction w = associated_weight(M);
        for (int j = 0; j <= 60; ++j) CHECK(std::fabs(reconstruct_M(w, j) - M.log_M(j)) <= 1e-6);
    }
}

TEST_CASE("weight function invariants") {
    for (const WeightFunction& w :
         {power_weight(0.5), power_weight(1), logpower_weight(2), associated_weight(make_sequence("gevrey:s=1", 512))}) {
        CHECK(w(0.0) == 0.0);
        CHECK(w(1.0) == doctest::Approx(0.0));
        double prev = 0;
        for (double t = 1.0; t < 200; t *= 1.3) {
            CHECK(w(t) >= prev - 1e-12);
            prev = w(t);
        }
    }
}

TEST_CASE("(omega_1)") {
    CHECK(check_omega1(logpower_weight(2)).is_true());
    CHECK(check_omega1(power_weight(1)).is_true());
    WeightFunction fast = closed_form_weight("expsq", json::object(), [](double y) { return std::expm1(y * y); }, true);
    CHECK(check_omega1(fast).is_false());
}

TEST_CASE("(omega_3)") {
    CHECK(check_omega3(power_weight(0.5)).is_true());
    CHECK(check_omega3(logpower_weight(1)).is_false());
    CHECK(check_omega3(associated_weight(make_sequence("gevrey:s=1", 512))).is_true());
}

TEST_CASE("(omega_4)") {
    CHECK(check_omega4(logpower_weight(2)).is_true());
    std::vector<double> ts, vs;
    for (double t = 1; t <= 1e4; t *= 1.1) {
        ts.push_back(t);
        vs.push_back(std::min(t, 100.0));
    }
    CHECK(check_omega4(table_weight(ts, vs)).is_false());
    for (const auto& d : catalog_list())
        if (d.kind() == "sequence")
            CHECK_MESSAGE(check_omega4(associated_weight(make_sequence(d, 512))).is_true(), to_string(d));
}

TEST_CASE("(omega_6)") {
    CHECK(check_omega6(power_weight(0.5)).is_true());
    CHECK(check_omega6(power_weight(2)).is_true());
    CHECK(check_omega6(associated_weight(make_sequence("qgevrey:q=2", 512))).is_false());
    CHECK(check_omega6(logpower_weight(1)).is_false());
}

TEST_CASE("sim_equivalent") {
    WeightFunction t = power_weight(1);
    CHECK(sim_equivalent(t, t).is_true());
    CHECK(sim_equivalent(t, power_weight(2)).is_false());
    CHECK(sim_equivalent(t, scaled_weight(t, 3)).is_true());
    WeightSequence W = omega_sequence(t, 1.0, 2048);
    CHECK(sim_equivalent(associated_weight(W), t).is_true());
}
