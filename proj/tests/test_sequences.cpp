#include <doctest.h>

#include <cmath>

#include "gen.hpp"
#include "wseq/families.hpp"
#include "wseq/sequence.hpp"
#include "wseq/tail.hpp"

using namespace wseq;

TEST_CASE("make_sequence tabulates closed forms") {
    WeightSequence g = make_sequence("gevrey:s=1", 4);
    REQUIRE(g.J() == 4);
    CHECK(g.log_M(0) == 0.0);
    CHECK(g.log_M(1) == doctest::Approx(0.0));
    CHECK(g.log_M(2) == doctest::Approx(std::log(2.0)));
    CHECK(g.log_M(3) == doctest::Approx(std::log(6.0)));

    WeightSequence q = make_sequence("qgevrey:q=2", 3);
    CHECK(q.log_M(1) == doctest::Approx(std::log(2.0)));
    CHECK(q.log_M(2) == doctest::Approx(4 * std::log(2.0)));
    CHECK(q.log_M(3) == doctest::Approx(9 * std::log(2.0)));

    WeightSequence g2 = make_sequence("gevrey:s=2", 3);
    CHECK(g2.log_M(2) == doctest::Approx(2 * std::log(2.0)));
    CHECK(g2.log_M(3) == doctest::Approx(2 * std::log(6.0)));

    WeightSequence sv = make_sequence("slowvar", 64);
    double acc = 0;
    for (int j = 1; j <= 64; ++j) {
        acc += std::sqrt(std::log(1.0 + j));
        CHECK(sv.log_M(j) == doctest::Approx(acc).epsilon(1e-12));
    }
}

TEST_CASE("make_sequence rejects invalid parameters") {
    CHECK_THROWS_AS(make_sequence("gevrey:s=0", 8), DomainError);
    CHECK_THROWS_AS(make_sequence("qgevrey:q=1", 8), DomainError);
    CHECK_THROWS_AS(make_sequence("geom-shift:C=0.5", 8), DomainError);
    CHECK_THROWS_AS(make_sequence("nosuch", 8), DomainError);
}

TEST_CASE("quotients") {
    auto f = quotients(make_sequence("gevrey:s=1", 20));
    CHECK(f.log_mu[0] == 0.0);
    for (int j = 1; j <= 20; ++j) CHECK(f.log_mu[std::size_t(j)] == doctest::Approx(std::log(double(j))));

    auto c = quotients(sequence_from_logs(std::vector<double>(10, 0.0)));
    for (double v : c.log_mu) CHECK(v == 0.0);

    auto q = quotients(make_sequence("qgevrey:q=2", 20));
    for (int j = 1; j <= 20; ++j) CHECK(q.log_mu[std::size_t(j)] == doctest::Approx((2 * j - 1) * std::log(2.0)));
}

TEST_CASE("property: from_quotients inverts quotients") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        WeightSequence M = trial % 2 ? testgen::log_convex(rng, 60) : testgen::rough(rng, 60);
        WeightSequence back = from_quotients(quotients(M));
        REQUIRE(back.J() == M.J());
        for (int j = 0; j <= M.J(); ++j) CHECK(back.log_M(j) == doctest::Approx(M.log_M(j)).epsilon(1e-12));
    }
}

TEST_CASE("property: log-convexity iff nondecreasing quotients, with monotone roots") {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 60; ++trial) {
        WeightSequence M = trial % 2 ? testgen::log_convex(rng, 50) : testgen::rough(rng, 50);
        auto q = quotients(M);
        bool monotone = true;
        for (std::size_t j = 2; j < q.log_mu.size(); ++j) monotone = monotone && q.log_mu[j] >= q.log_mu[j - 1] - 1e-12;
        CHECK(is_log_convex(M) == monotone);
        if (monotone && q.log_mu[1] >= 0) {
            for (int j = 2; j <= M.J(); ++j) CHECK(M.log_M(j) / j >= M.log_M(j - 1) / (j - 1) - 1e-12);
        }
    }
}

TEST_CASE("extended re-tabulates through the generator") {
    WeightSequence small = make_sequence("gevrey:s=1.5", 16);
    WeightSequence big = extended(small, 64);
    REQUIRE(big.J() == 64);
    for (int j = 0; j <= 64; ++j) CHECK(big.log_M(j) == doctest::Approx(1.5 * testgen::log_factorial(j)));
    CHECK(extended(small, 8).J() == 8);
    WeightSequence table = sequence_from_logs({0, 0, 1, 3});
    CHECK_THROWS(extended(table, 10));
}

TEST_CASE("check_lc") {
    CHECK(check_lc(make_sequence("gevrey:s=1", 256)).is_true());
    CHECK(check_lc(sequence_from_logs(std::vector<double>(257, 0.0))).is_false());
    ConditionVerdict v = check_lc(sequence_from_logs({0, 1, 1.5, 2.5}));
    CHECK(v.is_false());
    CHECK(check_lc(make_sequence("slowvar", 256)).is_true());
}

TEST_CASE("preceq and equivalent") {
    const int J = 256;
    WeightSequence f = make_sequence("gevrey:s=1", J);
    CHECK(preceq(f, make_sequence("geom-shift:C=2", J)).is_true());
    CHECK(preceq(make_sequence("qgevrey:q=2", J), f).is_false());
    CHECK(preceq(f, f).is_true());
    CHECK(equivalent(f, make_sequence("geom-shift:C=4", J)).is_true());
    CHECK(equivalent(f, make_sequence("gevrey:s=2", J)).is_false());
}

TEST_CASE("matrix order relations") {
    Config cfg = default_config();
    WeightMatrix G = make_weight_matrix("gevrey-matrix:xs=1,2,3", cfg);
    CHECK(matrix_preceq_roumieu(G, G, cfg).is_true());
    CHECK(matrix_preceq_beurling(G, G, cfg).is_true());

    WeightMatrix C = make_weight_matrix("geom-matrix:Cs=1,2,4", cfg);
    WeightMatrix one = make_weight_matrix("gevrey:s=1", cfg);
    CHECK(matrix_preceq_roumieu(C, one, cfg).is_true());

    WeightMatrix G12 = make_weight_matrix("gevrey-matrix:xs=1,2", cfg);
    WeightMatrix Q = make_weight_matrix("qgevrey:q=2", cfg);
    CHECK(matrix_preceq_roumieu(G12, Q, cfg).is_true());
    CHECK(matrix_preceq_roumieu(Q, G12, cfg).is_false());
    CHECK(pointwise_ordered(G));
}

TEST_CASE("tail_limit") {
    std::vector<double> args, c, conv, lg;
    for (int k = 0; k < 400; ++k) {
        const double a = std::exp(0.05 * k);
        args.push_back(a);
        c.push_back(3.0);
        conv.push_back(1.0 + 1.0 / a);
        lg.push_back(std::log(a));
    }
    for (TailMode m : {TailMode::Liminf, TailMode::Limsup}) {
        TailEstimate e = tail_limit(args, c, m);
        CHECK(e.divergence == Divergence::None);
        CHECK(e.estimate == doctest::Approx(3.0));
        CHECK(e.lo == doctest::Approx(3.0));
        CHECK(e.hi == doctest::Approx(3.0));
    }
    TailEstimate e = tail_limit(args, conv, TailMode::Limsup);
    CHECK(e.estimate == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(e.hi - e.lo < 1e-6);
    CHECK(tail_limit(args, lg, TailMode::Limsup).plus_inf());
    std::vector<double> neg;
    for (double v : lg) neg.push_back(-v);
    CHECK(tail_limit(args, neg, TailMode::Liminf).minus_inf());
}
