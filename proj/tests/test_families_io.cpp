#include <doctest.h>

#include <cmath>

#include "gen.hpp"
#include "wseq/assoc.hpp"
#include "wseq/conjugation.hpp"
#include "wseq/families.hpp"
#include "wseq/io.hpp"

using namespace wseq;

TEST_CASE("descriptor parsing") {
    FamilyDescriptor d = parse_descriptor("gevrey-matrix:xs=0.5,1,2,4");
    CHECK(d.id == "gevrey-matrix");
    CHECK(d.list("xs", {}) == std::vector<double>{0.5, 1, 2, 4});
    CHECK(d.kind() == "matrix");
    CHECK(parse_descriptor("slowvar").id == "from-mu");
    CHECK(parse_descriptor("bmt-matrix:weight=power,rho=0.5").str("weight", "") == "power");
    CHECK_THROWS_AS(parse_descriptor("gevrey:=1"), DomainError);
    CHECK_THROWS_AS(parse_descriptor("unknown:a=1"), DomainError);
}

TEST_CASE("property: catalog descriptors roundtrip through text and JSON") {
    for (const auto& d : catalog_list()) {
        FamilyDescriptor t = parse_descriptor(to_string(d));
        CHECK(t.id == d.id);
        CHECK(t.params == d.params);
        FamilyDescriptor j = descriptor_from_json(to_json(d));
        CHECK(j.params == d.params);
    }
}

TEST_CASE("catalog entries instantiate") {
    Config cfg = default_config();
    for (const auto& d : catalog_list()) {
        CAPTURE(to_string(d));
        if (d.kind() == "sequence") {
            WeightSequence M = make_sequence(d, 128);
            CHECK(M.log_M(0) == 0.0);
            CHECK(check_lc(make_sequence(d, 256), cfg).is_true());
        } else if (d.kind() == "weight") {
            WeightFunction w = make_weight(d, cfg);
            CHECK(w(0.5) == 0.0);
        } else {
            WeightMatrix M = make_weight_matrix(d, cfg);
            CHECK(M.size() >= 2);
            CHECK(pointwise_ordered(M));
        }
    }
}

TEST_CASE("power weight 1/2 passes the standard conditions") {
    WeightFunction w = power_weight(0.5);
    CHECK(check_omega1(w).is_true());
    CHECK(check_omega3(w).is_true());
    CHECK(check_omega4(w).is_true());
    CHECK(check_omega6(w).is_true());
}

TEST_CASE("slowvar quotients are slowly varying") {
    CHECK(check_lc(make_sequence("slowvar", 256)).is_true());
    auto q = quotients(make_sequence("slowvar", 8 * 4096));
    // mu_{Qj} / mu_j = exp(sqrt(log(1+Qj)) - sqrt(log(1+j))) drifts towards 1
    for (int Q : {2, 4, 8}) {
        double prev = 1e300;
        for (int j = 64; j <= 4096; j *= 2) {
            const double r = q.log_mu[std::size_t(Q * j)] - q.log_mu[std::size_t(j)];
            CHECK(r == doctest::Approx(std::sqrt(std::log1p(double(Q * j))) - std::sqrt(std::log1p(double(j)))));
            CHECK(r < prev);
            prev = r;
        }
        CHECK(prev < std::log(double(Q)) / (2 * std::sqrt(std::log(4096.0))) + 1e-3);
    }
}

TEST_CASE("theta bound") {
    WeightSequence f = make_sequence("gevrey:s=1", 64);
    ThetaBound b0 = theta_derivative_bound(f, 0, 64);
    // s_0 = sum_k k! / (2k)^k with the k = 0 term equal to 1
    double s0 = 1;
    for (int k = 1; k <= 64; ++k) s0 += std::exp(testgen::log_factorial(k) - k * std::log(2.0 * k));
    CHECK(b0.log_s == doctest::Approx(std::log(s0)).epsilon(1e-12));
    CHECK(b0.log_margin >= 0);
    CHECK(b0.verdict == Verdict::True);

    ThetaBound b5 = theta_derivative_bound(make_sequence("gevrey:s=2", 64), 5, 64);
    CHECK(b5.log_N == doctest::Approx(2 * std::log(120.0)));
    CHECK(b5.log_margin >= 0);
    CHECK(b5.verdict == Verdict::True);

    CHECK_THROWS_AS(theta_derivative_bound(sequence_from_logs(std::vector<double>(20, 1.0)), 0, 16), DomainError);
}

TEST_CASE("property: theta bound margin for random log-convex sequences") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        WeightSequence N = testgen::log_convex(rng, 64);
        for (int j = 0; j <= 20; ++j) {
            ThetaBound b = theta_derivative_bound(N, j, 64);
            CHECK(b.log_margin >= 0);
        }
    }
}

TEST_CASE("dump_json is deterministic and sorted") {
    json j = {{"b", 1.0}, {"a", {1.0, 2.5}}, {"c", kInf}, {"d", -kInf}, {"e", std::nan("")}, {"f", 3}};
    const std::string s = dump_json(j);
    CHECK(s == dump_json(json(j)));
    CHECK(s.find("\"a\"") < s.find("\"b\""));
    CHECK(s.find("\"+inf\"") != std::string::npos);
    CHECK(s.find("\"-inf\"") != std::string::npos);
    CHECK(s.find("null") != std::string::npos);
    CHECK(s.find("\"b\": 1.0") != std::string::npos);
    CHECK(s.find("\"f\": 3\n") != std::string::npos);
    CHECK(s.find("[1.0, 2.5]") != std::string::npos);
}

TEST_CASE("sequence JSON roundtrip") {
    WeightSequence M = make_sequence("gevrey:s=1.5", 40);
    WeightSequence back = sequence_from_json(json::parse(dump_json(to_json(M))));
    CHECK(back.log_values == M.log_values);
    CHECK(back.has_generator());
    WeightSequence longer = sequence_from_json(to_json(M), 80);
    CHECK(longer.J() == 80);

    WeightSequence table = sequence_from_logs({0, 0.5, 1.5, 3});
    WeightSequence t2 = sequence_from_json(to_json(table));
    CHECK_FALSE(t2.has_generator());
    CHECK(t2.log_values == table.log_values);
    CHECK_THROWS_AS(sequence_from_json(json{{"nothing", 1}}), DomainError);
}

TEST_CASE("matrix and weight JSON roundtrip") {
    Config cfg = default_config();
    WeightMatrix G = make_weight_matrix("gevrey-matrix:xs=1,2", cfg);
    WeightMatrix back = matrix_from_json(json::parse(dump_json(to_json(G))), cfg);
    CHECK(back.indices == G.indices);
    CHECK(bool(back.generator));

    WeightMatrix one = make_weight_matrix("gevrey:s=1", cfg);
    WeightMatrix one_back = matrix_from_json(to_json(one), cfg);
    CHECK(one_back.is_singleton());
    CHECK(bool(one_back.generator) == bool(one.generator));

    WeightFunction w = omega_M_table(make_sequence("gevrey:s=1", 128), 1.0, 100.0, 64).as_weight();
    WeightFunction wt = table_weight({1, 10, 100}, {0, 2, 5});
    WeightFunction wt_back = weight_from_json(to_json(wt), cfg);
    CHECK(wt_back(10.0) == doctest::Approx(2.0));
    CHECK(weight_from_json(json{{"id", "power"}, {"params", {{"rho", 0.5}}}}, cfg)(4.0) == doctest::Approx(1.0));
    CHECK(w(50.0) > 0);
}

TEST_CASE("csv_table") {
    CHECK(csv_table({"x", "y"}, {{1, 2}, {0.5, kInf}}) == "x,y\n1,0.5\n2,inf\n");
    CHECK_THROWS_AS(csv_table({"x"}, {{1}, {2}}), DomainError);
    CHECK_THROWS_AS(csv_table({"x", "y"}, {{1}, {2, 3}}), DomainError);
}
