#include <doctest.h>

#include <cmath>

#include "wseq/families.hpp"
#include "wseq/indices.hpp"

using namespace wseq;

namespace {

const Config& cfg() {
    static const Config c = default_config();
    return c;
}

WeightSequence seq(const std::string& spec) { return make_sequence(spec, cfg().J); }
WeightFunction wt(const std::string& spec) { return index_weight(seq(spec), cfg()); }

void near(const IndexEstimate& e, double want) {
    REQUIRE(e.state == IndexEstimate::State::Finite);
    CHECK(e.value == doctest::Approx(want).epsilon(0.1));
    CHECK(e.lo <= e.value);
    CHECK(e.value <= e.hi);
}

}  // namespace

TEST_CASE("beta(M, Omega_N)") {
    near(beta_L(seq("gevrey:s=1"), seq("gevrey:s=1"), cfg()), 1.0);
    near(beta_L(seq("gevrey:s=0.5"), seq("gevrey:s=0.5"), cfg()), 0.5);
    CHECK(beta_L(seq("gevrey:s=1"), seq("geom-shift:C=4"), cfg()).infinite());
    CHECK(beta_L(seq("qgevrey:q=2"), seq("qgevrey:q=2"), cfg()).infinite());
}

TEST_CASE("alpha(sigma, omega) of the doubling type") {
    near(alpha_omega1(wt("gevrey:s=2"), wt("gevrey:s=2"), cfg()), 0.5);
    CHECK(alpha_omega1(wt("gevrey:s=1"), wt("geom-shift:C=4"), cfg()).zero());
    CHECK(alpha_omega1(wt("slowvar"), wt("slowvar"), cfg()).infinite());
}

TEST_CASE("alpha(N, Omega_M) of the moderate-growth type") {
    near(alpha_mg(seq("gevrey:s=1"), seq("gevrey:s=1"), cfg()), 1.0);
    CHECK(alpha_mg(seq("qgevrey:q=2"), seq("qgevrey:q=2"), cfg()).infinite());
    IndexEstimate e = alpha_mg(seq("gevrey:s=2"), seq("gevrey:s=1"), cfg());
    CHECK(e.lo <= e.hi);
}

TEST_CASE("beta(omega, sigma) of the (omega_6) type") {
    near(beta_omega6(wt("gevrey:s=2"), wt("gevrey:s=2"), cfg()), 0.5);
    CHECK(beta_omega6(wt("qgevrey:q=2"), wt("qgevrey:q=2"), cfg()).zero());
    WeightFunction t = power_weight(1);
    near(beta_omega6(t, t, cfg()), 1.0);
}

TEST_CASE("reciprocity") {
    for (const char* s : {"gevrey:s=1", "gevrey:s=0.5"}) {
        ReciprocityReport r = verify_reciprocity_L(seq(s), seq(s), cfg());
        CHECK(r.mode == "finite");
        CHECK(r.product == doctest::Approx(1.0).epsilon(0.1));
        CHECK(r.verdict == Verdict::True);
    }
    CHECK(verify_reciprocity_L(seq("gevrey:s=0.5"), seq("gevrey:s=0.5"), cfg()).beta.value ==
          doctest::Approx(0.5).epsilon(0.1));
    ReciprocityReport x = verify_reciprocity_L(seq("gevrey:s=1"), seq("geom-shift:C=4"), cfg());
    CHECK(x.mode == "extreme");
    CHECK(x.verdict == Verdict::True);

    for (const char* s : {"gevrey:s=1", "gevrey:s=2"}) {
        ReciprocityReport r = verify_reciprocity_mg(seq(s), seq(s), cfg());
        CHECK(r.product == doctest::Approx(1.0).epsilon(0.1));
        CHECK(r.verdict == Verdict::True);
    }
    ReciprocityReport q = verify_reciprocity_mg(seq("qgevrey:q=2"), seq("qgevrey:q=2"), cfg());
    CHECK(q.beta.zero());
    CHECK(q.alpha.infinite());
    CHECK(q.verdict == Verdict::True);

    ReciprocityReport m = verify_reciprocity_mg(seq("gevrey:s=1"), seq("gevrey:s=2"), cfg());
    CHECK(m.verdict != Verdict::False);
}

TEST_CASE("index preconditions") {
    CHECK_THROWS_AS(beta_L(seq("gevrey:s=2"), seq("gevrey:s=1"), cfg()), DomainError);
    CHECK_THROWS_AS(alpha_mg(seq("gevrey:s=1"), seq("gevrey:s=2"), cfg()), DomainError);
}

TEST_CASE("index JSON") {
    json j = to_json(beta_L(seq("gevrey:s=1"), seq("geom-shift:C=4"), cfg()));
    CHECK(j["state"] == "infinite");
    CHECK(j["value"] == "+inf");
    CHECK(j["kind"] == "beta-L");
}
