#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "twoadic/verify.hpp"

using namespace twoadic::verify;

namespace {

void check_same(const TheoremReport& a, const TheoremReport& b) {
    CHECK(a.params_tested == b.params_tested);
    REQUIRE(a.failures.size() == b.failures.size());
    for (std::size_t i = 0; i < a.failures.size(); ++i) CHECK(a.failures[i].params == b.failures[i].params);
    CHECK(a.observations == b.observations);
}

}  // namespace

TEST_CASE("report plumbing") {
    TheoremReport a, b;
    a.family = "x";
    a.params_tested = 3;
    a.fail("p1", "1", "2");
    b.params_tested = 4;
    b.fail("p2", "3", "4");
    b.observations.push_back("note");
    CHECK_FALSE(a.verified());
    a.merge(std::move(b));
    CHECK(a.params_tested == 7);
    REQUIRE(a.failures.size() == 2);
    CHECK(a.failures[1].params == "p2");
    CHECK(a.observations.size() == 1);
    CHECK(TheoremReport{}.verified());
}

TEST_CASE("small sweeps verify") {
    const SweepLimits lim{64, 1};
    CHECK(verify_thm_2_1(63, 6, lim).verified());
    CHECK(verify_thm_2_2(63, 6, 32, lim).verified());
    CHECK(verify_thm_2_3(6, lim).verified());
    CHECK(verify_thm_2_5(64, 6, lim).verified());
    CHECK(verify_thm_2_6(5, 6, {160, 1}).verified());
    CHECK(verify_thm_3_4(63, 5, lim).verified());
    CHECK(verify_dewannemacker(5, {160, 1}).verified());
    CHECK(verify_estimates(60).verified());
    CHECK(verify_classifier(60).verified());
    CHECK(verify_odd(60).verified());
    CHECK(verify_hong_amdeberhan(60).verified());
    CHECK(verify_central(40).verified());
    CHECK(verify_invariance(16, 7).verified());
    CHECK(verify_partition_estimate(12).verified());
    CHECK(verify_bernoulli_appendix(6, 6, 14).verified());
}

TEST_CASE("sweeps count what they test") {
    // n = 2^h for c = 1, so a runs over 1..2^h for each h
    const auto r = verify_thm_2_1(1, 3, {8, 1});
    CHECK(r.params_tested == 1 + 2 + 4 + 8);
    CHECK(r.family == "2.1");
    CHECK(r.elapsed.count() >= 0);
}

TEST_CASE("worker count does not change reports") {
    check_same(verify_thm_2_2(63, 6, 32, {64, 1}), verify_thm_2_2(63, 6, 32, {64, 5}));
    check_same(verify_classifier(80, 1), verify_classifier(80, 3));
    check_same(verify_invariance(20, 7, 1), verify_invariance(20, 7, 4));
    check_same(verify_thm_2_3(6, {64, 1}), verify_thm_2_3(6, {64, 6}));
}

TEST_CASE("families by name") {
    for (const auto& name : family_names()) CHECK_FALSE(name.empty());
    CHECK_FALSE(run_family("no-such-family", {}).has_value());
    FamilyOptions opts;
    opts.n_max = 40;
    const auto r = run_family("classifier", opts);
    REQUIRE(r.has_value());
    CHECK(r->verified());
    CHECK(r->params_tested == 40 * 41 / 2);
}
