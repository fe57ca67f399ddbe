#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "metjet/claims.hpp"

using namespace metjet;

TEST_CASE("registry is populated, sorted and unique") {
    const auto& reg = claim_registry();
    CHECK(reg.size() >= 12);
    std::set<std::string> ids;
    for (const auto& c : reg) {
        CHECK(ids.insert(c.id).second);
        CHECK_FALSE(c.description.empty());
        CHECK_FALSE(c.anchor.empty());
    }
    for (std::size_t i = 1; i < reg.size(); ++i) CHECK(reg[i - 1].id < reg[i].id);
}

TEST_CASE("filtering") {
    CHECK(run_claims("good_jet*").size() == 3);
    CHECK(run_claims("nomatch").empty());
    CHECK(run_claims("*_k0.5").size() == 2);  // bifractal + equidistribution
    CHECK(run_claims("").size() == claim_registry().size());
}

TEST_CASE("pass rules") {
    Claim near{"x", "", "", 1.0, 0.1, ClaimMode::near, nullptr};
    CHECK(near.passes(1.05));
    CHECK_FALSE(near.passes(1.2));
    Claim at_most{"x", "", "", 1.0, 0.0, ClaimMode::at_most, nullptr};
    CHECK(at_most.passes(0.9));
    CHECK_FALSE(at_most.passes(1.1));
    Claim at_least{"x", "", "", 1.0, 0.0, ClaimMode::at_least, nullptr};
    CHECK(at_least.passes(1.1));
    CHECK_FALSE(at_least.passes(0.9));
}

TEST_CASE("cheap claim groups pass") {
    for (const char* filter : {"good_jet*", "giseh*", "ins_band*", "meanvalue*", "strictmin*",
                               "equidistribution*", "contact_self*", "bifractal*"}) {
        const auto outcomes = run_claims(filter);
        REQUIRE_FALSE(outcomes.empty());
        for (const auto& o : outcomes) {
            INFO(o.id, " measured ", o.measured);
            CHECK(o.pass);
        }
    }
}

TEST_CASE("csv output is stable modulo timing") {
    const auto a = run_claims("giseh*");
    const auto b = run_claims("giseh*");
    CHECK(claims_csv(a, false) == claims_csv(b, false));
    const std::string with_timing = claims_csv(a, true);
    CHECK(with_timing.rfind("claim_id,expected,tolerance,measured,pass,seconds\n", 0) == 0);
    const std::string stable = claims_csv(a, false);
    CHECK(stable.rfind("claim_id,expected,tolerance,measured,pass\n", 0) == 0);
}
