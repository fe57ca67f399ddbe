#pragma once

// The claims suite: every concrete numeric result this library is
// expected to reproduce, registered as data and run under fixed seeds.
// Adding a claim touches only the registry, never the analysis modules.

#include <functional>
#include <string>
#include <vector>

namespace metjet {

enum class ClaimMode { near, at_most, at_least };

struct Claim {
    std::string id;
    std::string description;
    std::string anchor;  // short label of the mathematical fact being checked
    double expected;
    double tolerance;
    ClaimMode mode;
    std::function<double()> run;

    bool passes(double measured) const;
};

struct ClaimOutcome {
    std::string id;
    double expected;
    double tolerance;
    double measured;
    bool pass;
    double seconds;
};

const std::vector<Claim>& claim_registry();

// Runs claims whose id matches the filter ('*' wildcard; empty = all),
// ordered by id. Deterministic apart from the timing field.
std::vector<ClaimOutcome> run_claims(const std::string& filter = "");

// CSV columns: claim_id, expected, tolerance, measured, pass, seconds.
// Timing can be masked for byte-identical determinism comparisons.
std::string claims_csv(const std::vector<ClaimOutcome>& outcomes, bool include_timing = true);

bool all_passed(const std::vector<ClaimOutcome>& outcomes);

}  // namespace metjet
