// Acceptance suite: runs the pinned desk-scale criteria end to end and
// prints one PASS/FAIL line per criterion. Exit code 0 only if all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "metjet/claims.hpp"

namespace {

using metjet::ClaimOutcome;

struct CriterionResult {
    bool pass;
    std::string detail;
};

int g_failures = 0;

void report(int index, const std::string& title,
            const std::function<CriterionResult()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult res;
    try {
        res = body();
    } catch (const std::exception& e) {
        res = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!res.pass) ++g_failures;
    std::printf("criterion %2d [%s] %s (%s; %.2fs)\n", index, res.pass ? "PASS" : "FAIL",
                title.c_str(), res.detail.c_str(), secs);
    std::fflush(stdout);
}

// Runs a claim filter and folds the outcomes into one verdict line.
CriterionResult from_claims(const std::string& filter, double* out_seconds = nullptr) {
    const auto outcomes = metjet::run_claims(filter);
    if (outcomes.empty()) return {false, "no claims matched " + filter};
    bool pass = true;
    std::string detail;
    double seconds = 0.0;
    for (const auto& o : outcomes) {
        pass = pass && o.pass;
        seconds += o.seconds;
        if (!o.pass) detail += o.id + " measured " + std::to_string(o.measured) + "; ";
    }
    if (detail.empty())
        detail = std::to_string(outcomes.size()) + " claims ok";
    if (out_seconds) *out_seconds = seconds;
    return {pass, detail};
}

CriterionResult merge(std::initializer_list<std::string> filters) {
    bool pass = true;
    std::string detail;
    for (const auto& f : filters) {
        const auto r = from_claims(f);
        pass = pass && r.pass;
        if (!r.pass) detail += r.detail;
    }
    if (detail.empty()) detail = "all claim groups ok";
    return {pass, detail};
}

}  // namespace

int main() {
    std::printf("metjet acceptance suite\n");

    report(1, "absolute value: norm = ratio = 1 within 1e-9, good jet",
           [] { return from_claims("good_jet_abs*"); });

    report(2, "fractal wave: norm 1 (1e-6), ratio sqrt(2) (1e-3), not good",
           [] { return from_claims("fractal_wave*"); });

    report(3, "cantor-distance germ: norm = ratio = 1 (1e-6), fractal identity 1e-12",
           [] { return from_claims("giseh*"); });

    report(4, "uncanny germ: norm = ratio = 1 (1e-2) on 400+ deep shells, under 60s", [] {
        double seconds = 0.0;
        auto r = from_claims("uncanny*", &seconds);
        if (r.pass && seconds >= 60.0) {
            r.pass = false;
            r.detail = "runtime " + std::to_string(seconds) + "s exceeds 60s";
        } else if (r.pass) {
            r.detail += ", " + std::to_string(seconds) + "s";
        }
        return r;
    });

    report(5, "contact self-recovery on four homogeneous germs within 1e-10",
           [] { return from_claims("contact_self*"); });

    report(6, "bifractal refutation on the 8-point k grid with equidistributed orbits",
           [] { return merge({"bifractal_refuted*", "equidistribution*"}); });

    report(7, "uncanny linearity bands: defects under 10/|logmag|, decreasing, final <= 1e-4",
           [] { return from_claims("ins_band*"); });

    report(8, "TL/contact consistency triple (f2, uncanny, fractal wave)",
           [] { return from_claims("consistency*"); });

    report(9, "five periodic-profile waves embed as separated jets",
           [] { return from_claims("perwave*"); });

    report(10, "mean value: wave k in [1.40,1.42] holds; linear case tight to 1e-12",
           [] { return from_claims("meanvalue*"); });

    report(11, "strict-minimum certifier: tilted abs certified at 0.5, identity refused",
           [] { return from_claims("strictmin*"); });

    report(12, "property suites and byte-identical determinism of the full claims run", [] {
        auto r = merge({"prop_*", "tangency_*"});
        const auto run_a = metjet::run_claims("");
        const auto run_b = metjet::run_claims("");
        const bool deterministic =
            metjet::claims_csv(run_a, false) == metjet::claims_csv(run_b, false);
        bool all = metjet::all_passed(run_a);
        if (!deterministic) {
            r.pass = false;
            r.detail += " claims CSV differs between runs;";
        }
        if (!all) {
            r.pass = false;
            r.detail += " full suite has failing claims;";
        }
        if (r.pass) r.detail = "properties ok, two full runs byte-identical (timing masked)";
        return r;
    });

    if (g_failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criteria failed\n", g_failures);
    return 1;
}
