#pragma once

// The metric layer on jets: shellwise quasi-distance d^r and its limit,
// the jet norm, lipschitzian ratio estimation, tangency testing and the
// good-jet verdict.
//
// Shell sequences are cumulative sups from the inside: the value at
// shell j is the sup over all samples with radius <= r_j, so the
// sequence is nonincreasing and its last entry is the reported estimate
// of lim_{r->0}. No extrapolation is attempted; a convergence flag and
// the tail slope qualify the estimate instead.

#include <string>
#include <vector>

#include "metjet/germ.hpp"
#include "metjet/shell_schedule.hpp"

namespace metjet {

struct Tolerances {
    double tol = 1e-6;       // tangency / linearity defect threshold
    double tol_conv = 1e-9;  // convergence: tail change relative to max(1, value)
    double tol_gap = 1e-3;   // good-jet norm/ratio gap
};

struct LimitEstimate {
    struct ShellValue {
        ScalePoint radius;  // outer radius of shell j
        double value;       // sup over samples with radius <= this one
    };
    std::vector<ShellValue> shells;
    std::vector<double> per_shell_sup;  // non-cumulative, for persistence tests
    double estimate = 0.0;              // value at the innermost shell
    bool converged = false;
    double tail_slope = 0.0;  // least-squares slope over the last quarter

    // CSV with columns shell_index, log_radius, value.
    std::string to_csv() const;
};

enum class TangencyVerdict { tangent, not_tangent, inconclusive };
enum class GoodJetVerdict { good, not_good, inconclusive };

const char* to_string(TangencyVerdict v);
const char* to_string(GoodJetVerdict v);

struct JetSummary {
    LimitEstimate norm_to_zero;
    LimitEstimate rho;
    GoodJetVerdict good_jet = GoodJetVerdict::inconclusive;
    // Whether the ratio estimate speaks for the whole jet (homogeneous
    // representative) or only for this representative.
    bool rho_is_jet_ratio = false;
};

// d^r(f,g) over the schedule's shells; f and g must share pointing data.
LimitEstimate quasi_distance(const Germ& f, const Germ& g, const ShellSchedule& s,
                             const Tolerances& tols = {});

TangencyVerdict tangency_test(const Germ& f, const Germ& g, const ShellSchedule& s,
                              const Tolerances& tols = {});

// Upper Lipschitz-slope estimate from sampled difference quotients:
// same-shell and adjacent-shell pairs, base-point pairs, plus a local
// refinement ladder around the running witness.
LimitEstimate lipschitz_ratio(const Germ& f, const ShellSchedule& s, const Tolerances& tols = {});

JetSummary jet_summary(const Germ& f, const ShellSchedule& s, const Tolerances& tols = {});

// The zero germ sharing f's pointing data (the jet-norm reference).
Germ zero_like(const Germ& f);

}  // namespace metjet
