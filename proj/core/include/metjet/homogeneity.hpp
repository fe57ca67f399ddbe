#pragma once

// Homogeneity testing h(v(t)x) = v(t)h(x) and the hom-norm
// sup |h(x)|/|x|, which homogeneity reduces to one annulus or sphere.

#include <vector>

#include "metjet/germ.hpp"
#include "metjet/shell_schedule.hpp"
#include "metjet/valued_monoid.hpp"

namespace metjet {

enum class HomogeneityVerdict { homogeneous, not_homogeneous, inconclusive };
const char* to_string(HomogeneityVerdict v);

struct HomogeneityReport {
    ValuedMonoid monoid;
    struct ShellDefect {
        ScalePoint radius;
        double defect;  // max over sampled (t,x) of |h(t*x) - t*h(x)| / (v(t)|x|)
    };
    std::vector<ShellDefect> defect_by_shell;
    double max_defect = 0.0;
    HomogeneityVerdict verdict = HomogeneityVerdict::inconclusive;
};

// tol_hom: defects below it everywhere mean homogeneous; shells that all
// stay above the refutation floor (1e-3) over the last quarter mean not.
HomogeneityReport homogeneity_test(const Germ& h, const ValuedMonoid& m, const ShellSchedule& s,
                                   double tol_hom = 1e-9);

// sup |h(x)|/|x| for a homogeneous germ: one log annulus (k,1] for the
// power monoid, the unit sphere for the real monoids. Deterministic
// dense sampling; the caller vouches for homogeneity.
double hom_norm(const Germ& h, const ValuedMonoid& m, int n_points = 4096);

}  // namespace metjet
