#pragma once

// Contact extraction via the zoom limit (f(v(t)x))/v(t), neofractal
// scanning, linear-jet testing, the differentiability consistency check
// and the irrational-rotation equidistribution probe.

#include <optional>
#include <string>
#include <vector>

#include "metjet/germ.hpp"
#include "metjet/homogeneity.hpp"
#include "metjet/jet_metrics.hpp"
#include "metjet/shell_schedule.hpp"
#include "metjet/valued_monoid.hpp"

namespace metjet {

enum class ContactVerdict { found, refuted, inconclusive };
const char* to_string(ContactVerdict v);

struct DirectionTrace {
    SpVec direction;                             // unit vector; +-1 in 1-d
    std::vector<double> log_scale;               // ln v(t_n), n = 1..n_steps
    std::vector<std::vector<double>> quotients;  // per step, dim_out components
    double oscillation = 0.0;                    // max-min spread over the tail
    int sign_alternations = 0;
    bool cauchy = false;
};

struct ContactOptions {
    int n_steps = 0;  // 0 -> monoid default (200 power steps / 400 real)
    double tol_contact = 1e-8;
    double osc_threshold = 0.5;
};

struct ContactResult {
    ValuedMonoid monoid;
    ContactVerdict verdict = ContactVerdict::inconclusive;
    std::optional<Germ> contact;  // set when found
    std::vector<DirectionTrace> traces;

    // CSV: direction_id, n, log_v_t, quotient_component_0..m
    std::string trace_csv() const;
};

std::vector<SpVec> default_directions(int dim);

// The zoom-limit extraction. Directions must be unit vectors. A found
// contact extends its deep quotients by the monoid's homogeneity, with
// write-once caching per reduced annulus/sphere point.
ContactResult extract_contact(const Germ& f, const ValuedMonoid& m,
                              const std::vector<SpVec>& directions = {},
                              const ContactOptions& opt = {});

struct NeofractalScan {
    std::vector<std::pair<double, ContactResult>> by_k;
    bool all_refuted = false;  // "not neofractal on this grid"
};
NeofractalScan neofractal_scan(const Germ& f, const std::vector<double>& k_grid,
                               const std::vector<SpVec>& directions = {},
                               const ContactOptions& opt = {});

enum class LinearityVerdict { linear_jet, not_linear, inconclusive };
const char* to_string(LinearityVerdict v);

struct LinearityReport {
    LimitEstimate additivity;  // sup |f(x+y)-f(x)-f(y)| / ||(x,y)|| per shell
    LimitEstimate scaling;     // sup over lambda of |f(lx)-lf(x)| / |x| per shell
    LinearityVerdict verdict = LinearityVerdict::inconclusive;
};

// Tests the two limits behind "linear at the limit": additivity over
// matched and skewed pairs, scaling over a fixed lambda set.
LinearityReport linearity_test(const Germ& f, const ShellSchedule& s, const Tolerances& tols = {});

// Additivity / scaling defect sups measured in a band of scales around
// the given log-magnitude (one window of the linearity test, for germs
// whose defects decay only logarithmically).
struct BandDefects {
    double additivity = 0.0;
    double scaling = 0.0;
};
BandDefects linearity_band_defects(const Germ& f, double band_logmag, int samples = 512,
                                   std::uint64_t seed = 0x5eed);

struct ConsistencyReport {
    LinearityVerdict tl = LinearityVerdict::inconclusive;
    ContactVerdict contact = ContactVerdict::inconclusive;
    bool contact_is_linear = false;
    std::vector<std::vector<double>> fitted_matrix;  // dim_out x dim_in, when found
    double fit_residual = 0.0;
    bool consistent = false;  // differentiable <=> TL and contactable, jointly coherent
    std::string note;
};

// Runs linearity_test and extract_contact and cross-checks them: when
// both succeed the contact must be (a translate of) a matrix, which is
// fitted on basis directions and verified on samples.
ConsistencyReport tl_and_contact_consistency(const Germ& f, const ValuedMonoid& m,
                                             const ShellSchedule& s, const Tolerances& tols = {},
                                             const ContactOptions& opt = {});

struct EquidistributionReport {
    double largest_gap = 0.0;      // in the sorted value set
    double tail_oscillation = 0.0; // max-min over the last quarter
    int distinct_values = 0;       // distinct up to 1e-9
};

// x_n = sin(2 pi n alpha + gamma) for n < n_count; for irrational alpha
// the sorted gap tends to 0 (the cluster set fills [-1,1]).
EquidistributionReport equidistribution_check(double alpha, double gamma, int n_count);

}  // namespace metjet
