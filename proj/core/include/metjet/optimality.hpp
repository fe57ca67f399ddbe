#pragma once

// First-order checkers: the contact mean-value bound on a segment, the
// contact global-minimum necessary condition, and the strict-local-
// minimum certifier built on the positive contact.

#include <functional>
#include <string>

#include "metjet/contact.hpp"
#include "metjet/germ.hpp"
#include "metjet/valued_monoid.hpp"

namespace metjet {

// A scalar function on an interval together with its germ at any base
// point. Gallery-backed families keep deep-zoom displacements exact via
// a local Taylor branch when the displacement is far below the base.
struct SegmentFamily {
    std::string label;
    std::function<double(double)> value;
    std::function<Germ(double)> germ_at;
};

SegmentFamily family_fractal_wave();
SegmentFamily family_abs();
SegmentFamily family_scaling(double lambda);

struct SegmentCheck {
    double a = 0.0, b = 0.0;
    int samples = 0;  // grid size used
    int skipped = 0;  // interior points without an extractable contact
    double k_used = 0.0;
    double lhs = 0.0;  // |f(b) - f(a)|
    double rhs = 0.0;  // k * |b - a|
    bool holds = false;
};

// Extracts contacts on a uniform interior grid, takes k as the max
// hom-norm, and verifies |f(b)-f(a)| <= k|b-a|. Up to grid/4 interior
// points may fail extraction (a finite exceptional set); more than that
// throws std::domain_error.
SegmentCheck mean_value_check(const SegmentFamily& f, double a, double b, const ValuedMonoid& m,
                              int grid = 32, const ContactOptions& opt = {});

struct ContactMinReport {
    double min_value = 0.0;       // minimum sampled contact value
    double min_at_logmag = 0.0;   // where it was attained (1-d)
    int min_at_sign = 0;
    bool necessary_condition_holds = false;  // contact >= 0 on all samples
};

// For scalar f with an extractable contact: checks the contact is >= 0
// on annulus/sphere samples (global by homogeneity). Throws
// std::domain_error when the contact is not found.
ContactMinReport contact_min_check(const Germ& f, const ValuedMonoid& m, int n_points = 4096,
                                   const ContactOptions& opt = {});

enum class StrictMinVerdict { certified_strict_min, hypothesis_fails, inconclusive };
const char* to_string(StrictMinVerdict v);

struct StrictMinReport {
    StrictMinVerdict verdict = StrictMinVerdict::inconclusive;
    double sphere_min = 0.0;
    bool contact_found = false;
    bool empirical_ok = false;  // f(x) > f(a) on the random probe ball
    std::string reason;
};

// Positive-contact certifier: extracts the nonneg-reals contact, takes
// the minimum over >= probe sphere samples, and on success validates
// f > f(a) empirically on 1000 random points in a ball of radius 1e-3.
StrictMinReport strict_min_certifier(const Germ& f, int probe = 1024,
                                     const ContactOptions& opt = {});

}  // namespace metjet
