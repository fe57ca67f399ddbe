#pragma once

// Pointed function germs in displacement form.
//
// A Germ holds the base pair (a, f(a)) and evaluates the displacement
// action x -> f(a+x) - f(a) on ScalePoint displacements. Storing the
// displacement action (rather than raw f) makes translation to base 0 a
// relabeling and keeps deep-zoom evaluation free of cancellation.

#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "metjet/scale_point.hpp"

namespace metjet {

// Analytic facts carried alongside a germ. Every populated field is a
// certificate checked by the test suite against eval on samples.
struct GermMeta {
    std::optional<double> lipschitz_bound;      // some k with f k-lipschitzian near the base
    std::optional<bool> odd_parity;             // 1-d: f(-x) = -f(x)
    std::optional<double> exact_fractal_ratio;  // k in (0,1) with f(k x) = k f(x)
    bool exact_positively_homogeneous = false;  // f(t x) = t f(x) for t >= 0
    std::string label;
};

class Germ {
  public:
    using EvalFn = std::function<SpVec(std::span<const ScalePoint>)>;
    // 1-d ratio profile (sign, ln|x|) -> f(x)/x as an ordinary double.
    // When present it is the exact analytic form of eval; it lets defect
    // computations cancel the common scale factor and so dodge the
    // |logmag|*eps quantization of absolute log arithmetic at depth.
    using RatioProfileFn = std::function<double(int, double)>;

    static constexpr double kUnboundedRadius = std::numeric_limits<double>::infinity();

    Germ(int dim_in, int dim_out, std::vector<double> base, std::vector<double> base_image,
         EvalFn eval, double domain_radius = kUnboundedRadius, GermMeta meta = {});

    int dim_in() const { return dim_in_; }
    int dim_out() const { return dim_out_; }
    const std::vector<double>& base() const { return base_; }
    const std::vector<double>& base_image() const { return base_image_; }
    double domain_radius() const { return domain_radius_; }
    const GermMeta& meta() const { return meta_; }
    GermMeta& meta() { return meta_; }

    // Displacement action; callers keep |x| below domain_radius.
    SpVec eval(std::span<const ScalePoint> displacement) const { return eval_(displacement); }

    ScalePoint eval1(ScalePoint x) const;  // 1-d in / 1-d out convenience

    bool same_pointing(const Germ& other) const;

    const RatioProfileFn& ratio_profile() const { return ratio_profile_; }
    void set_ratio_profile(RatioProfileFn p) { ratio_profile_ = std::move(p); }

  private:
    int dim_in_;
    int dim_out_;
    std::vector<double> base_;
    std::vector<double> base_image_;
    EvalFn eval_;
    double domain_radius_;
    GermMeta meta_;
    RatioProfileFn ratio_profile_;
};

// g after f. Requires f.dim_out == g.dim_in and g.base == f.base_image.
// The domain radius shrinks so f maps its ball into g's domain, using
// f's lipschitz_bound when present and a sampled bound (outermost-shell
// sup of |f(x)|/|x|, times a safety factor of 2) otherwise.
Germ compose(const Germ& g, const Germ& f);

// Same displacement action relabeled to base 0 -> 0; an isometry at the
// jet level, and literally a field change here.
Germ translate_to_zero(const Germ& f);

// Extends eval past the old domain radius with the value 0 (constant
// image outside); unchanged inside. Local data at the base is preserved.
Germ stretch(const Germ& f, double new_radius = Germ::kUnboundedRadius);

// Caps the domain radius without touching eval.
Germ restrict_radius(const Germ& f, double radius);

// Translate a germ based at 0 to base a with image a_image, keeping the
// displacement action.
Germ homog_translate(const Germ& h, std::vector<double> a, std::vector<double> a_image);

// 1-d germ at 0 given the value map x -> f(x) on ScalePoints.
Germ make_scalar_germ(std::string label, std::function<ScalePoint(ScalePoint)> fn,
                      double domain_radius = Germ::kUnboundedRadius, GermMeta meta = {});

// 1-d germ at 0 of the form f(x) = x * profile(sign(x), ln|x|). All the
// log-oscillatory gallery germs are exact at any zoom in this form.
Germ make_ratio_germ(std::string label, std::function<double(int, double)> ratio,
                     double domain_radius = Germ::kUnboundedRadius, GermMeta meta = {});

}  // namespace metjet
