#include "metjet/germ.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "metjet/shell_schedule.hpp"

namespace metjet {

Germ::Germ(int dim_in, int dim_out, std::vector<double> base, std::vector<double> base_image,
           EvalFn eval, double domain_radius, GermMeta meta)
    : dim_in_(dim_in),
      dim_out_(dim_out),
      base_(std::move(base)),
      base_image_(std::move(base_image)),
      eval_(std::move(eval)),
      domain_radius_(domain_radius),
      meta_(std::move(meta)) {
    if (dim_in_ < 1 || dim_out_ < 1) throw std::invalid_argument("germ dims must be >= 1");
    if (base_.size() != static_cast<std::size_t>(dim_in_) ||
        base_image_.size() != static_cast<std::size_t>(dim_out_))
        throw std::invalid_argument("germ base point dims do not match");
    if (!(domain_radius_ > 0.0)) throw std::invalid_argument("domain radius must be > 0");
}

ScalePoint Germ::eval1(ScalePoint x) const {
    const ScalePoint in[1] = {x};
    return eval_(std::span<const ScalePoint>(in, 1))[0];
}

bool Germ::same_pointing(const Germ& other) const {
    return dim_in_ == other.dim_in_ && dim_out_ == other.dim_out_ && base_ == other.base_ &&
           base_image_ == other.base_image_;
}

namespace {

// Empirical displacement gain sup |f(x)|/|x| over the two outermost
// shells of a small probe schedule inside f's domain.
double sampled_gain(const Germ& f) {
    ShellSchedule s;
    s.r0 = std::isinf(f.domain_radius()) ? ScalePoint::one()
                                         : ScalePoint{1, std::log(f.domain_radius()) - 1e-9};
    s.shells = 2;
    s.samples_per_shell = 64;
    double gain = 0.0;
    for (int j = 0; j < s.shells; ++j) {
        for (const auto& x : shell_points_nd(s, j, f.dim_in())) {
            const SpVec y = f.eval(x);
            gain = std::max(gain, sp_mag_ratio(sp_norm(y), sp_norm(x)));
        }
    }
    return gain;
}

}  // namespace

Germ compose(const Germ& g, const Germ& f) {
    if (f.dim_out() != g.dim_in())
        throw std::invalid_argument("compose: inner output dim != outer input dim");
    if (g.base() != f.base_image())
        throw std::invalid_argument("compose: base-point mismatch (g.base != f.base_image)");

    double radius = f.domain_radius();
    if (!std::isinf(g.domain_radius())) {
        double bound = f.meta().lipschitz_bound ? *f.meta().lipschitz_bound
                                                : 2.0 * sampled_gain(f);
        if (!std::isfinite(bound)) throw std::domain_error("compose: no finite gain bound for inner germ");
        if (bound > 0.0) radius = std::min(radius, g.domain_radius() / bound);
        // bound == 0 means f collapses to the image base point; no shrink needed.
    }

    GermMeta meta;
    meta.label = g.meta().label + "." + f.meta().label;
    if (f.meta().lipschitz_bound && g.meta().lipschitz_bound)
        meta.lipschitz_bound = *f.meta().lipschitz_bound * *g.meta().lipschitz_bound;
    if (f.meta().exact_positively_homogeneous && g.meta().exact_positively_homogeneous)
        meta.exact_positively_homogeneous = true;
    if (f.meta().exact_fractal_ratio && g.meta().exact_fractal_ratio &&
        *f.meta().exact_fractal_ratio == *g.meta().exact_fractal_ratio)
        meta.exact_fractal_ratio = f.meta().exact_fractal_ratio;

    Germ out(
        f.dim_in(), g.dim_out(), f.base(), g.base_image(),
        [g, f](std::span<const ScalePoint> x) {
            const SpVec mid = f.eval(x);
            return g.eval(mid);
        },
        radius, std::move(meta));
    if (f.ratio_profile() && g.ratio_profile() && f.dim_in() == 1 && g.dim_out() == 1) {
        auto pf = f.ratio_profile();
        auto pg = g.ratio_profile();
        out.set_ratio_profile([pf, pg](int sign, double lm) -> double {
            const double rf = pf(sign, lm);
            if (rf == 0.0) return 0.0;
            const int mid_sign = rf > 0.0 ? sign : -sign;
            return rf * pg(mid_sign, lm + std::log(std::fabs(rf)));
        });
    }
    return out;
}

Germ translate_to_zero(const Germ& f) {
    Germ out(f.dim_in(), f.dim_out(), std::vector<double>(static_cast<std::size_t>(f.dim_in()), 0.0),
             std::vector<double>(static_cast<std::size_t>(f.dim_out()), 0.0),
             [f](std::span<const ScalePoint> x) { return f.eval(x); }, f.domain_radius(), f.meta());
    out.set_ratio_profile(f.ratio_profile());
    return out;
}

Germ stretch(const Germ& f, double new_radius) {
    const double old_radius = f.domain_radius();
    if (std::isinf(old_radius)) {
        Germ out(f.dim_in(), f.dim_out(), f.base(), f.base_image(),
                 [f](std::span<const ScalePoint> x) { return f.eval(x); }, new_radius, f.meta());
        out.set_ratio_profile(f.ratio_profile());
        return out;
    }
    const double log_old = std::log(old_radius);
    const int dim_out = f.dim_out();
    Germ out(
        f.dim_in(), f.dim_out(), f.base(), f.base_image(),
        [f, log_old, dim_out](std::span<const ScalePoint> x) -> SpVec {
            const ScalePoint mag = sp_norm(x);
            if (mag.sign != 0 && mag.logmag >= log_old)
                return SpVec(static_cast<std::size_t>(dim_out));  // constant image outside
            return f.eval(x);
        },
        new_radius, f.meta());
    if (f.ratio_profile()) {
        auto p = f.ratio_profile();
        out.set_ratio_profile([p, log_old](int sign, double lm) -> double {
            if (lm >= log_old) return 0.0;
            return p(sign, lm);
        });
    }
    return out;
}

Germ restrict_radius(const Germ& f, double radius) {
    Germ out(f.dim_in(), f.dim_out(), f.base(), f.base_image(),
             [f](std::span<const ScalePoint> x) { return f.eval(x); },
             std::min(radius, f.domain_radius()), f.meta());
    out.set_ratio_profile(f.ratio_profile());
    return out;
}

Germ homog_translate(const Germ& h, std::vector<double> a, std::vector<double> a_image) {
    for (double c : h.base())
        if (c != 0.0) throw std::invalid_argument("homog_translate: germ must be based at 0");
    for (double c : h.base_image())
        if (c != 0.0) throw std::invalid_argument("homog_translate: germ image base must be 0");
    Germ out(h.dim_in(), h.dim_out(), std::move(a), std::move(a_image),
             [h](std::span<const ScalePoint> x) { return h.eval(x); }, h.domain_radius(),
             h.meta());
    out.set_ratio_profile(h.ratio_profile());
    return out;
}

Germ make_scalar_germ(std::string label, std::function<ScalePoint(ScalePoint)> fn,
                      double domain_radius, GermMeta meta) {
    meta.label = std::move(label);
    return Germ(
        1, 1, {0.0}, {0.0},
        [fn = std::move(fn)](std::span<const ScalePoint> x) { return SpVec{fn(x[0])}; },
        domain_radius, std::move(meta));
}

Germ make_ratio_germ(std::string label, std::function<double(int, double)> ratio,
                     double domain_radius, GermMeta meta) {
    meta.label = std::move(label);
    Germ out(
        1, 1, {0.0}, {0.0},
        [ratio](std::span<const ScalePoint> x) -> SpVec {
            const ScalePoint p = x[0];
            if (p.sign == 0) return SpVec{ScalePoint::zero()};
            return SpVec{sp_mul(p, ScalePoint::from_double(ratio(p.sign, p.logmag)))};
        },
        domain_radius, std::move(meta));
    out.set_ratio_profile(std::move(ratio));
    return out;
}

}  // namespace metjet
