#include "metjet/optimality.hpp"

#include <cmath>
#include <stdexcept>

#include "metjet/gallery.hpp"
#include "metjet/rng.hpp"

namespace metjet {

namespace {

constexpr double kTolPos = 1e-6;
constexpr double kRCheck = 1e-3;

// Germ of a smooth scalar function at base t != 0: direct evaluation at
// ordinary displacement scales, two-term Taylor in ScalePoint arithmetic
// once |u| drops far below |t| (where the direct subtraction would
// cancel to zero).
Germ smooth_point_germ(const std::string& label, double t, const std::function<double(double)>& f,
                       const std::function<double(double)>& f1,
                       const std::function<double(double)>& f2) {
    const double ft = f(t);
    const double d1 = f1(t);
    const double d2 = f2(t);
    const double taylor_below = std::log(std::fabs(t)) - 11.5;  // |u| <= 1e-5 |t|
    return Germ(
        1, 1, {t}, {ft},
        [t, ft, d1, d2, taylor_below, f](std::span<const ScalePoint> x) -> SpVec {
            const ScalePoint u = x[0];
            if (u.sign == 0) return SpVec{ScalePoint::zero()};
            if (u.logmag <= taylor_below) {
                const ScalePoint lin = sp_scale(u, d1);
                const ScalePoint quad = sp_scale(sp_mul(u, u), 0.5 * d2);
                return SpVec{sp_add(lin, quad)};
            }
            return SpVec{ScalePoint::from_double(f(t + u.to_double()) - ft)};
        },
        Germ::kUnboundedRadius, GermMeta{.label = label + "@point"});
}

}  // namespace

SegmentFamily family_fractal_wave() {
    auto xi = [](double x) { return x == 0.0 ? 0.0 : x * std::sin(std::log(std::fabs(x))); };
    auto xi1 = [](double x) {
        const double l = std::log(std::fabs(x));
        return std::sin(l) + std::cos(l);
    };
    auto xi2 = [](double x) {
        const double l = std::log(std::fabs(x));
        return (std::cos(l) - std::sin(l)) / x;
    };
    return SegmentFamily{
        "fractal_wave", xi,
        [xi, xi1, xi2](double t) {
            if (t == 0.0) return make_named("fractal_wave");
            return smooth_point_germ("fractal_wave", t, xi, xi1, xi2);
        }};
}

SegmentFamily family_abs() {
    return SegmentFamily{
        "abs", [](double x) { return std::fabs(x); },
        [](double t) {
            if (t == 0.0) return make_named("abs");
            const double sgn = t > 0.0 ? 1.0 : -1.0;
            const double log_t = std::log(std::fabs(t));
            return Germ(
                1, 1, {t}, {std::fabs(t)},
                [sgn, log_t, t](std::span<const ScalePoint> x) -> SpVec {
                    const ScalePoint u = x[0];
                    if (u.sign == 0) return SpVec{ScalePoint::zero()};
                    if (u.logmag < log_t) return SpVec{sp_scale(u, sgn)};  // same side of the kink
                    return SpVec{ScalePoint::from_double(std::fabs(t + u.to_double()) -
                                                         std::fabs(t))};
                },
                Germ::kUnboundedRadius, GermMeta{.label = "abs@point"});
        }};
}

SegmentFamily family_scaling(double lambda) {
    return SegmentFamily{
        "scaling", [lambda](double x) { return lambda * x; },
        [lambda](double t) {
            Germ g = scaling_germ(lambda);
            return homog_translate(g, {t}, {lambda * t});
        }};
}

SegmentCheck mean_value_check(const SegmentFamily& f, double a, double b, const ValuedMonoid& m,
                              int grid, const ContactOptions& opt) {
    if (grid < 8) throw std::invalid_argument("mean_value_check: grid must be >= 8");
    SegmentCheck chk;
    chk.a = a;
    chk.b = b;
    chk.samples = grid;
    for (int i = 1; i <= grid; ++i) {
        const double t = a + (b - a) * static_cast<double>(i) / (grid + 1);
        const ContactResult cr = extract_contact(f.germ_at(t), m, {}, opt);
        if (cr.verdict != ContactVerdict::found) {
            ++chk.skipped;
            continue;
        }
        chk.k_used = std::max(chk.k_used, hom_norm(*cr.contact, m));
    }
    if (chk.skipped > grid / 4)
        throw std::domain_error(
            "mean_value_check: contact extraction failed on more than a quarter of the grid");
    chk.lhs = std::fabs(f.value(b) - f.value(a));
    chk.rhs = chk.k_used * std::fabs(b - a);
    chk.holds = chk.lhs <= chk.rhs + 1e-12;
    return chk;
}

ContactMinReport contact_min_check(const Germ& f, const ValuedMonoid& m, int n_points,
                                   const ContactOptions& opt) {
    if (f.dim_out() != 1)
        throw std::invalid_argument("contact_min_check: scalar-valued germs only");
    const ContactResult cr = extract_contact(f, m, {}, opt);
    if (cr.verdict != ContactVerdict::found)
        throw std::domain_error("contact_min_check: contact not found");
    const Germ& h = *cr.contact;

    const bool annulus = m.kind() == ValuedMonoid::Kind::PowersOfK;
    const double log_k = annulus ? std::log(m.k()) : 0.0;
    ContactMinReport rep;
    bool first = true;
    const int count = annulus ? n_points : 1;
    for (int i = 0; i < count; ++i) {
        const double lm = annulus ? log_k * (i + 0.5) / n_points : 0.0;
        for (int sign : {1, -1}) {
            const double v = h.eval1(ScalePoint{sign, lm}).to_double();
            if (first || v < rep.min_value) {
                rep.min_value = v;
                rep.min_at_logmag = lm;
                rep.min_at_sign = sign;
                first = false;
            }
        }
    }
    rep.necessary_condition_holds = rep.min_value >= -1e-12;
    return rep;
}

const char* to_string(StrictMinVerdict v) {
    switch (v) {
        case StrictMinVerdict::certified_strict_min: return "certified_strict_min";
        case StrictMinVerdict::hypothesis_fails: return "hypothesis_fails";
        default: return "inconclusive";
    }
}

StrictMinReport strict_min_certifier(const Germ& f, int probe, const ContactOptions& opt) {
    if (f.dim_out() != 1)
        throw std::invalid_argument("strict_min_certifier: scalar-valued germs only");
    StrictMinReport rep;
    const ContactResult cr = extract_contact(f, ValuedMonoid::nonneg_reals(), {}, opt);
    if (cr.verdict != ContactVerdict::found) {
        rep.verdict = StrictMinVerdict::hypothesis_fails;
        rep.reason = "contact not found";
        return rep;
    }
    rep.contact_found = true;
    const Germ& h = *cr.contact;

    bool first = true;
    if (f.dim_in() == 1) {
        for (int sign : {1, -1}) {
            const double v = h.eval1(ScalePoint{sign, 0.0}).to_double();
            if (first || v < rep.sphere_min) rep.sphere_min = v;
            first = false;
        }
    } else {
        for (const auto& u : shell_points_nd(
                 ShellSchedule{ScalePoint::one(), 0.5, 1, probe, 0xdeed}, 0, f.dim_in())) {
            // normalize the sample to the unit sphere
            const ScalePoint n = sp_norm(u);
            SpVec unit(u.size());
            for (std::size_t c = 0; c < u.size(); ++c)
                unit[c] = u[c].sign == 0 ? ScalePoint::zero()
                                         : ScalePoint{u[c].sign, u[c].logmag - n.logmag};
            const double v = h.eval(unit)[0].to_double();
            if (first || v < rep.sphere_min) rep.sphere_min = v;
            first = false;
        }
    }

    if (rep.sphere_min <= 0.0) {
        rep.verdict = StrictMinVerdict::hypothesis_fails;
        rep.reason = "contact takes a nonpositive value on the sphere";
        return rep;
    }
    if (rep.sphere_min <= kTolPos) {
        rep.verdict = StrictMinVerdict::inconclusive;
        rep.reason = "sphere minimum below the positivity tolerance";
        return rep;
    }

    // empirical local validation: f(a + x) > f(a) on random small x
    SplitMix64 rng(0x57121c7);
    rep.empirical_ok = true;
    for (int i = 0; i < 1000; ++i) {
        SpVec x(static_cast<std::size_t>(f.dim_in()));
        for (auto& c : x) {
            const double v = rng.uniform(-kRCheck, kRCheck);
            c = ScalePoint::from_double(v == 0.0 ? kRCheck * 0.5 : v);
        }
        const double diff = f.eval(x)[0].to_double();
        rep.empirical_ok = rep.empirical_ok && diff > 0.0;
    }
    rep.verdict = rep.empirical_ok ? StrictMinVerdict::certified_strict_min
                                   : StrictMinVerdict::inconclusive;
    if (!rep.empirical_ok) rep.reason = "sphere minimum positive but local probe found f <= f(a)";
    return rep;
}

}  // namespace metjet
