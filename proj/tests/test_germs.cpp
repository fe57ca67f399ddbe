#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "metjet/gallery.hpp"
#include "metjet/germ.hpp"
#include "metjet/rng.hpp"
#include "metjet/shell_schedule.hpp"

using namespace metjet;

namespace {

std::vector<ScalePoint> probe_points(int count, double lo_logmag, double hi_logmag) {
    SplitMix64 rng(0xbeef);
    std::vector<ScalePoint> pts;
    for (int i = 0; i < count; ++i)
        pts.push_back(ScalePoint{rng.coin_sign(), rng.uniform(lo_logmag, hi_logmag)});
    return pts;
}

}  // namespace

TEST_CASE("compose identity law") {
    const Germ id = make_named("jet_translation:a=0,b=0");
    const Germ v = make_named("abs");
    const Germ c = compose(id, v);
    for (const auto& x : probe_points(100, -50.0, 0.0))
        CHECK(c.eval1(x) == v.eval1(x));
}

TEST_CASE("compose linear maps multiplies factors") {
    const Germ c = compose(scaling_germ(2.0), scaling_germ(3.0));
    for (const auto& x : probe_points(100, -700.0, 0.0)) {
        const ScalePoint y = c.eval1(x);
        CHECK(y.sign == x.sign);
        CHECK(y.logmag == doctest::Approx(x.logmag + std::log(6.0)).epsilon(1e-14));
    }
}

TEST_CASE("abs composed with abs is abs") {
    const Germ v = make_named("abs");
    const Germ c = compose(v, v);
    for (const auto& x : probe_points(200, -100.0, 0.0)) {
        const ScalePoint got = c.eval1(x);
        const ScalePoint want = sp_abs(x);  // pointwise oracle ||x|| = |x|
        CHECK(got == want);
    }
}

TEST_CASE("compose is associative on samples") {
    const Germ f = make_named("fractal_wave");
    const Germ g = make_named("abs");
    const Germ h = scaling_germ(2.0);
    const Germ left = compose(compose(h, g), f);
    const Germ right = compose(h, compose(g, f));
    for (const auto& x : probe_points(200, -40.0, 0.0)) {
        const double a = left.eval1(x).to_double();
        const double b = right.eval1(x).to_double();
        CHECK(a == doctest::Approx(b).epsilon(1e-12));
    }
}

TEST_CASE("compose rejects mismatched pointing") {
    const Germ at1 = homog_translate(make_named("abs"), {1.0}, {0.0});
    CHECK_THROWS_AS(compose(make_named("abs"), at1), std::invalid_argument);
}

TEST_CASE("compose shrinks the domain via the lipschitz bound") {
    Germ inner = make_named("abs");  // lipschitz bound 1
    inner.meta().lipschitz_bound = 2.0;
    const Germ outer = make_named("uncanny");  // domain radius 1
    const Germ c = compose(outer, inner);
    CHECK(c.domain_radius() == doctest::Approx(0.5));

    Germ nobound = make_ratio_germ("halfspeed", [](int, double) { return 0.5; });
    nobound.meta().lipschitz_bound.reset();
    const Germ c2 = compose(outer, nobound);
    // sampled gain is 0.5, doubled for safety: radius 1 / 1.0
    CHECK(c2.domain_radius() == doctest::Approx(1.0).epsilon(0.2));
}

TEST_CASE("translate_to_zero relabels without touching eval") {
    const Germ theta = make_named("jet_translation:a=2,b=5");
    const Germ t = translate_to_zero(theta);
    CHECK(t.base() == std::vector<double>{0.0});
    CHECK(t.base_image() == std::vector<double>{0.0});
    for (const auto& x : probe_points(50, -700.0, 0.0)) CHECK(t.eval1(x) == x);

    const Germ already = make_named("abs");
    const Germ again = translate_to_zero(already);
    for (const auto& x : probe_points(50, -100.0, 0.0))
        CHECK(again.eval1(x) == already.eval1(x));
}

TEST_CASE("homog_translate and translate_to_zero invert each other") {
    const Germ v = make_named("abs");
    const Germ moved = homog_translate(v, {1.0}, {0.0});
    CHECK(moved.base() == std::vector<double>{1.0});
    const Germ back = translate_to_zero(moved);
    for (const auto& x : probe_points(100, -200.0, 0.0)) CHECK(back.eval1(x) == v.eval1(x));

    CHECK_THROWS_AS(homog_translate(moved, {2.0}, {0.0}), std::invalid_argument);
}

TEST_CASE("homog_translate of the zero germ is the constant-image germ") {
    const Germ z = make_named("zero");
    const Germ moved = homog_translate(z, {3.0}, {4.0});
    CHECK(moved.base_image() == std::vector<double>{4.0});
    for (const auto& x : probe_points(50, -50.0, 0.0)) CHECK(moved.eval1(x).is_zero());
}

TEST_CASE("stretch keeps the inside bit-exact and zeroes the outside") {
    const Germ ins = make_named("uncanny");
    const Germ ext = stretch(ins, Germ::kUnboundedRadius);
    for (const auto& x : probe_points(200, -300.0, -1e-9)) CHECK(ext.eval1(x) == ins.eval1(x));
    CHECK(ext.eval1(ScalePoint{1, 0.5}).is_zero());
    CHECK(ext.eval1(ScalePoint{-1, 2.0}).is_zero());

    const Germ back = restrict_radius(ext, 1.0);
    for (const auto& x : probe_points(200, -300.0, -1e-9)) CHECK(back.eval1(x) == ins.eval1(x));
    CHECK(back.domain_radius() == 1.0);
}

TEST_CASE("germ constructor validation") {
    CHECK_THROWS_AS(Germ(1, 1, {0.0, 0.0}, {0.0},
                         [](std::span<const ScalePoint>) { return SpVec{ScalePoint::zero()}; }),
                    std::invalid_argument);
    CHECK_THROWS_AS(Germ(1, 1, {0.0}, {0.0},
                         [](std::span<const ScalePoint>) { return SpVec{ScalePoint::zero()}; },
                         0.0),
                    std::invalid_argument);
}
