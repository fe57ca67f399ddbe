#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "metjet/contact.hpp"
#include "metjet/gallery.hpp"
#include "metjet/homogeneity.hpp"
#include "metjet/rng.hpp"
#include "metjet/valued_monoid.hpp"
#include "oracles.hpp"

using namespace metjet;

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

ShellSchedule quick_schedule(int shells = 24, int spp = 128) {
    ShellSchedule s;
    s.shells = shells;
    s.samples_per_shell = spp;
    return s;
}
}  // namespace

TEST_CASE("valued monoid basics") {
    CHECK(ValuedMonoid::parse("R").kind() == ValuedMonoid::Kind::Reals);
    CHECK(ValuedMonoid::parse("R+").kind() == ValuedMonoid::Kind::NonnegReals);
    CHECK(ValuedMonoid::parse("Nk:0.25").k() == 0.25);
    CHECK_THROWS_AS(ValuedMonoid::parse("Q"), std::invalid_argument);
    CHECK_THROWS_AS(ValuedMonoid::parse("Nk:1.5"), std::invalid_argument);
    CHECK_THROWS_AS(ValuedMonoid::powers_of(0.0), std::invalid_argument);

    // valuation: v(0) = 0, multiplicative, and some v(t) in (0,1)
    SplitMix64 rng(1);
    const ValuedMonoid r = ValuedMonoid::reals();
    CHECK(r.valuation(0.0) == 0.0);
    for (int i = 0; i < 500; ++i) {
        const double s = rng.uniform(-3.0, 3.0), t = rng.uniform(-3.0, 3.0);
        CHECK(r.valuation(s * t) ==
              doctest::Approx(r.valuation(s) * r.valuation(t)).epsilon(1e-12));
    }
    const ValuedMonoid nk = ValuedMonoid::powers_of(0.3);
    CHECK(nk.valuation(0.3) > 0.0);
    CHECK(nk.valuation(0.3) < 1.0);
    CHECK(ValuedMonoid::parse(nk.to_string()).k() == nk.k());
}

TEST_CASE("homogeneity verdicts on the gallery") {
    const auto giseh_rep = homogeneity_test(make_named("giseh"),
                                            ValuedMonoid::powers_of(1.0 / 3.0), quick_schedule());
    CHECK(giseh_rep.verdict == HomogeneityVerdict::homogeneous);
    CHECK(giseh_rep.max_defect <= 1e-12);

    CHECK(homogeneity_test(make_named("fractal_wave"), ValuedMonoid::nonneg_reals(),
                           quick_schedule())
              .verdict == HomogeneityVerdict::not_homogeneous);

    CHECK(homogeneity_test(make_named("abs"), ValuedMonoid::nonneg_reals(), quick_schedule())
              .verdict == HomogeneityVerdict::homogeneous);
    CHECK(homogeneity_test(make_named("abs"), ValuedMonoid::reals(), quick_schedule()).verdict ==
          HomogeneityVerdict::homogeneous);

    // positive homogeneity implies every fractal ratio
    for (double k : {0.3, 0.7})
        CHECK(homogeneity_test(make_named("abs"), ValuedMonoid::powers_of(k), quick_schedule())
                  .verdict == HomogeneityVerdict::homogeneous);
}

TEST_CASE("hom_norm on the gallery") {
    CHECK(hom_norm(make_named("abs"), ValuedMonoid::nonneg_reals()) == 1.0);

    // annulus grid oracle at one million points: the sup of g(x)/|x| over
    // (1/3, 1] with both signs is 1, reached on the negative side
    double oracle = 0.0;
    for (int i = 0; i < 1000000; ++i) {
        const double lm = std::log(1.0 / 3.0) * (i + 0.5) / 1000000.0;
        const double x = std::exp(lm);
        oracle = std::max(oracle, oracles::kinf_dist_brute(x, 14) / x);
        oracle = std::max(oracle, x / x);  // negative side: distance is |x|
    }
    CHECK(oracle == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(hom_norm(make_named("giseh"), ValuedMonoid::powers_of(1.0 / 3.0)) ==
          doctest::Approx(oracle).epsilon(1e-6));
}

TEST_CASE("hom_norm recovers operator norms of matrices") {
    const Germ one_d = scaling_germ(-3.0);
    CHECK(hom_norm(one_d, ValuedMonoid::nonneg_reals()) == doctest::Approx(3.0).epsilon(1e-9));

    const Germ diag = affine_tangent({0.0, 0.0}, {{3.0, 0.0}, {0.0, 1.0}}, {0.0, 0.0});
    CHECK(hom_norm(diag, ValuedMonoid::nonneg_reals(), 16384) ==
          doctest::Approx(3.0).epsilon(1e-6));
}

TEST_CASE("contact extraction: found cases") {
    const Germ f2 = make_named("f2");
    const auto rf2 = extract_contact(f2, ValuedMonoid::nonneg_reals());
    REQUIRE(rf2.verdict == ContactVerdict::found);
    for (double lm : {0.0, -2.0, -10.0})
        for (int sign : {1, -1})
            CHECK(std::fabs(rf2.contact->eval1(ScalePoint{sign, lm}).to_double()) <=
                  1e-12 * std::exp(lm));

    const Germ g = make_named("giseh");
    const auto rg = extract_contact(g, ValuedMonoid::powers_of(1.0 / 3.0));
    REQUIRE(rg.verdict == ContactVerdict::found);
    SplitMix64 rng(2);
    for (int i = 0; i < 200; ++i) {
        const ScalePoint x{rng.coin_sign(), rng.uniform(-25.0, 0.0)};
        const ScalePoint gap = sp_sub(rg.contact->eval1(x), g.eval1(x));
        CHECK(sp_mag_ratio(sp_abs(gap), sp_abs(x)) <= 1e-12);
    }
}

TEST_CASE("a found contact is homogeneous and tangent to its source") {
    const Germ g = make_named("giseh");
    const ValuedMonoid m = ValuedMonoid::powers_of(1.0 / 3.0);
    const auto res = extract_contact(g, m);
    REQUIRE(res.verdict == ContactVerdict::found);
    CHECK(homogeneity_test(*res.contact, m, quick_schedule(16, 64)).verdict ==
          HomogeneityVerdict::homogeneous);
    CHECK(tangency_test(*res.contact, g, quick_schedule(40, 64)) == TangencyVerdict::tangent);
}

TEST_CASE("contact extraction: refuted and never-found cases") {
    const Germ zeta = make_named("bifractal:a=1,b=sqrt2");
    const auto res = extract_contact(zeta, ValuedMonoid::powers_of(0.5));
    CHECK(res.verdict == ContactVerdict::refuted);
    double osc = 0.0;
    for (const auto& tr : res.traces) osc = std::max(osc, tr.oscillation);
    CHECK(osc > 0.5);

    const auto f1r = extract_contact(make_named("f1"), ValuedMonoid::nonneg_reals());
    CHECK(f1r.verdict != ContactVerdict::found);

    CHECK_THROWS_AS(extract_contact(make_named("abs"), ValuedMonoid::nonneg_reals(),
                                    {SpVec{ScalePoint::from_double(2.0)}}),
                    std::invalid_argument);
    ContactOptions opt;
    opt.n_steps = 4;
    CHECK_THROWS_AS(extract_contact(make_named("abs"), ValuedMonoid::nonneg_reals(), {}, opt),
                    std::invalid_argument);
}

TEST_CASE("neofractal scan") {
    const std::vector<double> grid{0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};

    auto scan = neofractal_scan(make_named("bifractal:a=1,b=sqrt2"), grid);
    CHECK(scan.all_refuted);

    const double kw = std::exp(-kTwoPi);
    auto wave_scan = neofractal_scan(make_named("fractal_wave"), {0.5, kw});
    CHECK_FALSE(wave_scan.all_refuted);
    REQUIRE(wave_scan.by_k[1].second.verdict == ContactVerdict::found);
    const Germ& xi = make_named("fractal_wave");
    SplitMix64 rng(3);
    for (int i = 0; i < 100; ++i) {
        const ScalePoint x{rng.coin_sign(), rng.uniform(-20.0, 0.0)};
        const ScalePoint gap = sp_sub(wave_scan.by_k[1].second.contact->eval1(x), xi.eval1(x));
        CHECK(sp_mag_ratio(sp_abs(gap), sp_abs(x)) <= 1e-10);
    }

    auto zero_scan = neofractal_scan(make_named("zero"), grid);
    for (const auto& [k, res] : zero_scan.by_k) CHECK(res.verdict == ContactVerdict::found);

    CHECK_THROWS_AS(neofractal_scan(make_named("zero"), {}), std::invalid_argument);
}

TEST_CASE("contact composition matches composed contacts") {
    const Germ g = make_named("giseh");
    const Germ m3 = scaling_germ(3.0);
    const Germ composite = compose(m3, g);
    const ValuedMonoid m = ValuedMonoid::powers_of(1.0 / 3.0);
    const auto rc = extract_contact(composite, m);
    const auto rg = extract_contact(g, m);
    REQUIRE(rc.verdict == ContactVerdict::found);
    REQUIRE(rg.verdict == ContactVerdict::found);
    const Germ composed = compose(m3, *rg.contact);
    SplitMix64 rng(4);
    for (int i = 0; i < 200; ++i) {
        const ScalePoint x{rng.coin_sign(), rng.uniform(-15.0, 0.0)};
        const ScalePoint gap = sp_sub(rc.contact->eval1(x), composed.eval1(x));
        CHECK(sp_mag_ratio(sp_abs(gap), sp_abs(x)) <= 1e-8);
    }
}

TEST_CASE("linearity verdicts") {
    const auto affine_rep = linearity_test(scaling_germ(2.5), quick_schedule());
    CHECK(affine_rep.verdict == LinearityVerdict::linear_jet);
    CHECK(affine_rep.additivity.estimate <= 1e-12);
    CHECK(affine_rep.scaling.estimate <= 1e-12);

    // closed-form oracle: at y = -x the additivity defect of |x| is
    // | |x+y| - |x| - |y| | / ||(x,-x)|| = 2|x| / (sqrt(2)|x|) = sqrt(2)
    const auto abs_rep = linearity_test(make_named("abs"), quick_schedule());
    CHECK(abs_rep.verdict == LinearityVerdict::not_linear);
    CHECK(abs_rep.additivity.estimate == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));

    ShellSchedule wave_s;
    wave_s.ratio = std::exp(-kTwoPi);
    wave_s.shells = 12;
    wave_s.samples_per_shell = 256;
    CHECK(linearity_test(make_named("fractal_wave"), wave_s).verdict ==
          LinearityVerdict::not_linear);

    ShellSchedule deep;
    deep.r0 = ScalePoint{1, -1000.0};
    deep.ratio = std::exp(-700.0);
    deep.shells = 4300;
    deep.samples_per_shell = 32;
    CHECK(linearity_test(make_named("uncanny_ext"), deep).verdict ==
          LinearityVerdict::linear_jet);
}

TEST_CASE("band defects obey the derivative envelope") {
    const Germ ins = make_named("uncanny_ext");
    double prev = 1e300;
    for (double band : {1e3, 1e6, 1e9}) {
        const auto d = linearity_band_defects(ins, -band, 256, 99);
        const double v = std::max(d.additivity, d.scaling);
        CHECK(v <= 10.0 / band);
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("consistency cross-check on the three model germs") {
    ShellSchedule s = quick_schedule(80, 128);
    const auto f2_rep = tl_and_contact_consistency(make_named("f2"),
                                                   ValuedMonoid::nonneg_reals(), s);
    CHECK(f2_rep.tl == LinearityVerdict::linear_jet);
    CHECK(f2_rep.contact == ContactVerdict::found);
    CHECK(f2_rep.contact_is_linear);
    CHECK(std::fabs(f2_rep.fitted_matrix[0][0]) <= 1e-8);
    CHECK(f2_rep.consistent);

    ShellSchedule wave_s;
    wave_s.ratio = std::exp(-kTwoPi);
    wave_s.shells = 12;
    wave_s.samples_per_shell = 256;
    const auto wave_rep = tl_and_contact_consistency(
        make_named("fractal_wave"), ValuedMonoid::powers_of(std::exp(-kTwoPi)), wave_s);
    CHECK(wave_rep.tl == LinearityVerdict::not_linear);
    CHECK(wave_rep.contact == ContactVerdict::found);
    CHECK_FALSE(wave_rep.contact_is_linear);
    CHECK(wave_rep.consistent);
}

TEST_CASE("equidistribution checks") {
    const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    const auto g = equidistribution_check(golden, 0.0, 1000);
    CHECK(g.largest_gap < 0.02);
    CHECK(g.distinct_values > 900);

    const auto quarter = equidistribution_check(0.25, 0.0, 1000);
    CHECK(quarter.distinct_values <= 4);

    const auto integral = equidistribution_check(1.0, 0.0, 1000);
    CHECK(integral.largest_gap == 0.0);
    CHECK(integral.distinct_values == 1);
    CHECK(integral.tail_oscillation == 0.0);

    CHECK_THROWS_AS(equidistribution_check(golden, 0.0, 50), std::invalid_argument);
}

TEST_CASE("trace CSV layout") {
    const auto res = extract_contact(make_named("abs"), ValuedMonoid::nonneg_reals());
    const std::string csv = res.trace_csv();
    CHECK(csv.rfind("direction_id,n,log_v_t,quotient_component_0\n", 0) == 0);
    // 2 directions x 400 steps
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 2 * 400);
}
