#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "metjet/gallery.hpp"
#include "metjet/jet_metrics.hpp"
#include "oracles.hpp"

using namespace metjet;

namespace {

ShellSchedule quick_schedule() {
    ShellSchedule s;
    s.shells = 60;
    s.samples_per_shell = 128;
    return s;
}

ShellSchedule wave_schedule(int spp = 4096) {
    ShellSchedule s;
    s.ratio = std::exp(-2.0 * 3.141592653589793);
    s.shells = 16;
    s.samples_per_shell = spp;
    return s;
}

}  // namespace

TEST_CASE("distance from abs to zero is 1 on every shell") {
    const Germ v = make_named("abs");
    const auto est = quasi_distance(v, zero_like(v), quick_schedule());
    CHECK(est.estimate == 1.0);
    CHECK(est.converged);
    for (double m : est.per_shell_sup) CHECK(m == 1.0);
    for (const auto& sh : est.shells) CHECK(sh.value == 1.0);
}

TEST_CASE("self distance vanishes") {
    const Germ f = make_named("fractal_wave");
    const auto est = quasi_distance(f, f, quick_schedule());
    CHECK(est.estimate == 0.0);
    CHECK(est.converged);
}

TEST_CASE("distance checks pointing data") {
    const Germ v = make_named("abs");
    const Germ moved = homog_translate(make_named("abs"), {1.0}, {0.0});
    CHECK_THROWS_AS(quasi_distance(v, moved, quick_schedule()), std::invalid_argument);

    const Germ ins = make_named("uncanny");
    ShellSchedule s = quick_schedule();
    s.r0 = ScalePoint::from_double(2.0);
    CHECK_THROWS_AS(quasi_distance(ins, zero_like(ins), s), std::domain_error);
}

TEST_CASE("cumulative sups never increase inward") {
    for (const char* name : {"abs", "giseh", "fractal_wave", "f2"}) {
        const Germ f = make_named(name);
        const auto est = quasi_distance(f, zero_like(f), quick_schedule());
        for (std::size_t j = 1; j < est.shells.size(); ++j)
            CHECK(est.shells[j].value <= est.shells[j - 1].value);
    }
}

TEST_CASE("triangle bound with shared samples") {
    const ShellSchedule s = quick_schedule();
    const Germ f = make_named("abs");
    const Germ g = make_named("fractal_wave");
    const Germ h = make_named("giseh");
    const double fh = quasi_distance(f, h, s).estimate;
    const double fg = quasi_distance(f, g, s).estimate;
    const double gh = quasi_distance(g, h, s).estimate;
    CHECK(fh <= fg + gh + 1e-9);
}

TEST_CASE("tangency verdicts") {
    const Germ f2 = make_named("f2");
    CHECK(tangency_test(f2, zero_like(f2), quick_schedule()) == TangencyVerdict::tangent);

    const Germ xi = make_named("fractal_wave");
    CHECK(tangency_test(xi, zero_like(xi), wave_schedule(512)) == TangencyVerdict::not_tangent);

    CHECK(tangency_test(xi, xi, quick_schedule()) == TangencyVerdict::tangent);
}

TEST_CASE("lipschitz ratio of abs and giseh is exactly 1") {
    CHECK(lipschitz_ratio(make_named("abs"), quick_schedule()).estimate ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(lipschitz_ratio(make_named("giseh"), quick_schedule()).estimate ==
          doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("lipschitz ratio of the wave reaches sqrt(2)") {
    // calculus oracle: the slope field of x sin(log|x|) is
    // sin(t) + cos(t) in log phase, whose sup over a period is sqrt(2)
    const double oracle =
        oracles::grid_sup([](double t) { return std::sin(t) + std::cos(t); }, 0.0,
                          6.283185307179586, 2000000);
    CHECK(oracle == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    const double measured = lipschitz_ratio(make_named("fractal_wave"), wave_schedule()).estimate;
    CHECK(measured == doctest::Approx(oracle).epsilon(1e-3));
    CHECK(measured <= oracle + 1e-9);
}

TEST_CASE("jet summaries reproduce the model verdicts") {
    const JetSummary abs_sum = jet_summary(make_named("abs"), quick_schedule());
    CHECK(abs_sum.norm_to_zero.estimate == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(abs_sum.rho.estimate == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(abs_sum.good_jet == GoodJetVerdict::good);
    CHECK(abs_sum.rho_is_jet_ratio);

    const JetSummary wave_sum = jet_summary(make_named("fractal_wave"), wave_schedule());
    CHECK(wave_sum.norm_to_zero.estimate == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(wave_sum.rho.estimate == doctest::Approx(std::sqrt(2.0)).epsilon(1e-3));
    CHECK(wave_sum.good_jet == GoodJetVerdict::not_good);

    const JetSummary giseh_sum = jet_summary(make_named("giseh"), quick_schedule());
    CHECK(giseh_sum.norm_to_zero.estimate == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(giseh_sum.good_jet == GoodJetVerdict::good);

    const JetSummary zero_sum = jet_summary(make_named("zero"), quick_schedule());
    CHECK(zero_sum.norm_to_zero.estimate == 0.0);
    CHECK(zero_sum.rho.estimate == 0.0);
    CHECK(zero_sum.good_jet == GoodJetVerdict::good);
}

TEST_CASE("norm never exceeds the ratio estimate") {
    for (const char* name : {"zero", "abs", "giseh", "fractal_wave", "scaled_wave:r=pi"}) {
        const JetSummary s = jet_summary(make_named(name), quick_schedule());
        CHECK(s.norm_to_zero.estimate <= s.rho.estimate + 1e-9);
    }
}

TEST_CASE("translating both germs to zero leaves every shell untouched") {
    const ShellSchedule s = quick_schedule();
    const Germ f = homog_translate(make_named("fractal_wave"), {2.0}, {1.0});
    const Germ g = homog_translate(make_named("abs"), {2.0}, {1.0});
    const auto before = quasi_distance(f, g, s);
    const auto after = quasi_distance(translate_to_zero(f), translate_to_zero(g), s);
    REQUIRE(before.shells.size() == after.shells.size());
    for (std::size_t j = 0; j < before.shells.size(); ++j)
        CHECK(before.shells[j].value == after.shells[j].value);
    CHECK(before.estimate == after.estimate);
}

TEST_CASE("stretching does not move the distance at matching schedules") {
    ShellSchedule s = quick_schedule();
    s.r0 = ScalePoint{1, -0.25};
    const Germ ins = make_named("uncanny");
    const Germ ext = stretch(ins, Germ::kUnboundedRadius);
    const auto before = quasi_distance(ins, zero_like(ins), s);
    const auto after = quasi_distance(ext, zero_like(ext), s);
    for (std::size_t j = 0; j < before.shells.size(); ++j)
        CHECK(before.shells[j].value == after.shells[j].value);
}

TEST_CASE("ratio estimates are submultiplicative on sampled pairs") {
    const ShellSchedule s = wave_schedule(1024);
    const Germ m2 = scaling_germ(2.0);
    const Germ xi = make_named("fractal_wave");
    const double lhs = lipschitz_ratio(compose(m2, xi), s).estimate;
    const double rhs = lipschitz_ratio(m2, s).estimate * lipschitz_ratio(xi, s).estimate;
    CHECK(lhs <= rhs + 1e-6);
}

TEST_CASE("shell trace CSV shape and determinism") {
    const Germ v = make_named("abs");
    ShellSchedule s = quick_schedule();
    s.shells = 5;
    const auto est = quasi_distance(v, zero_like(v), s);
    const std::string csv = est.to_csv();
    CHECK(csv.rfind("shell_index,log_radius,value\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
    CHECK(csv == quasi_distance(v, zero_like(v), s).to_csv());
}
