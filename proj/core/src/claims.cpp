#include "metjet/claims.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>

#include "metjet/cantor.hpp"
#include "metjet/contact.hpp"
#include "metjet/csv.hpp"
#include "metjet/gallery.hpp"
#include "metjet/homogeneity.hpp"
#include "metjet/jet_metrics.hpp"
#include "metjet/optimality.hpp"
#include "metjet/rng.hpp"

namespace metjet {

namespace {

constexpr std::uint64_t kSeed = 0xC1A115;
constexpr double kTwoPi = 6.283185307179586476925286766559;
const double kSqrt2 = std::sqrt(2.0);

ShellSchedule sched_default() {
    ShellSchedule s = ShellSchedule::defaults();
    s.rng_seed = kSeed;
    return s;
}

// Phase-locked to the wave's log-period; dense enough for 1e-6 sups.
ShellSchedule sched_wave(int spp = 30000, int shells = 24) {
    ShellSchedule s;
    s.ratio = std::exp(-kTwoPi);
    s.shells = shells;
    s.samples_per_shell = spp;
    s.rng_seed = kSeed;
    return s;
}

// Deep schedule for the log-log oscillator: 1971 shells of log-width 700
// (the widest a representable ratio allows) put the innermost shell on
// the second deep peak of |sin ln|ln x|| near logmag -1.38e6.
ShellSchedule sched_deep() {
    ShellSchedule s;
    s.ratio = std::exp(-700.0);
    s.shells = 1971;
    s.samples_per_shell = 1024;
    s.rng_seed = kSeed;
    return s;
}

// Deep enough that the additivity/scaling defects of the uncanny germ
// (which decay like 1/|log r|) drop under the linearity tolerance.
ShellSchedule sched_deep_linearity() {
    ShellSchedule s;
    s.r0 = ScalePoint{1, -1000.0};
    s.ratio = std::exp(-700.0);
    s.shells = 4300;
    s.samples_per_shell = 64;
    s.rng_seed = kSeed;
    return s;
}

double indicator(bool ok) { return ok ? 1.0 : 0.0; }

// max relative deviation of the extracted contact from the source germ
// on 64 log-spaced probe points of both signs
double contact_recovery_dev(const std::string& name, const ValuedMonoid& m) {
    const Germ f = make_named(name);
    const ContactResult cr = extract_contact(f, m);
    if (cr.verdict != ContactVerdict::found) return 1.0;
    double dev = 0.0;
    for (int i = 0; i < 64; ++i) {
        const ScalePoint y{i % 2 == 0 ? 1 : -1, -0.1 - 29.9 * i / 63.0};
        const ScalePoint gap = sp_sub(cr.contact->eval1(y), f.eval1(y));
        dev = std::max(dev, sp_mag_ratio(sp_abs(gap), sp_abs(y)));
    }
    return dev;
}

Germ tilted_abs_germ() {
    GermMeta m;
    m.lipschitz_bound = 1.5;
    m.exact_positively_homogeneous = true;
    return make_scalar_germ(
        "tilted_abs", [](ScalePoint x) { return sp_add(sp_abs(x), sp_scale(x, 0.5)); },
        Germ::kUnboundedRadius, m);
}

// brute-force distance oracle: depth-14 endpoints of the Cantor set and
// of its 3x scaling (which between them carry every candidate below 3)
double cantor_endpoint_oracle(double x) {
    if (x <= 0.0) return -x;
    std::vector<double> lo{0.0}, hi{1.0};
    for (int d = 0; d < 14; ++d) {
        std::vector<double> nlo, nhi;
        nlo.reserve(lo.size() * 2);
        nhi.reserve(hi.size() * 2);
        for (std::size_t i = 0; i < lo.size(); ++i) {
            const double len = (hi[i] - lo[i]) / 3.0;
            nlo.push_back(lo[i]);
            nhi.push_back(lo[i] + len);
            nlo.push_back(hi[i] - len);
            nhi.push_back(hi[i]);
        }
        lo = std::move(nlo);
        hi = std::move(nhi);
    }
    double best = x;  // 0 is in the set
    for (std::size_t i = 0; i < lo.size(); ++i) {
        best = std::min(best, std::fabs(x - lo[i]));
        best = std::min(best, std::fabs(x - hi[i]));
        best = std::min(best, std::fabs(x - 3.0 * lo[i]));
        best = std::min(best, std::fabs(x - 3.0 * hi[i]));
    }
    return best;
}

bool glob_match(const std::string& pattern, const std::string& text) {
    if (pattern.empty()) return true;
    // only '*' is special
    std::size_t p = 0, t = 0, star = std::string::npos, mark = 0;
    while (t < text.size()) {
        if (p < pattern.size() && (pattern[p] == text[t])) {
            ++p;
            ++t;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = t;
        } else if (star != std::string::npos) {
            p = star + 1;
            t = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

void add_wave_embedding_claims(std::vector<Claim>& reg) {
    // five fractal waves from the profiles sin(j t), all sharing period
    // 2 pi: pairwise jet distances witness independent jets
    auto wave = [](int j) {
        PeriodicProfile p{kTwoPi, [j](double t) { return std::sin(j * t); },
                          static_cast<double>(j)};
        return periodic_to_fractal(p);
    };
    reg.push_back(Claim{
        "perwave_offdiag_min", "pairwise jet distances of 5 profile waves stay apart",
        "periodic profiles embed as distinct jets", 0.1, 0.0, ClaimMode::at_least, [wave]() {
            ShellSchedule s = sched_wave(4096, 16);
            double mn = 1e300;
            for (int i = 1; i <= 5; ++i)
                for (int j = i + 1; j <= 5; ++j)
                    mn = std::min(mn, quasi_distance(wave(i), wave(j), s).estimate);
            return mn;
        }});
    reg.push_back(Claim{
        "perwave_diag_max", "self-distance of each profile wave vanishes",
        "d(f,f) = 0", 1e-9, 0.0, ClaimMode::at_most, [wave]() {
            ShellSchedule s = sched_wave(4096, 16);
            double mx = 0.0;
            for (int i = 1; i <= 5; ++i)
                mx = std::max(mx, quasi_distance(wave(i), wave(i), s).estimate);
            return mx;
        }});
}

void add_property_claims(std::vector<Claim>& reg) {
    reg.push_back(Claim{
        "prop_qd_monotone", "cumulative shell sups never increase inward",
        "d^r is monotone in r", 1.0, 0.0, ClaimMode::near, []() {
            ShellSchedule s = sched_default();
            s.shells = 60;
            bool ok = true;
            for (const char* name : {"abs", "giseh", "fractal_wave", "f2"}) {
                const Germ f = make_named(name);
                const auto est = quasi_distance(f, zero_like(f), s);
                for (std::size_t j = 1; j < est.shells.size(); ++j)
                    ok = ok && est.shells[j].value <= est.shells[j - 1].value;
            }
            return indicator(ok);
        }});
    reg.push_back(Claim{
        "prop_submult", "slope estimate of a composite never beats the product",
        "rho(g.f) <= rho(g) rho(f)", 1e-6, 0.0, ClaimMode::at_most, []() {
            ShellSchedule s = sched_wave(2048, 12);
            std::vector<Germ> pool;
            pool.push_back(scaling_germ(2.0));
            pool.push_back(scaling_germ(3.0));
            pool.push_back(scaling_germ(0.5));
            pool.push_back(scaling_germ(-1.5));
            pool.push_back(make_named("abs"));
            pool.push_back(make_named("giseh"));
            pool.push_back(make_named("fractal_wave"));
            pool.push_back(make_named("scaled_wave:r=pi"));
            const int pairs[20][2] = {{0, 4}, {4, 0}, {1, 5}, {5, 1}, {0, 1}, {4, 4}, {4, 5},
                                      {5, 4}, {2, 6}, {6, 2}, {0, 6}, {6, 0}, {5, 5}, {0, 7},
                                      {7, 0}, {4, 7}, {3, 4}, {1, 4}, {6, 6}, {4, 6}};
            double worst = -1e300;
            for (const auto& pr : pairs) {
                const Germ& outer = pool[static_cast<std::size_t>(pr[0])];
                const Germ& inner = pool[static_cast<std::size_t>(pr[1])];
                const double lhs = lipschitz_ratio(compose(outer, inner), s).estimate;
                const double rhs =
                    lipschitz_ratio(outer, s).estimate * lipschitz_ratio(inner, s).estimate;
                worst = std::max(worst, lhs - rhs);
            }
            return std::max(worst, 0.0);
        }});
    reg.push_back(Claim{
        "prop_sigma_uniqueness", "tangent homogeneous germs agree pointwise",
        "homogeneous tangency forces equality", 1e-9, 0.0, ClaimMode::at_most, []() {
            double dev = 0.0;
            // giseh vs its own extracted contact
            const Germ g = make_named("giseh");
            const auto cg = extract_contact(g, ValuedMonoid::powers_of(1.0 / 3.0));
            // fractal wave vs the sine-profile wave
            const Germ xi = make_named("fractal_wave");
            const Germ xi2 = periodic_to_fractal(
                PeriodicProfile{kTwoPi, [](double t) { return std::sin(t); }, 1.0});
            ShellSchedule s = sched_default();
            s.shells = 40;
            s.samples_per_shell = 64;
            for (int j = 0; j < s.shells; ++j) {
                for (const auto& xv : shell_points_nd(s, j, 1)) {
                    const ScalePoint x = xv[0];
                    if (cg.verdict == ContactVerdict::found) {
                        const ScalePoint d1 = sp_sub(cg.contact->eval1(x), g.eval1(x));
                        dev = std::max(dev, sp_mag_ratio(sp_abs(d1), sp_abs(x)));
                    } else {
                        dev = 1.0;
                    }
                    const ScalePoint d2 = sp_sub(xi.eval1(x), xi2.eval1(x));
                    dev = std::max(dev, sp_mag_ratio(sp_abs(d2), sp_abs(x)));
                }
            }
            return dev;
        }});
    reg.push_back(Claim{
        "prop_omega_isometry", "quasi-distance is untouched by translating both germs to 0",
        "translation to 0 is an isometry", 1.0, 0.0, ClaimMode::near, []() {
            ShellSchedule s = sched_default();
            s.shells = 50;
            const Germ f = homog_translate(make_named("abs"), {1.0}, {0.5});
            const Germ g = homog_translate(make_named("fractal_wave"), {1.0}, {0.5});
            const auto before = quasi_distance(f, g, s);
            const auto after = quasi_distance(translate_to_zero(f), translate_to_zero(g), s);
            bool same = before.shells.size() == after.shells.size();
            for (std::size_t j = 0; same && j < before.shells.size(); ++j)
                same = before.shells[j].value == after.shells[j].value;
            return indicator(same && before.estimate == after.estimate);
        }});
    reg.push_back(Claim{
        "prop_gamma_isometry", "stretching past the domain never moves the jet distance",
        "stretching is an isometry", 1.0, 0.0, ClaimMode::near, []() {
            ShellSchedule s = sched_default();
            s.r0 = ScalePoint{1, -0.5};
            s.shells = 50;
            const Germ f = make_named("uncanny");
            const Germ fx = stretch(f, Germ::kUnboundedRadius);
            const auto before = quasi_distance(f, zero_like(f), s);
            const auto after = quasi_distance(fx, zero_like(fx), s);
            bool same = before.shells.size() == after.shells.size();
            for (std::size_t j = 0; same && j < before.shells.size(); ++j)
                same = before.shells[j].value == after.shells[j].value;
            return indicator(same && before.estimate == after.estimate);
        }});
    reg.push_back(Claim{
        "prop_cantor_oracle", "recursive distance matches brute-force endpoints at depth 12",
        "self-similar distance recursion is exact", std::pow(3.0, -12.0), 0.0,
        ClaimMode::at_most, []() {
            SplitMix64 rng(substream(kSeed, 0xca2702));
            double dev = 0.0;
            for (int i = 0; i < 1000; ++i) {
                const double x = rng.uniform(-2.0, 2.0);
                dev = std::max(dev, std::fabs(dist_kinf(x, 12) - cantor_endpoint_oracle(x)));
            }
            return dev;
        }});
}

std::vector<Claim> build_registry() {
    std::vector<Claim> reg;

    // --- absolute value: the model good jet -------------------------------
    reg.push_back(Claim{"good_jet_abs_norm", "jet norm of |x| is exactly 1",
                        "norm of the absolute-value jet", 1.0, 1e-9, ClaimMode::near, []() {
                            return jet_summary(make_named("abs"), sched_default()).norm_to_zero.estimate;
                        }});
    reg.push_back(Claim{"good_jet_abs_rho", "slope ratio of |x| is exactly 1",
                        "lipschitz ratio of |x|", 1.0, 1e-9, ClaimMode::near, []() {
                            return jet_summary(make_named("abs"), sched_default()).rho.estimate;
                        }});
    reg.push_back(Claim{"good_jet_abs_verdict", "|x| is recognized as a good jet",
                        "norm equals ratio for |x|", 1.0, 0.0, ClaimMode::near, []() {
                            return indicator(jet_summary(make_named("abs"), sched_default())
                                                 .good_jet == GoodJetVerdict::good);
                        }});

    // --- fractal wave: norm 1, ratio sqrt(2), not good ---------------------
    reg.push_back(Claim{"fractal_wave_norm", "jet norm of the fractal wave is 1",
                        "norm of x sin log|x|", 1.0, 1e-6, ClaimMode::near, []() {
                            return jet_summary(make_named("fractal_wave"), sched_wave())
                                .norm_to_zero.estimate;
                        }});
    reg.push_back(Claim{"fractal_wave_rho", "slope ratio of the fractal wave is sqrt(2)",
                        "ratio of x sin log|x|", kSqrt2, 1e-3, ClaimMode::near, []() {
                            return jet_summary(make_named("fractal_wave"), sched_wave()).rho.estimate;
                        }});
    reg.push_back(Claim{"fractal_wave_not_good", "norm < ratio: the wave jet is not good",
                        "a jet with norm strictly under its ratio", 1.0, 0.0, ClaimMode::near,
                        []() {
                            return indicator(jet_summary(make_named("fractal_wave"), sched_wave())
                                                 .good_jet == GoodJetVerdict::not_good);
                        }});

    // --- giseh: good jet with norm 1, exact 1/3-fractality ------------------
    reg.push_back(Claim{"giseh_norm", "jet norm of the Cantor-distance germ is 1",
                        "norm of d(x, K_inf)", 1.0, 1e-6, ClaimMode::near, []() {
                            return jet_summary(make_named("giseh"), sched_default())
                                .norm_to_zero.estimate;
                        }});
    reg.push_back(Claim{"giseh_rho", "slope ratio of the Cantor-distance germ is 1",
                        "distance functions are 1-lipschitz", 1.0, 1e-6, ClaimMode::near, []() {
                            return jet_summary(make_named("giseh"), sched_default()).rho.estimate;
                        }});
    reg.push_back(Claim{"giseh_good", "the Cantor-distance germ is a good jet",
                        "norm equals ratio for the distance germ", 1.0, 0.0, ClaimMode::near,
                        []() {
                            return indicator(jet_summary(make_named("giseh"), sched_default())
                                                 .good_jet == GoodJetVerdict::good);
                        }});
    reg.push_back(Claim{"giseh_fractal_identity", "g(x/3) = g(x)/3 on random points",
                        "one-third fractality of the distance germ", 1e-12, 0.0,
                        ClaimMode::at_most, []() {
                            const Germ g = make_named("giseh");
                            SplitMix64 rng(substream(kSeed, 0x915e4));
                            double dev = 0.0;
                            for (int i = 0; i < 1000; ++i) {
                                double x = rng.uniform(-1.0, 1.0);
                                if (x == 0.0) x = 0.5;
                                const ScalePoint gx = g.eval1(ScalePoint::from_double(x));
                                const ScalePoint gx3 = g.eval1(ScalePoint::from_double(x / 3.0));
                                dev = std::max(dev,
                                               std::fabs(sp_sub(sp_scale(gx3, 3.0), gx).to_double()));
                            }
                            return dev;
                        }});

    // --- uncanny: good jet with norm = ratio = 1, needs deep shells --------
    reg.push_back(Claim{"uncanny_norm", "deep-shell jet norm of the uncanny germ is 1",
                        "norm of x sin log|log x|", 1.0, 1e-2, ClaimMode::near, []() {
                            return jet_summary(make_named("uncanny_ext"), sched_deep())
                                .norm_to_zero.estimate;
                        }});
    reg.push_back(Claim{"uncanny_rho", "slope ratio of the uncanny germ is 1",
                        "ratio of x sin log|log x|", 1.0, 1e-2, ClaimMode::near, []() {
                            return jet_summary(make_named("uncanny_ext"), sched_deep()).rho.estimate;
                        }});
    reg.push_back(Claim{"uncanny_good", "the uncanny germ is a good jet",
                        "norm equals ratio at depth", 1.0, 0.0, ClaimMode::near, []() {
                            return indicator(jet_summary(make_named("uncanny_ext"), sched_deep())
                                                 .good_jet == GoodJetVerdict::good);
                        }});

    // --- contact self-recovery on homogeneous germs ------------------------
    reg.push_back(Claim{"contact_self_abs", "zoom contact of |x| returns |x|",
                        "a homogeneous germ is its own contact", 1e-10, 0.0, ClaimMode::at_most,
                        []() { return contact_recovery_dev("abs", ValuedMonoid::nonneg_reals()); }});
    reg.push_back(Claim{"contact_self_giseh", "zoom contact of the Cantor germ returns itself",
                        "fractal distance germ recovered by zoom", 1e-10, 0.0, ClaimMode::at_most,
                        []() {
                            return contact_recovery_dev("giseh", ValuedMonoid::powers_of(1.0 / 3.0));
                        }});
    reg.push_back(Claim{"contact_self_fractal_wave", "zoom contact of the wave returns itself",
                        "fractal wave recovered by zoom", 1e-10, 0.0, ClaimMode::at_most, []() {
                            return contact_recovery_dev("fractal_wave",
                                                        ValuedMonoid::powers_of(std::exp(-kTwoPi)));
                        }});
    reg.push_back(Claim{"contact_self_scaled_wave", "zoom contact of the scaled wave returns itself",
                        "scaled wave recovered by zoom", 1e-10, 0.0, ClaimMode::at_most, []() {
                            return contact_recovery_dev("scaled_wave:r=2pi",
                                                        ValuedMonoid::powers_of(std::exp(-kTwoPi)));
                        }});

    // --- bifractal refutation over the k grid ------------------------------
    for (int ki = 2; ki <= 9; ++ki) {
        const double k = ki / 10.0;
        char idbuf[48];
        std::snprintf(idbuf, sizeof(idbuf), "bifractal_refuted_k0.%d", ki);
        reg.push_back(Claim{idbuf, "incommensurate two-sided wave has no zoom contact",
                            "cluster set of an irrational rotation fills [-1,1]", 1.0, 0.0,
                            ClaimMode::near, [k]() {
                                const auto res =
                                    extract_contact(make_named("bifractal:a=1,b=sqrt2"),
                                                    ValuedMonoid::powers_of(k));
                                double max_osc = 0.0;
                                for (const auto& tr : res.traces)
                                    max_osc = std::max(max_osc, tr.oscillation);
                                return indicator(res.verdict == ContactVerdict::refuted &&
                                                 max_osc > 0.5);
                            }});
        std::snprintf(idbuf, sizeof(idbuf), "equidistribution_k0.%d", ki);
        reg.push_back(Claim{idbuf, "sin orbit of the irrational rotation fills [-1,1]",
                            "sorted-gap of sin(2 pi n a)", 0.05, 0.0, ClaimMode::at_most, [k]() {
                                return equidistribution_check(std::log(1.0 / k), 0.0, 1000)
                                    .largest_gap;
                            }});
    }

    // --- uncanny linearity bands -------------------------------------------
    for (double band : {1e3, 1e6, 1e9}) {
        char idbuf[48];
        std::snprintf(idbuf, sizeof(idbuf), "ins_band_defect_1e%d",
                      static_cast<int>(std::log10(band)));
        reg.push_back(Claim{idbuf, "linearity defects at depth stay under 10/|log r|",
                            "additivity defect of the uncanny germ decays", 10.0 / band, 0.0,
                            ClaimMode::at_most, [band]() {
                                const auto d = linearity_band_defects(make_named("uncanny_ext"),
                                                                      -band, 512, kSeed);
                                return std::max(d.additivity, d.scaling);
                            }});
    }
    reg.push_back(Claim{"ins_band_monotone", "band defects decrease with depth",
                        "limit linearity of the uncanny germ", 1.0, 0.0, ClaimMode::near, []() {
                            const Germ f = make_named("uncanny_ext");
                            double prev = 1e300;
                            bool ok = true;
                            for (double band : {1e3, 1e6, 1e9}) {
                                const auto d = linearity_band_defects(f, -band, 512, kSeed);
                                const double v = std::max(d.additivity, d.scaling);
                                ok = ok && v < prev;
                                prev = v;
                            }
                            return indicator(ok);
                        }});
    reg.push_back(Claim{"ins_band_final", "deepest band defect is at most 1e-4",
                        "limit linearity defect floor", 1e-4, 0.0, ClaimMode::at_most, []() {
                            const auto d = linearity_band_defects(make_named("uncanny_ext"), -1e9,
                                                                  512, kSeed);
                            return std::max(d.additivity, d.scaling);
                        }});

    // --- TL / contact consistency triple ------------------------------------
    reg.push_back(Claim{
        "consistency_f2", "x^2 sin(1/x^2): TL, contactable, fitted matrix zero",
        "differentiable at 0 with zero tangent", 1.0, 0.0, ClaimMode::near, []() {
            ShellSchedule s = sched_default();
            s.shells = 80;  // past exp(-55) the defects are already dust
            s.samples_per_shell = 128;
            const auto rep = tl_and_contact_consistency(
                make_named("f2"), ValuedMonoid::nonneg_reals(), s);
            const bool matrix_zero =
                rep.contact == ContactVerdict::found &&
                std::fabs(rep.fitted_matrix[0][0]) <= 1e-8;
            return indicator(rep.tl == LinearityVerdict::linear_jet && matrix_zero &&
                             rep.contact_is_linear && rep.consistent);
        }});
    reg.push_back(Claim{
        "consistency_uncanny_ext", "uncanny germ: TL but no contact on any probed monoid",
        "tangentially linear yet not differentiable", 1.0, 0.0, ClaimMode::near, []() {
            const Germ f = make_named("uncanny_ext");
            const bool tl =
                linearity_test(f, sched_deep_linearity()).verdict == LinearityVerdict::linear_jet;
            bool none_found = true;
            for (double k : {0.2, 0.5, 0.8, std::exp(-kTwoPi)})
                none_found = none_found && extract_contact(f, ValuedMonoid::powers_of(k)).verdict !=
                                               ContactVerdict::found;
            none_found = none_found && extract_contact(f, ValuedMonoid::nonneg_reals()).verdict !=
                                           ContactVerdict::found;
            return indicator(tl && none_found);
        }});
    reg.push_back(Claim{
        "consistency_fractal_wave", "wave: contactable at its own ratio but not TL",
        "contactable without limit linearity", 1.0, 0.0, ClaimMode::near, []() {
            const Germ f = make_named("fractal_wave");
            const bool found =
                extract_contact(f, ValuedMonoid::powers_of(std::exp(-kTwoPi))).verdict ==
                ContactVerdict::found;
            ShellSchedule s = sched_wave(512, 16);
            const bool not_tl = linearity_test(f, s).verdict == LinearityVerdict::not_linear;
            return indicator(found && not_tl);
        }});

    add_wave_embedding_claims(reg);

    // --- mean value ----------------------------------------------------------
    reg.push_back(Claim{"meanvalue_fractal_k", "segment slope bound for the wave on [-1,1]",
                        "max contact norm over the grid", 1.41, 0.01, ClaimMode::near, []() {
                            return mean_value_check(family_fractal_wave(), -1.0, 1.0,
                                                    ValuedMonoid::nonneg_reals(), 32)
                                .k_used;
                        }});
    reg.push_back(Claim{"meanvalue_fractal_holds", "the segment inequality holds for the wave",
                        "mean value bound", 1.0, 0.0, ClaimMode::near, []() {
                            return indicator(mean_value_check(family_fractal_wave(), -1.0, 1.0,
                                                              ValuedMonoid::nonneg_reals(), 32)
                                                 .holds);
                        }});
    reg.push_back(Claim{"meanvalue_linear_tight", "linear map meets the bound with equality",
                        "tightness on x -> 3x", 1e-12, 0.0, ClaimMode::at_most, []() {
                            const auto chk = mean_value_check(family_scaling(3.0), 0.0, 1.0,
                                                              ValuedMonoid::nonneg_reals(), 32);
                            return std::fabs(chk.lhs - chk.rhs);
                        }});
    reg.push_back(Claim{"meanvalue_half_k_fails", "halving k breaks the tight linear case",
                        "sharpness of the bound", 1.0, 0.0, ClaimMode::near, []() {
                            const auto chk = mean_value_check(family_scaling(3.0), 0.0, 1.0,
                                                              ValuedMonoid::nonneg_reals(), 32);
                            return indicator(chk.lhs > 0.5 * chk.k_used * std::fabs(chk.b - chk.a) +
                                                           1e-12);
                        }});

    // --- strict minimum certifier --------------------------------------------
    reg.push_back(Claim{"strictmin_tilted_sphere", "sphere minimum of |x| + x/2 is 1/2",
                        "positive contact on the sphere", 0.5, 1e-9, ClaimMode::near, []() {
                            return strict_min_certifier(tilted_abs_germ()).sphere_min;
                        }});
    reg.push_back(Claim{"strictmin_tilted_verdict", "|x| + x/2 is certified a strict minimum",
                        "positivity certifies the minimum", 1.0, 0.0, ClaimMode::near, []() {
                            const auto rep = strict_min_certifier(tilted_abs_germ());
                            return indicator(rep.verdict == StrictMinVerdict::certified_strict_min &&
                                             rep.empirical_ok);
                        }});
    reg.push_back(Claim{"strictmin_identity_fails", "the identity map fails the hypothesis",
                        "negative sphere value refutes", 1.0, 0.0, ClaimMode::near, []() {
                            return indicator(strict_min_certifier(scaling_germ(1.0)).verdict ==
                                             StrictMinVerdict::hypothesis_fails);
                        }});
    reg.push_back(Claim{"strictmin_giseh_fails", "the Cantor germ has no positive-reals contact",
                        "fractal-only homogeneity blocks the certifier", 1.0, 0.0,
                        ClaimMode::near, []() {
                            const auto rep = strict_min_certifier(make_named("giseh"));
                            return indicator(rep.verdict == StrictMinVerdict::hypothesis_fails &&
                                             !rep.contact_found);
                        }});

    // --- tangency spot checks -------------------------------------------------
    reg.push_back(Claim{"tangency_f2_zero", "x^2 sin(1/x^2) is tangent to 0",
                        "quadratic decay beats the gauge", 1.0, 0.0, ClaimMode::near, []() {
                            const Germ f = make_named("f2");
                            return indicator(tangency_test(f, zero_like(f), sched_default()) ==
                                             TangencyVerdict::tangent);
                        }});
    reg.push_back(Claim{"tangency_wave_zero", "the fractal wave is not tangent to 0",
                        "persistent shell sup refutes tangency", 1.0, 0.0, ClaimMode::near, []() {
                            const Germ f = make_named("fractal_wave");
                            return indicator(tangency_test(f, zero_like(f), sched_wave(2048, 16)) ==
                                             TangencyVerdict::not_tangent);
                        }});

    add_property_claims(reg);

    std::sort(reg.begin(), reg.end(),
              [](const Claim& a, const Claim& b) { return a.id < b.id; });
    return reg;
}

}  // namespace

bool Claim::passes(double measured) const {
    switch (mode) {
        case ClaimMode::near: return std::fabs(measured - expected) <= tolerance;
        case ClaimMode::at_most: return measured <= expected + tolerance;
        default: return measured >= expected - tolerance;
    }
}

const std::vector<Claim>& claim_registry() {
    static const std::vector<Claim> reg = build_registry();
    return reg;
}

std::vector<ClaimOutcome> run_claims(const std::string& filter) {
    std::vector<ClaimOutcome> out;
    for (const Claim& c : claim_registry()) {
        if (!filter.empty() && !glob_match(filter, c.id)) continue;
        const auto t0 = std::chrono::steady_clock::now();
        const double measured = c.run();
        const auto t1 = std::chrono::steady_clock::now();
        out.push_back(ClaimOutcome{c.id, c.expected, c.tolerance, measured, c.passes(measured),
                                   std::chrono::duration<double>(t1 - t0).count()});
    }
    return out;
}

std::string claims_csv(const std::vector<ClaimOutcome>& outcomes, bool include_timing) {
    std::string out = include_timing ? "claim_id,expected,tolerance,measured,pass,seconds\n"
                                     : "claim_id,expected,tolerance,measured,pass\n";
    for (const auto& o : outcomes) {
        out += o.id;
        out += ',';
        out += fmt_double(o.expected);
        out += ',';
        out += fmt_double(o.tolerance);
        out += ',';
        out += fmt_double(o.measured);
        out += ',';
        out += o.pass ? '1' : '0';
        if (include_timing) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), ",%.3f", o.seconds);
            out += buf;
        }
        out += '\n';
    }
    return out;
}

bool all_passed(const std::vector<ClaimOutcome>& outcomes) {
    for (const auto& o : outcomes)
        if (!o.pass) return false;
    return !outcomes.empty();
}

}  // namespace metjet
