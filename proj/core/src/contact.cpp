#include "metjet/contact.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "metjet/csv.hpp"
#include "metjet/rng.hpp"

namespace metjet {

const char* to_string(ContactVerdict v) {
    switch (v) {
        case ContactVerdict::found: return "found";
        case ContactVerdict::refuted: return "refuted";
        default: return "inconclusive";
    }
}

const char* to_string(LinearityVerdict v) {
    switch (v) {
        case LinearityVerdict::linear_jet: return "linear_jet";
        case LinearityVerdict::not_linear: return "not_linear";
        default: return "inconclusive";
    }
}

std::vector<SpVec> default_directions(int dim) {
    std::vector<SpVec> dirs;
    if (dim == 1) {
        dirs.push_back(SpVec{ScalePoint{1, 0.0}});
        dirs.push_back(SpVec{ScalePoint{-1, 0.0}});
        return dirs;
    }
    for (int c = 0; c < dim; ++c) {
        for (int sign : {1, -1}) {
            SpVec e(static_cast<std::size_t>(dim));
            e[static_cast<std::size_t>(c)] = ScalePoint{sign, 0.0};
            dirs.push_back(std::move(e));
        }
    }
    return dirs;
}

namespace {

void require_unit(const SpVec& dir) {
    const ScalePoint n = sp_norm(dir);
    if (n.sign == 0 || std::fabs(n.logmag) > 1e-9)
        throw std::invalid_argument("extract_contact: directions must be unit vectors");
}

// f(scale * x) / scale as ordinary doubles (quotients are O(1) for
// lipschitzian germs; non-finite values are the caller's oscillation
// evidence, not an error).
std::vector<double> zoom_quotient(const Germ& f, const SpVec& x, double log_scale) {
    SpVec sx(x.size());
    for (std::size_t c = 0; c < x.size(); ++c)
        sx[c] = ScalePoint{x[c].sign, x[c].logmag + log_scale};
    const SpVec fx = f.eval(sx);
    std::vector<double> q(fx.size());
    for (std::size_t c = 0; c < fx.size(); ++c)
        q[c] = ScalePoint{fx[c].sign, fx[c].logmag - log_scale}.to_double();
    return q;
}

struct TailStats {
    double oscillation;
    int alternations;
    bool cauchy;
};

TailStats tail_stats(const std::vector<std::vector<double>>& q, double tol_contact) {
    const int n = static_cast<int>(q.size());
    const int tail = std::max(8, n / 2);
    const int lo = std::max(0, n - tail);
    const std::size_t comps = q.empty() ? 0 : q[0].size();

    double osc2 = 0.0;
    std::size_t widest = 0;
    double widest_span = -1.0;
    for (std::size_t c = 0; c < comps; ++c) {
        double mn = q[static_cast<std::size_t>(lo)][c], mx = mn;
        for (int i = lo; i < n; ++i) {
            mn = std::min(mn, q[static_cast<std::size_t>(i)][c]);
            mx = std::max(mx, q[static_cast<std::size_t>(i)][c]);
        }
        const double span = mx - mn;
        osc2 += span * span;
        if (span > widest_span) {
            widest_span = span;
            widest = c;
        }
    }
    const double osc = std::sqrt(osc2);

    // alternations of the widest component around its tail mean
    int alt = 0;
    if (comps > 0) {
        double mean = 0.0;
        for (int i = lo; i < n; ++i) mean += q[static_cast<std::size_t>(i)][widest];
        mean /= std::max(1, n - lo);
        int prev = 0;
        for (int i = lo; i < n; ++i) {
            const double d = q[static_cast<std::size_t>(i)][widest] - mean;
            const int sgn = d > 0 ? 1 : (d < 0 ? -1 : 0);
            if (sgn != 0 && prev != 0 && sgn != prev) ++alt;
            if (sgn != 0) prev = sgn;
        }
    }
    bool finite = true;
    for (int i = lo; i < n; ++i)
        for (double v : q[static_cast<std::size_t>(i)]) finite = finite && std::isfinite(v);
    return {osc, alt, finite && osc <= tol_contact};
}

// Contact germ: deep quotients on a reference annulus/sphere, extended
// everywhere by the monoid action. Cache is write-once per reduced point.
Germ build_contact_germ(const Germ& f, const ValuedMonoid& m, int n_steps) {
    struct State {
        std::map<std::vector<std::pair<int, double>>, std::vector<double>> cache;
        std::mutex mu;
    };
    auto state = std::make_shared<State>();
    const double log_step = m.log_scale_at_step(n_steps);
    const bool annulus = m.kind() == ValuedMonoid::Kind::PowersOfK;
    const double w = annulus ? -std::log(m.k()) : 0.0;
    const std::size_t dim_out = static_cast<std::size_t>(f.dim_out());

    GermMeta meta;
    meta.label = "contact(" + f.meta().label + ";" + m.to_string() + ")";
    if (annulus)
        meta.exact_fractal_ratio = m.k();
    else
        meta.exact_positively_homogeneous = true;

    return Germ(
        f.dim_in(), f.dim_out(), std::vector<double>(static_cast<std::size_t>(f.dim_in()), 0.0),
        std::vector<double>(dim_out, 0.0),
        [f, state, log_step, annulus, w, dim_out](std::span<const ScalePoint> y) -> SpVec {
            const ScalePoint mag = sp_norm(y);
            if (mag.sign == 0) return SpVec(dim_out);
            // reduce to the reference window: log-magnitude in (-w, 0]
            // for the power monoid, exactly 0 (the sphere) otherwise
            const double shift =
                annulus ? std::floor(-mag.logmag / w) * w : -mag.logmag;
            SpVec reduced(y.size());
            std::vector<std::pair<int, double>> key(y.size());
            for (std::size_t c = 0; c < y.size(); ++c) {
                reduced[c] = y[c].sign == 0 ? ScalePoint::zero()
                                            : ScalePoint{y[c].sign, y[c].logmag + shift};
                key[c] = {reduced[c].sign, reduced[c].logmag};
            }
            std::vector<double> vals;
            {
                std::lock_guard<std::mutex> lock(state->mu);
                auto it = state->cache.find(key);
                if (it != state->cache.end()) vals = it->second;
            }
            if (vals.empty()) {
                vals = zoom_quotient(f, reduced, log_step);
                std::lock_guard<std::mutex> lock(state->mu);
                state->cache.emplace(std::move(key), vals);
            }
            SpVec out(dim_out);
            for (std::size_t c = 0; c < dim_out; ++c) {
                if (vals[c] == 0.0) continue;
                out[c] = ScalePoint{vals[c] > 0 ? 1 : -1,
                                    std::log(std::fabs(vals[c])) - shift};
            }
            return out;
        },
        Germ::kUnboundedRadius, std::move(meta));
}

}  // namespace

std::string ContactResult::trace_csv() const {
    std::string out = "direction_id,n,log_v_t";
    const std::size_t comps = traces.empty() || traces[0].quotients.empty()
                                  ? 1
                                  : traces[0].quotients[0].size();
    for (std::size_t c = 0; c < comps; ++c) out += ",quotient_component_" + std::to_string(c);
    out += '\n';
    for (std::size_t d = 0; d < traces.size(); ++d) {
        const auto& tr = traces[d];
        for (std::size_t i = 0; i < tr.quotients.size(); ++i) {
            out += std::to_string(d);
            out += ',';
            out += std::to_string(i + 1);
            out += ',';
            out += fmt_double(tr.log_scale[i]);
            for (double v : tr.quotients[i]) {
                out += ',';
                out += fmt_double(v);
            }
            out += '\n';
        }
    }
    return out;
}

ContactResult extract_contact(const Germ& f, const ValuedMonoid& m,
                              const std::vector<SpVec>& directions, const ContactOptions& opt) {
    const int n_steps = opt.n_steps > 0 ? opt.n_steps : m.default_steps();
    if (n_steps < 16) throw std::invalid_argument("extract_contact: need n_steps >= 16");
    std::vector<SpVec> dirs = directions.empty() ? default_directions(f.dim_in()) : directions;
    for (const auto& d : dirs) require_unit(d);

    ContactResult res{m, ContactVerdict::inconclusive, std::nullopt, {}};
    bool all_cauchy = true;
    bool any_refuted = false;
    for (const auto& dir : dirs) {
        DirectionTrace tr;
        tr.direction = dir;
        tr.log_scale.reserve(static_cast<std::size_t>(n_steps));
        tr.quotients.reserve(static_cast<std::size_t>(n_steps));
        for (int n = 1; n <= n_steps; ++n) {
            const double ls = m.log_scale_at_step(n);
            tr.log_scale.push_back(ls);
            tr.quotients.push_back(zoom_quotient(f, dir, ls));
        }
        const TailStats st = tail_stats(tr.quotients, opt.tol_contact);
        tr.oscillation = st.oscillation;
        tr.sign_alternations = st.alternations;
        tr.cauchy = st.cauchy;
        all_cauchy = all_cauchy && st.cauchy;
        any_refuted =
            any_refuted || (st.oscillation > opt.osc_threshold && st.alternations >= 3);
        res.traces.push_back(std::move(tr));
    }

    if (all_cauchy) {
        res.verdict = ContactVerdict::found;
        res.contact = build_contact_germ(f, m, n_steps);
    } else if (any_refuted) {
        res.verdict = ContactVerdict::refuted;
    }
    return res;
}

NeofractalScan neofractal_scan(const Germ& f, const std::vector<double>& k_grid,
                               const std::vector<SpVec>& directions, const ContactOptions& opt) {
    if (k_grid.empty()) throw std::invalid_argument("neofractal_scan: empty k grid");
    NeofractalScan scan;
    scan.all_refuted = true;
    for (double k : k_grid) {
        auto res = extract_contact(f, ValuedMonoid::powers_of(k), directions, opt);
        scan.all_refuted = scan.all_refuted && res.verdict == ContactVerdict::refuted;
        scan.by_k.emplace_back(k, std::move(res));
    }
    return scan;
}

namespace {

// Defect computations factor out the common scale e^ln|x| through the
// germ's ratio profile when it has one: absolute ScalePoint arithmetic
// quantizes relative values at |logmag|*eps, which at logmag ~ -1e9
// would bury defects of order 1/|logmag|.

double additivity_defect(const Germ& f, ScalePoint x, ScalePoint y) {
    if (const auto& prof = f.ratio_profile(); prof && y.sign != 0 && x.sign != 0) {
        if (sp_mag_less(x, y)) std::swap(x, y);
        const double r = static_cast<double>(x.sign * y.sign) * std::exp(y.logmag - x.logmag);
        const double p0 = prof(x.sign, x.logmag);
        const double p2 = prof(y.sign, y.logmag);
        double num;  // (f(x+y) - f(x) - f(y)) / x
        if (1.0 + r == 0.0) {
            num = -p0 - r * p2;
        } else {
            const int s_sign = x.sign * (1.0 + r > 0.0 ? 1 : -1);
            const double p1 = prof(s_sign, x.logmag + std::log1p(r));
            num = (1.0 + r) * p1 - p0 - r * p2;
        }
        return std::fabs(num) / std::sqrt(1.0 + r * r);
    }
    const ScalePoint fxy = f.eval1(sp_add(x, y));
    const ScalePoint gap = sp_sub(sp_sub(fxy, f.eval1(x)), f.eval1(y));
    const ScalePoint pair[2] = {x, y};
    return sp_mag_ratio(sp_abs(gap), sp_norm(std::span<const ScalePoint>(pair, 2)));
}

double scaling_defect(const Germ& f, ScalePoint x, double lambda) {
    if (const auto& prof = f.ratio_profile(); prof && x.sign != 0 && lambda != 0.0) {
        const int lx_sign = lambda > 0.0 ? x.sign : -x.sign;
        const double p1 = prof(lx_sign, x.logmag + std::log(std::fabs(lambda)));
        const double p0 = prof(x.sign, x.logmag);
        return std::fabs(lambda) * std::fabs(p1 - p0);
    }
    const ScalePoint flx = f.eval1(sp_scale(x, lambda));
    const ScalePoint gap = sp_sub(flx, sp_scale(f.eval1(x), lambda));
    return sp_mag_ratio(sp_abs(gap), sp_abs(x));
}

constexpr double kLambdaSet[] = {-1.0, 0.5, -0.5, 2.0, -2.0, 2.718281828459045};

}  // namespace

LinearityReport linearity_test(const Germ& f, const ShellSchedule& s, const Tolerances& tols) {
    if (f.dim_in() != 1 || f.dim_out() != 1)
        throw std::invalid_argument("linearity_test: 1-d germs only");
    for (double c : f.base())
        if (c != 0.0) throw std::invalid_argument("linearity_test: germ must be based at 0");
    s.validate();

    std::vector<double> add_shell(static_cast<std::size_t>(s.shells), 0.0);
    std::vector<double> scal_shell(static_cast<std::size_t>(s.shells), 0.0);
    for (int j = 0; j < s.shells; ++j) {
        const double depth = -s.outer_logmag(j);
        const double skews[3] = {1.0, 0.1, std::exp(-std::sqrt(std::max(1.0, depth)))};
        double add = 0.0, scal = 0.0;
        SplitMix64 signs(substream(s.rng_seed, 0xadd5));
        for (const auto& xv : shell_points_nd(s, j, 1)) {
            const ScalePoint x = xv[0];
            for (double r : skews) {
                const int ysign = signs.coin_sign();
                const ScalePoint y = sp_scale(ScalePoint{ysign * x.sign, x.logmag}, r);
                add = std::max(add, additivity_defect(f, x, y));
            }
            for (double l : kLambdaSet) scal = std::max(scal, scaling_defect(f, x, l));
        }
        add_shell[static_cast<std::size_t>(j)] = add;
        scal_shell[static_cast<std::size_t>(j)] = scal;
    }

    // Reuse the shell-sequence bookkeeping: suffix sups, estimate, flags.
    LinearityReport rep;
    auto finalize = [&](std::vector<double> vals) {
        LimitEstimate est;
        est.per_shell_sup = vals;
        est.shells.resize(vals.size());
        double running = 0.0;
        for (int j = s.shells - 1; j >= 0; --j) {
            running = std::max(running, vals[static_cast<std::size_t>(j)]);
            est.shells[static_cast<std::size_t>(j)] = {ScalePoint{1, s.outer_logmag(j)}, running};
        }
        est.estimate = est.shells.back().value;
        const int n = s.shells;
        const int q = std::max(1, n / 4);
        const int lo = n - q;
        const double drop = est.shells[static_cast<std::size_t>(lo)].value - est.estimate;
        est.converged = drop <= tols.tol_conv *
                                    std::max(1.0, est.shells[static_cast<std::size_t>(lo)].value);
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (int j = lo; j < n; ++j) {
            const double xx = j, yy = vals[static_cast<std::size_t>(j)];
            sx += xx;
            sy += yy;
            sxx += xx * xx;
            sxy += xx * yy;
        }
        const double denom = q * sxx - sx * sx;
        est.tail_slope = denom != 0.0 ? (q * sxy - sx * sy) / denom : 0.0;
        return est;
    };
    rep.additivity = finalize(std::move(add_shell));
    rep.scaling = finalize(std::move(scal_shell));

    const bool small = rep.additivity.estimate <= tols.tol && rep.scaling.estimate <= tols.tol;
    const bool decreasing =
        rep.additivity.tail_slope <= 1e-9 && rep.scaling.tail_slope <= 1e-9;
    if (small && decreasing) {
        rep.verdict = LinearityVerdict::linear_jet;
        return rep;
    }
    const int n = s.shells;
    const int lo = n - std::max(1, n / 4);
    bool persistent = true;
    for (int j = lo; j < n; ++j) {
        const double worst = std::max(rep.additivity.per_shell_sup[static_cast<std::size_t>(j)],
                                      rep.scaling.per_shell_sup[static_cast<std::size_t>(j)]);
        persistent = persistent && worst > 2.0 * tols.tol;
    }
    rep.verdict = persistent ? LinearityVerdict::not_linear : LinearityVerdict::inconclusive;
    return rep;
}

BandDefects linearity_band_defects(const Germ& f, double band_logmag, int samples,
                                   std::uint64_t seed) {
    BandDefects out;
    SplitMix64 rng(substream(seed, 0xba2d));
    const double depth = std::max(1.0, -band_logmag);
    const double skews[3] = {1.0, 0.1, std::exp(-std::sqrt(depth))};
    for (int i = 0; i < samples; ++i) {
        const ScalePoint x{rng.coin_sign(), band_logmag + rng.uniform(-1.0, 1.0)};
        for (double r : skews) {
            const ScalePoint y = sp_scale(ScalePoint{rng.coin_sign() * x.sign, x.logmag}, r);
            out.additivity = std::max(out.additivity, additivity_defect(f, x, y));
        }
        for (double l : kLambdaSet) out.scaling = std::max(out.scaling, scaling_defect(f, x, l));
    }
    return out;
}

ConsistencyReport tl_and_contact_consistency(const Germ& f, const ValuedMonoid& m,
                                             const ShellSchedule& s, const Tolerances& tols,
                                             const ContactOptions& opt) {
    ConsistencyReport rep;
    rep.tl = linearity_test(f, s, tols).verdict;
    const ContactResult cr = extract_contact(f, m, {}, opt);
    rep.contact = cr.verdict;

    if (cr.verdict == ContactVerdict::found) {
        const Germ& h = *cr.contact;
        const int din = h.dim_in(), dout = h.dim_out();
        // fit the matrix on basis directions
        rep.fitted_matrix.assign(static_cast<std::size_t>(dout),
                                 std::vector<double>(static_cast<std::size_t>(din), 0.0));
        for (int jcol = 0; jcol < din; ++jcol) {
            SpVec e(static_cast<std::size_t>(din));
            e[static_cast<std::size_t>(jcol)] = ScalePoint{1, 0.0};
            const SpVec he = h.eval(e);
            for (int irow = 0; irow < dout; ++irow)
                rep.fitted_matrix[static_cast<std::size_t>(irow)][static_cast<std::size_t>(jcol)] =
                    he[static_cast<std::size_t>(irow)].to_double();
        }
        // residual: linear prediction vs the contact on samples, plus
        // additivity of the contact itself (1-d: negated direction)
        double resid = 0.0;
        ShellSchedule probe = s;
        probe.shells = std::min(probe.shells, 8);
        probe.samples_per_shell = std::min(probe.samples_per_shell, 64);
        for (int j = 0; j < probe.shells; ++j) {
            for (const auto& x : shell_points_nd(probe, j, din)) {
                const SpVec hx = h.eval(x);
                SpVec pred(static_cast<std::size_t>(dout));
                for (int irow = 0; irow < dout; ++irow) {
                    ScalePoint acc = ScalePoint::zero();
                    for (int jcol = 0; jcol < din; ++jcol)
                        acc = sp_add(acc, sp_scale(x[static_cast<std::size_t>(jcol)],
                                                   rep.fitted_matrix[static_cast<std::size_t>(
                                                       irow)][static_cast<std::size_t>(jcol)]));
                    pred[static_cast<std::size_t>(irow)] = acc;
                }
                SpVec gap(static_cast<std::size_t>(dout));
                for (std::size_t c = 0; c < gap.size(); ++c) gap[c] = sp_sub(hx[c], pred[c]);
                resid = std::max(resid, sp_mag_ratio(sp_norm(gap), sp_norm(x)));
            }
        }
        if (din == 1) {
            const ScalePoint plus = h.eval1(ScalePoint{1, 0.0});
            const ScalePoint minus = h.eval1(ScalePoint{-1, 0.0});
            resid = std::max(resid, sp_add(plus, minus).to_double() == 0.0
                                        ? 0.0
                                        : std::fabs(sp_add(plus, minus).to_double()));
        }
        rep.fit_residual = resid;
        rep.contact_is_linear = resid <= tols.tol;
    }

    const bool tl = rep.tl == LinearityVerdict::linear_jet;
    const bool found = rep.contact == ContactVerdict::found;
    if (tl && found) {
        rep.consistent = rep.contact_is_linear;
        rep.note = rep.consistent
                       ? "TL and contactable: differentiable, contact fitted as a matrix"
                       : "TL and contactable but the contact is not linear: incoherent";
    } else if (found) {
        rep.consistent = !rep.contact_is_linear || rep.tl == LinearityVerdict::inconclusive;
        rep.note = "contactable but not TL: not differentiable, contact must stay nonlinear";
    } else if (tl) {
        rep.consistent = true;
        rep.note = "TL but no contact on this monoid: not differentiable";
    } else {
        rep.consistent = true;
        rep.note = "neither TL nor contactable on this monoid";
    }
    return rep;
}

EquidistributionReport equidistribution_check(double alpha, double gamma, int n_count) {
    if (n_count < 100) throw std::invalid_argument("equidistribution_check: need n >= 100");
    std::vector<double> xs(static_cast<std::size_t>(n_count));
    for (int n = 0; n < n_count; ++n)
        xs[static_cast<std::size_t>(n)] =
            std::sin(6.283185307179586 * static_cast<double>(n) * alpha + gamma);

    EquidistributionReport rep;
    const int lo = n_count - std::max(1, n_count / 4);
    double mn = xs[static_cast<std::size_t>(lo)], mx = mn;
    for (int n = lo; n < n_count; ++n) {
        mn = std::min(mn, xs[static_cast<std::size_t>(n)]);
        mx = std::max(mx, xs[static_cast<std::size_t>(n)]);
    }
    rep.tail_oscillation = mx - mn;

    std::sort(xs.begin(), xs.end());
    rep.distinct_values = 1;
    for (std::size_t i = 1; i < xs.size(); ++i) {
        rep.largest_gap = std::max(rep.largest_gap, xs[i] - xs[i - 1]);
        if (xs[i] - xs[i - 1] > 1e-9) ++rep.distinct_values;
    }
    return rep;
}

}  // namespace metjet
