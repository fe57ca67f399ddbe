#include "metjet/jet_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "metjet/csv.hpp"
#include "metjet/rng.hpp"

namespace metjet {

namespace {

void check_schedule_fits(const Germ& f, const ShellSchedule& s) {
    if (!std::isinf(f.domain_radius()) && s.r0.logmag > std::log(f.domain_radius()))
        throw std::domain_error("schedule r0 exceeds the germ's domain radius; shrink r0");
}

// Suffix maxima, estimate, convergence flag and tail slope from the
// per-shell sups.
LimitEstimate finalize(const ShellSchedule& s, std::vector<double> per_shell,
                       const Tolerances& tols) {
    const int n = static_cast<int>(per_shell.size());
    LimitEstimate est;
    est.per_shell_sup = per_shell;
    est.shells.resize(per_shell.size());
    double running = 0.0;
    for (int j = n - 1; j >= 0; --j) {
        running = std::max(running, per_shell[static_cast<std::size_t>(j)]);
        est.shells[static_cast<std::size_t>(j)] = {ScalePoint{1, s.outer_logmag(j)}, running};
    }
    est.estimate = est.shells.back().value;

    const int q = std::max(1, n / 4);
    const int lo = n - q;
    const double drop = est.shells[static_cast<std::size_t>(lo)].value - est.estimate;
    est.converged =
        drop <= tols.tol_conv * std::max(1.0, est.shells[static_cast<std::size_t>(lo)].value);

    // least-squares slope of value against shell index over the last quarter
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int j = lo; j < n; ++j) {
        const double x = j, y = est.shells[static_cast<std::size_t>(j)].value;
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = q * sxx - sx * sx;
    est.tail_slope = denom != 0.0 ? (q * sxy - sx * sy) / denom : 0.0;
    return est;
}

double pair_slope(const Germ& f, const SpVec& x, const SpVec& y) {
    SpVec diff(x.size());
    for (std::size_t c = 0; c < x.size(); ++c) diff[c] = sp_sub(x[c], y[c]);
    const ScalePoint den = sp_norm(diff);
    if (den.sign == 0) return 0.0;
    const SpVec fx = f.eval(x);
    const SpVec fy = f.eval(y);
    SpVec gap(fx.size());
    for (std::size_t c = 0; c < fx.size(); ++c) gap[c] = sp_sub(fx[c], fy[c]);
    return sp_mag_ratio(sp_norm(gap), den);
}

double zero_pair_slope(const Germ& f, const SpVec& x) {
    return sp_mag_ratio(sp_norm(f.eval(x)), sp_norm(x));
}

}  // namespace

std::string LimitEstimate::to_csv() const {
    std::string out = "shell_index,log_radius,value\n";
    for (std::size_t j = 0; j < shells.size(); ++j) {
        out += std::to_string(j);
        out += ',';
        out += fmt_double(shells[j].radius.logmag);
        out += ',';
        out += fmt_double(shells[j].value);
        out += '\n';
    }
    return out;
}

const char* to_string(TangencyVerdict v) {
    switch (v) {
        case TangencyVerdict::tangent: return "tangent";
        case TangencyVerdict::not_tangent: return "not_tangent";
        default: return "inconclusive";
    }
}

const char* to_string(GoodJetVerdict v) {
    switch (v) {
        case GoodJetVerdict::good: return "good";
        case GoodJetVerdict::not_good: return "not_good";
        default: return "inconclusive";
    }
}

Germ zero_like(const Germ& f) {
    const std::size_t dim_out = static_cast<std::size_t>(f.dim_out());
    GermMeta m;
    m.label = "zero";
    m.lipschitz_bound = 0.0;
    m.exact_positively_homogeneous = true;
    Germ out(f.dim_in(), f.dim_out(), f.base(), f.base_image(),
             [dim_out](std::span<const ScalePoint>) { return SpVec(dim_out); },
             Germ::kUnboundedRadius, m);
    if (f.dim_in() == 1 && f.dim_out() == 1)
        out.set_ratio_profile([](int, double) { return 0.0; });
    return out;
}

LimitEstimate quasi_distance(const Germ& f, const Germ& g, const ShellSchedule& s,
                             const Tolerances& tols) {
    if (!f.same_pointing(g))
        throw std::invalid_argument("quasi_distance: germs disagree on dims or base points");
    s.validate();
    check_schedule_fits(f, s);
    check_schedule_fits(g, s);

    std::vector<double> per_shell(static_cast<std::size_t>(s.shells), 0.0);
    for (int j = 0; j < s.shells; ++j) {
        double m = 0.0;
        for (const auto& x : shell_points_nd(s, j, f.dim_in())) {
            const SpVec fx = f.eval(x);
            const SpVec gx = g.eval(x);
            SpVec gap(fx.size());
            for (std::size_t c = 0; c < fx.size(); ++c) gap[c] = sp_sub(fx[c], gx[c]);
            m = std::max(m, sp_mag_ratio(sp_norm(gap), sp_norm(x)));
        }
        per_shell[static_cast<std::size_t>(j)] = m;
    }
    return finalize(s, std::move(per_shell), tols);
}

TangencyVerdict tangency_test(const Germ& f, const Germ& g, const ShellSchedule& s,
                              const Tolerances& tols) {
    const LimitEstimate est = quasi_distance(f, g, s, tols);
    if (est.converged && est.estimate < tols.tol) return TangencyVerdict::tangent;

    // Refutation needs a persistent per-shell sup: one outer spike must
    // not refute what is an inner-limit property.
    const int n = static_cast<int>(est.per_shell_sup.size());
    const int lo = n - std::max(1, n / 4);
    bool persistent = true;
    for (int j = lo; j < n; ++j)
        persistent = persistent && est.per_shell_sup[static_cast<std::size_t>(j)] > 2.0 * tols.tol;
    if (persistent) return TangencyVerdict::not_tangent;
    return TangencyVerdict::inconclusive;
}

LimitEstimate lipschitz_ratio(const Germ& f, const ShellSchedule& s, const Tolerances& tols) {
    s.validate();
    check_schedule_fits(f, s);
    const int dim = f.dim_in();
    const int spp = s.samples_per_shell;

    // One pair-offset pattern shared by all shells, like shell_points.
    SplitMix64 pattern(substream(s.rng_seed, 0x9a125));
    struct PairOffsets {
        double u1, u2;
        int s1, s2;
    };
    std::vector<PairOffsets> offsets;
    offsets.reserve(static_cast<std::size_t>(spp));
    for (int i = 0; i < spp; ++i)
        offsets.push_back({pattern.unit_open(), pattern.unit_open(), pattern.coin_sign(),
                           pattern.coin_sign()});

    std::vector<double> per_shell(static_cast<std::size_t>(s.shells), 0.0);
    double running = 0.0;
    bool have_witness = false;
    ScalePoint witness{1, s.outer_logmag(s.shells)};

    // Shrinking probe offset so the partner never leaves the domain.
    auto probe_1d = [&](ScalePoint x) {
        const SpVec xv{x};
        const SpVec yv{sp_mul(x, ScalePoint::from_double(1.0 - 1e-7))};
        return pair_slope(f, xv, yv);
    };

    // Innermost shell first: the running sup is then exactly the
    // sup over pairs with radius <= r_j when shell j is reached.
    for (int j = s.shells - 1; j >= 0; --j) {
        const double hi = s.outer_logmag(j);
        const double lo = s.outer_logmag(j + 1);
        const double lo_next = s.outer_logmag(j + 2);

        // base-point pairs: |f(x)| / |x| on this shell's samples
        for (const auto& x : shell_points_nd(s, j, dim)) {
            const double v = zero_pair_slope(f, x);
            if (v > running) {
                running = v;
                if (dim == 1) {
                    witness = x[0];
                    have_witness = true;
                }
            }
        }

        if (dim == 1) {
            for (int i = 0; i < spp; ++i) {
                const auto& o = offsets[static_cast<std::size_t>(i)];
                ScalePoint x{o.s1, lo + o.u1 * (hi - lo)};
                ScalePoint y;
                if (i % 4 == 3 && j + 1 < s.shells) {
                    y = ScalePoint{o.s2, lo_next + o.u2 * (lo - lo_next)};  // adjacent shell
                } else {
                    y = ScalePoint{o.s2, lo + o.u2 * (hi - lo)};
                }
                const double v = pair_slope(f, SpVec{x}, SpVec{y});
                if (v > running) {
                    running = v;
                    witness = x;
                    have_witness = true;
                }
            }
            // local refinement ladder around the running witness
            if (have_witness) {
                ScalePoint anchor = witness;
                double span = (hi - lo) * 0.5;
                for (int round = 0; round < 8; ++round) {
                    ScalePoint best = anchor;
                    double best_v = -1.0;
                    for (int gpt = 0; gpt < 8; ++gpt) {
                        const double off = span * (2.0 * gpt / 7.0 - 1.0);
                        ScalePoint cand{anchor.sign, std::min(anchor.logmag + off, hi - 1e-9)};
                        const double v = probe_1d(cand);
                        if (v > best_v) {
                            best_v = v;
                            best = cand;
                        }
                        running = std::max(running, v);
                    }
                    anchor = best;
                    span *= 0.3;
                }
            }
        } else {
            // n-d: random same-shell / adjacent pairs from the nd sampler
            const auto xs = shell_points_nd(s, j, dim);
            const auto ys =
                shell_points_nd(s, j + 1 < s.shells && (j % 2 == 1) ? j + 1 : j, dim);
            for (std::size_t i = 0; i + 1 < xs.size(); i += 2) {
                running = std::max(running, pair_slope(f, xs[i], ys[i + 1]));
                running = std::max(running, pair_slope(f, xs[i], xs[i + 1]));
            }
        }
        per_shell[static_cast<std::size_t>(j)] = running;
    }

    LimitEstimate est = finalize(s, per_shell, tols);
    // per-shell sups as collected are already cumulative-from-inside; keep
    // the cumulative values and recompute the non-cumulative view as the
    // increments are not observable here.
    est.per_shell_sup = per_shell;
    return est;
}

JetSummary jet_summary(const Germ& f, const ShellSchedule& s, const Tolerances& tols) {
    JetSummary out;
    out.norm_to_zero = quasi_distance(f, zero_like(f), s, tols);
    out.rho = lipschitz_ratio(f, s, tols);
    out.rho_is_jet_ratio =
        f.meta().exact_positively_homogeneous || f.meta().exact_fractal_ratio.has_value();

    const bool both = out.norm_to_zero.converged && out.rho.converged;
    const double gap = out.rho.estimate - out.norm_to_zero.estimate;
    if (both && std::fabs(gap) <= tols.tol_gap)
        out.good_jet = GoodJetVerdict::good;
    else if (both && gap > 3.0 * tols.tol_gap)
        out.good_jet = GoodJetVerdict::not_good;
    else
        out.good_jet = GoodJetVerdict::inconclusive;
    return out;
}

}  // namespace metjet
