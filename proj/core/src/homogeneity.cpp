#include "metjet/homogeneity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "metjet/rng.hpp"

namespace metjet {

namespace {

constexpr double kRefutationFloor = 1e-3;

void require_based_at_zero(const Germ& h, const char* who) {
    for (double c : h.base())
        if (c != 0.0) throw std::invalid_argument(std::string(who) + ": germ must be based at 0");
}

// Log scales v(t) probed per monoid: k, k^2, k^3 for the power monoid,
// log-uniform in [e^-3, 1] otherwise (negative t for Reals adds nothing
// beyond v(t) = |t|, but is probed as stated).
std::vector<double> probe_log_scales(const ValuedMonoid& m, SplitMix64& rng) {
    if (m.kind() == ValuedMonoid::Kind::PowersOfK) {
        const double lk = std::log(m.k());
        return {lk, 2.0 * lk, 3.0 * lk};
    }
    return {-3.0 * rng.unit_open(), -3.0 * rng.unit_open(), -3.0 * rng.unit_open()};
}

}  // namespace

const char* to_string(HomogeneityVerdict v) {
    switch (v) {
        case HomogeneityVerdict::homogeneous: return "homogeneous";
        case HomogeneityVerdict::not_homogeneous: return "not_homogeneous";
        default: return "inconclusive";
    }
}

HomogeneityReport homogeneity_test(const Germ& h, const ValuedMonoid& m, const ShellSchedule& s,
                                   double tol_hom) {
    require_based_at_zero(h, "homogeneity_test");
    s.validate();
    HomogeneityReport rep{m, {}, 0.0, HomogeneityVerdict::inconclusive};
    rep.defect_by_shell.reserve(static_cast<std::size_t>(s.shells));

    SplitMix64 scale_rng(substream(s.rng_seed, 0x501e5));
    for (int j = 0; j < s.shells; ++j) {
        double defect = 0.0;
        const auto scales = probe_log_scales(m, scale_rng);
        for (const auto& x : shell_points_nd(s, j, h.dim_in())) {
            const SpVec hx = h.eval(x);
            const ScalePoint nx = sp_norm(x);
            for (double lv : scales) {
                SpVec tx(x.size());
                for (std::size_t c = 0; c < x.size(); ++c)
                    tx[c] = ScalePoint{x[c].sign, x[c].logmag + lv};
                const SpVec htx = h.eval(tx);
                SpVec gap(htx.size());
                for (std::size_t c = 0; c < htx.size(); ++c)
                    gap[c] = sp_sub(htx[c], ScalePoint{hx[c].sign, hx[c].logmag + lv});
                defect = std::max(
                    defect, sp_mag_ratio(sp_norm(gap), ScalePoint{1, nx.logmag + lv}));
            }
        }
        rep.defect_by_shell.push_back({ScalePoint{1, s.outer_logmag(j)}, defect});
        rep.max_defect = std::max(rep.max_defect, defect);
    }

    if (rep.max_defect <= tol_hom) {
        rep.verdict = HomogeneityVerdict::homogeneous;
    } else {
        const int n = s.shells;
        const int lo = n - std::max(1, n / 4);
        bool persistent = true;
        for (int j = lo; j < n; ++j)
            persistent = persistent &&
                         rep.defect_by_shell[static_cast<std::size_t>(j)].defect > kRefutationFloor;
        rep.verdict = persistent ? HomogeneityVerdict::not_homogeneous
                                 : HomogeneityVerdict::inconclusive;
    }
    return rep;
}

namespace {

// Halton low-discrepancy sequence, one base per coordinate.
double halton(int index, int base) {
    double f = 1.0, r = 0.0;
    int i = index;
    while (i > 0) {
        f /= base;
        r += f * (i % base);
        i /= base;
    }
    return r;
}

constexpr int kHaltonBases[] = {2, 3, 5, 7, 11, 13, 17, 19};

// Deterministic near-uniform unit direction for dim >= 2: Halton pairs
// through Box-Muller, then normalized.
std::vector<double> sphere_point(int index, int dim) {
    std::vector<double> g(static_cast<std::size_t>(dim));
    for (int c = 0; c < dim; c += 2) {
        const double u1 = std::min(std::max(halton(index + 1, kHaltonBases[c % 8]), 1e-12), 1.0);
        const double u2 = halton(index + 1, kHaltonBases[(c + 1) % 8]);
        const double r = std::sqrt(-2.0 * std::log(u1));
        g[static_cast<std::size_t>(c)] = r * std::cos(6.283185307179586 * u2);
        if (c + 1 < dim) g[static_cast<std::size_t>(c + 1)] = r * std::sin(6.283185307179586 * u2);
    }
    double n2 = 0.0;
    for (double c : g) n2 += c * c;
    const double n = std::sqrt(std::max(n2, 1e-300));
    for (double& c : g) c /= n;
    return g;
}

}  // namespace

double hom_norm(const Germ& h, const ValuedMonoid& m, int n_points) {
    require_based_at_zero(h, "hom_norm");
    if (n_points < 1) throw std::invalid_argument("hom_norm: need n_points >= 1");
    const int dim = h.dim_in();
    const bool annulus = m.kind() == ValuedMonoid::Kind::PowersOfK;
    const double log_k = annulus ? std::log(m.k()) : 0.0;

    double best = 0.0;
    if (dim == 1) {
        // both signs on an equally spaced log grid (annulus), or just the
        // two sphere points for the real monoids
        if (annulus) {
            for (int i = 0; i < n_points; ++i) {
                const double lm = log_k * (i + 0.5) / n_points;
                for (int sign : {1, -1}) {
                    const ScalePoint x{sign, lm};
                    best = std::max(best, sp_mag_ratio(sp_norm(h.eval(SpVec{x})), sp_abs(x)));
                }
            }
        } else {
            for (int sign : {1, -1}) {
                const ScalePoint x{sign, 0.0};
                best = std::max(best, sp_mag_ratio(sp_norm(h.eval(SpVec{x})), sp_abs(x)));
            }
        }
        return best;
    }

    for (int i = 0; i < n_points; ++i) {
        const auto dir = sphere_point(i, dim);
        const double lm = annulus ? log_k * ((i % 64) + 0.5) / 64.0 : 0.0;
        SpVec x(static_cast<std::size_t>(dim));
        for (int c = 0; c < dim; ++c) {
            const double d = dir[static_cast<std::size_t>(c)];
            x[static_cast<std::size_t>(c)] =
                d == 0.0 ? ScalePoint::zero()
                         : ScalePoint{d > 0 ? 1 : -1, lm + std::log(std::fabs(d))};
        }
        best = std::max(best, sp_mag_ratio(sp_norm(h.eval(x)), sp_norm(x)));
    }
    return best;
}

}  // namespace metjet
