#include "metjet/shell_schedule.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "metjet/rng.hpp"

namespace metjet {

void ShellSchedule::validate() const {
    if (r0.sign <= 0) throw std::invalid_argument("schedule r0 must be > 0");
    if (!(ratio > 0.0 && ratio < 1.0))
        throw std::invalid_argument("schedule ratio must lie in (0,1)");
    if (shells < 1) throw std::invalid_argument("schedule needs at least one shell");
    if (samples_per_shell < 1)
        throw std::invalid_argument("schedule needs at least one sample per shell");
}

double ShellSchedule::log_ratio() const { return std::log(ratio); }

double ShellSchedule::outer_logmag(int j) const {
    return r0.logmag + static_cast<double>(j) * log_ratio();
}

std::vector<ScalePoint> shell_points(const ShellSchedule& s, int shell_index) {
    s.validate();
    if (shell_index < 0 || shell_index >= s.shells)
        throw std::out_of_range("shell index " + std::to_string(shell_index) +
                                " out of range [0," + std::to_string(s.shells) + ")");
    const double hi = s.outer_logmag(shell_index);
    const double lo = s.outer_logmag(shell_index + 1);
    SplitMix64 rng(substream(s.rng_seed, 0x0ff5e75));
    std::vector<ScalePoint> pts;
    pts.reserve(static_cast<std::size_t>(s.samples_per_shell));
    for (int i = 0; i < s.samples_per_shell; ++i) {
        const double u = rng.unit_open();
        const int sign = rng.coin_sign();
        pts.push_back(ScalePoint{sign, lo + u * (hi - lo)});
    }
    return pts;
}

std::vector<SpVec> shell_points_nd(const ShellSchedule& s, int shell_index, int dim) {
    if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
    if (dim == 1) {
        auto pts = shell_points(s, shell_index);
        std::vector<SpVec> out;
        out.reserve(pts.size());
        for (auto p : pts) out.push_back(SpVec{p});
        return out;
    }
    s.validate();
    if (shell_index < 0 || shell_index >= s.shells)
        throw std::out_of_range("shell index out of range");
    const double hi = s.outer_logmag(shell_index);
    const double lo = s.outer_logmag(shell_index + 1);
    SplitMix64 rng(substream(s.rng_seed, 0x0ff5e75));
    SplitMix64 dir_rng(substream(s.rng_seed, 0xd12ec7));
    std::vector<SpVec> out;
    out.reserve(static_cast<std::size_t>(s.samples_per_shell));
    for (int i = 0; i < s.samples_per_shell; ++i) {
        const double u = rng.unit_open();
        (void)rng.coin_sign();  // keep the 1-d stream layout
        const double lm = lo + u * (hi - lo);
        // Box-Muller direction, normalized in log space.
        std::vector<double> g(static_cast<std::size_t>(dim));
        for (int c = 0; c < dim; c += 2) {
            const double u1 = dir_rng.unit_open();
            const double u2 = dir_rng.unit_open();
            const double r = std::sqrt(-2.0 * std::log(u1));
            g[static_cast<std::size_t>(c)] = r * std::cos(6.283185307179586 * u2);
            if (c + 1 < dim) g[static_cast<std::size_t>(c + 1)] = r * std::sin(6.283185307179586 * u2);
        }
        double n2 = 0.0;
        for (double c : g) n2 += c * c;
        const double n = std::sqrt(n2);
        SpVec pt;
        pt.reserve(g.size());
        for (double c : g) {
            if (c == 0.0 || n == 0.0) {
                pt.push_back(ScalePoint::zero());
            } else {
                pt.push_back(ScalePoint{c > 0 ? 1 : -1, lm + std::log(std::fabs(c) / n)});
            }
        }
        out.push_back(std::move(pt));
    }
    return out;
}

}  // namespace metjet
