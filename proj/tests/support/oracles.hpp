#pragma once

// Brute-force oracles for the test suite. These stay independent of the
// library's computation paths: plain double recursion, exhaustive
// endpoint enumeration and dense grids only.

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace oracles {

// Endpoints of the depth-d intervals of the middle-thirds set on [0,1].
inline std::vector<double> cantor_endpoints(int depth) {
    std::vector<double> lo{0.0}, hi{1.0};
    for (int d = 0; d < depth; ++d) {
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
    std::vector<double> pts;
    pts.reserve(lo.size() * 2);
    for (std::size_t i = 0; i < lo.size(); ++i) {
        pts.push_back(lo[i]);
        pts.push_back(hi[i]);
    }
    return pts;
}

inline double dist_to_points(double x, const std::vector<double>& pts) {
    double best = std::fabs(x);  // covers nothing by itself; callers add 0 via pts
    for (double p : pts) best = std::min(best, std::fabs(x - p));
    return best;
}

// d(x, K) by endpoint enumeration at the given depth.
inline double cantor_dist_brute(double x, int depth) {
    const auto pts = cantor_endpoints(depth);
    double best = 1e300;
    for (double p : pts) best = std::min(best, std::fabs(x - p));
    return best;
}

// d(x, K_inf) by enumeration over the endpoints of K and 3K (every
// candidate below 3 lives there; the union is increasing).
inline double kinf_dist_brute(double x, int depth) {
    if (x <= 0.0) return -x;
    const auto pts = cantor_endpoints(depth);
    double best = x;  // 0 is in the set
    for (double p : pts) {
        best = std::min(best, std::fabs(x - p));
        best = std::min(best, std::fabs(x - 3.0 * p));
    }
    return best;
}

// sup of |f| over a dense uniform grid.
inline double grid_sup(const std::function<double(double)>& f, double lo, double hi, int n) {
    double best = 0.0;
    for (int i = 0; i <= n; ++i)
        best = std::max(best, std::fabs(f(lo + (hi - lo) * i / n)));
    return best;
}

}  // namespace oracles
