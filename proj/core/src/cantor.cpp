#include "metjet/cantor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace metjet {

double dist_cantor(double x, int max_depth) {
    if (!std::isfinite(x)) throw std::invalid_argument("dist_cantor: non-finite input");
    if (max_depth < 1) throw std::invalid_argument("dist_cantor: max_depth must be >= 1");
    if (x < 0.0) return -x;
    if (x > 1.0) return x - 1.0;
    double scale = 1.0;
    for (int d = 0; d < max_depth; ++d) {
        if (x <= 1.0 / 3.0) {
            x *= 3.0;
            scale /= 3.0;
        } else if (x >= 2.0 / 3.0) {
            x = 3.0 * x - 2.0;
            scale /= 3.0;
        } else {
            return scale * std::min(x - 1.0 / 3.0, 2.0 / 3.0 - x);
        }
        if (x < 0.0) return scale * -x;
        if (x > 1.0) return scale * (x - 1.0);
    }
    return 0.0;  // depth cap: treat as inside, error <= 3^-max_depth
}

double dist_kinf(double x, int max_depth) {
    if (!std::isfinite(x)) throw std::invalid_argument("dist_kinf: non-finite input");
    if (max_depth < 1) throw std::invalid_argument("dist_kinf: max_depth must be >= 1");
    if (x <= 0.0) return -x;  // K_inf is contained in [0, inf) and contains 0

    // min over n of 3^n * d(x/3^n, K). The n-range is finite because the
    // union is increasing (K contains K/3, so 3^n K contains 3^(n-1) K)
    // and the terms become constant: once x/3^n <= 1/3, the first
    // recursion step of dist_cantor rescales by exactly 3, so
    // 3^n d(x/3^n, K) = 3^(n-1) d(x/3^(n-1), K). Stopping at the first n
    // with x/3^n <= 1/3, i.e. n = ceil(log3(max(x,1))) + 1, loses nothing.
    const int n_max = static_cast<int>(std::ceil(std::log(std::max(x, 1.0)) / std::log(3.0))) + 1;
    double best = x;  // distance to 0 itself
    double pow3 = 1.0;
    for (int n = 0; n <= n_max; ++n) {
        best = std::min(best, pow3 * dist_cantor(x / pow3, max_depth));
        pow3 *= 3.0;
    }
    return best;
}

}  // namespace metjet
