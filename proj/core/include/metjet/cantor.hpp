#pragma once

// Exact distance to the triadic Cantor set K and to the increasing union
// K_inf of its 3^n scalings. Powers the giseh gallery germ.

namespace metjet {

inline constexpr int kCantorDefaultDepth = 64;

// d(x, K); absolute error <= 3^-max_depth (the depth cap treats the
// remaining point as inside the set, a one-sided error).
double dist_cantor(double x, int max_depth = kCantorDefaultDepth);

// d(x, K_inf) with K_inf the union of 3^n K over n >= 0.
double dist_kinf(double x, int max_depth = kCantorDefaultDepth);

}  // namespace metjet
