#pragma once

// Geometric shell schedules discretizing the limit r -> 0.
//
// Shell j has outer log-radius logmag(r0) + j*ln(ratio); samples are
// log-uniform inside each shell. One offset pattern (positions and
// signs), drawn once from the seed, is reused across all shells: this
// keeps the per-shell sample phases aligned for log-periodic profiles,
// which is what makes shellwise sup sequences of fractal germs settle.

#include <cstdint>
#include <vector>

#include "metjet/scale_point.hpp"

namespace metjet {

struct ShellSchedule {
    ScalePoint r0 = ScalePoint::one();  // initial (outermost) radius, > 0
    double ratio = 0.5;                 // in (0,1)
    int shells = 200;
    int samples_per_shell = 256;
    std::uint64_t rng_seed = 0x5eed;

    // Spec'd library default: reaches magnitude 2^-200 in under a second.
    static ShellSchedule defaults() { return {}; }

    void validate() const;  // throws std::invalid_argument on bad fields

    double log_ratio() const;
    // outer log-radius of shell j (shell j spans (outer_logmag(j+1), outer_logmag(j)])
    double outer_logmag(int j) const;
};

// samples_per_shell nonzero 1-d points with logmag in (outer_logmag(j+1), outer_logmag(j)]
// and random sign; deterministic given the schedule and seed.
std::vector<ScalePoint> shell_points(const ShellSchedule& s, int shell_index);

// n-dimensional variant: each sample is a point with the shell's log-magnitude
// and a random direction (1-d reduces to shell_points).
std::vector<SpVec> shell_points_nd(const ShellSchedule& s, int shell_index, int dim);

}  // namespace metjet
