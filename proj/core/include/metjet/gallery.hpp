#pragma once

// The cast of example germs, exactly implemented. Oscillatory germs
// evaluate their ratio f(x)/x straight from ln|x|, so values at depths
// like exp(-2575) are as accurate as at ordinary scale.

#include <functional>
#include <string>
#include <vector>

#include "metjet/germ.hpp"
#include "metjet/shell_schedule.hpp"

namespace metjet {

// Lipschitzian T-periodic profile; the seed material for fractal waves.
struct PeriodicProfile {
    double period;
    std::function<double(double)> profile;
    double lipschitz_bound;

    // Checks periodicity (1e-12 on 1000 samples) and the lipschitz bound
    // (1000 sampled pairs); throws std::invalid_argument on violation.
    void validate() const;
};

// Looks up a germ by CLI name. Grammar: bare names plus
//   bifractal:a=1,b=sqrt2   scaled_wave:r=2pi   jet_translation:a=0,b=1
// Value literals: decimals or sqrt2, pi, 2pi, e.
// bifractal requires a/b irrational; only exactly-equal parameters are
// rejected (irrationality of arbitrary literals is not decidable here).
Germ make_named(const std::string& name);

const std::vector<std::string>& known_germ_names();

// x -> x * p(ln|x|): an exp(-period)-fractal wave built from a profile.
Germ periodic_to_fractal(const PeriodicProfile& p);

// Germ at a of the continuous affine map with the given linear part;
// displacement action x -> linear * x.
Germ affine_tangent(const std::vector<double>& value,
                    const std::vector<std::vector<double>>& linear, const std::vector<double>& a);

// 1-d scaling germ x -> lambda*x at 0 (affine_tangent convenience).
Germ scaling_germ(double lambda);

// Schedule tuned to the germ's structure (log-period from metadata, probe
// depth for the slow log-log oscillators); the library-wide default for
// everything else. The CLI uses this when no schedule flags are given.
ShellSchedule recommended_schedule(const Germ& g);

// sin(exp(u)) for the exact real exp(u), u far beyond double phase range.
// Backed by mpfr above u = 36; throws std::domain_error for u > 1e5.
double sin_of_exp(double u);

}  // namespace metjet
