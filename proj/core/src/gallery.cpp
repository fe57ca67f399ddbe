#include "metjet/gallery.hpp"

#include <mpfr.h>

#include <cmath>
#include <map>
#include <stdexcept>

#include "metjet/cantor.hpp"
#include "metjet/rng.hpp"

namespace metjet {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;

double parse_value(const std::string& tok) {
    if (tok == "sqrt2") return std::sqrt(2.0);
    if (tok == "pi") return kPi;
    if (tok == "2pi") return kTwoPi;
    if (tok == "e") return std::exp(1.0);
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(tok, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad numeric literal: " + tok);
    }
    if (used != tok.size()) throw std::invalid_argument("bad numeric literal: " + tok);
    return v;
}

std::map<std::string, double> parse_params(const std::string& spec) {
    std::map<std::string, double> out;
    std::size_t pos = 0;
    while (pos < spec.size()) {
        const std::size_t comma = spec.find(',', pos);
        const std::string item = spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("expected key=value in germ parameters: " + item);
        out[item.substr(0, eq)] = parse_value(item.substr(eq + 1));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

double require_param(const std::map<std::string, double>& p, const std::string& key,
                     const std::string& germ) {
    auto it = p.find(key);
    if (it == p.end())
        throw std::invalid_argument("germ '" + germ + "' needs parameter " + key);
    return it->second;
}

Germ make_zero() {
    GermMeta m;
    m.lipschitz_bound = 0.0;
    m.odd_parity = true;
    m.exact_positively_homogeneous = true;
    return make_ratio_germ("zero", [](int, double) { return 0.0; }, Germ::kUnboundedRadius, m);
}

Germ make_abs() {
    GermMeta m;
    m.lipschitz_bound = 1.0;
    m.exact_positively_homogeneous = true;
    return make_ratio_germ("abs", [](int sign, double) { return static_cast<double>(sign); },
                           Germ::kUnboundedRadius, m);
}

Germ make_giseh() {
    GermMeta m;
    m.lipschitz_bound = 1.0;
    m.exact_fractal_ratio = 1.0 / 3.0;
    const double log3 = std::log(3.0);
    return make_ratio_germ(
        "giseh",
        [log3](int sign, double lm) -> double {
            if (sign < 0) return -1.0;  // left of 0 the distance is |x|, the ratio -1
            // 1/3-fractality: fold ln|x| into (ln(1/3), 0] and read the
            // ratio there, where the distance is computable in doubles.
            const double folded = lm - std::ceil(lm / log3) * log3;
            const double y = std::exp(folded);
            return dist_kinf(y) / y;
        },
        Germ::kUnboundedRadius, m);
}

Germ make_fractal_wave() {
    GermMeta m;
    m.lipschitz_bound = std::sqrt(2.0);
    m.odd_parity = true;
    m.exact_fractal_ratio = std::exp(-kTwoPi);
    return make_ratio_germ(
        "fractal_wave", [](int, double lm) { return std::sin(lm); }, Germ::kUnboundedRadius, m);
}

Germ make_uncanny() {
    GermMeta m;
    m.lipschitz_bound = 2.0;
    m.odd_parity = true;
    return make_ratio_germ(
        "uncanny",
        [](int, double lm) {
            if (lm >= 0.0) throw std::domain_error("uncanny germ evaluated outside (-1,1)");
            return std::sin(std::log(-lm));
        },
        1.0, m);
}

Germ make_bifractal(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::invalid_argument("bifractal parameters must be > 0");
    if (a == b)
        throw std::invalid_argument(
            "bifractal requires a/b irrational; a == b gives the rational ratio 1");
    GermMeta m;
    m.lipschitz_bound = std::max(1.0 + kTwoPi / a, 1.0 + kTwoPi / b);
    return make_ratio_germ(
        "bifractal",
        [a, b](int sign, double lm) {
            return sign < 0 ? std::sin(kTwoPi / a * lm) : std::sin(kTwoPi / b * lm);
        },
        Germ::kUnboundedRadius, m);
}

Germ make_f1() {
    GermMeta m;
    m.odd_parity = true;
    return make_ratio_germ(
        "f1", [](int sign, double lm) { return sign * sin_of_exp(-lm); },
        Germ::kUnboundedRadius, m);
}

Germ make_f2() {
    GermMeta m;
    m.odd_parity = true;
    Germ g = make_scalar_germ(
        "f2",
        [](ScalePoint x) -> ScalePoint {
            if (x.sign == 0) return ScalePoint::zero();
            const double s = sin_of_exp(-2.0 * x.logmag);
            if (s == 0.0) return ScalePoint::zero();
            return ScalePoint{s > 0.0 ? 1 : -1, 2.0 * x.logmag + std::log(std::fabs(s))};
        },
        Germ::kUnboundedRadius, m);
    // ratio f(x)/x = x sin(1/x^2); correctly rounds to 0 once x underflows
    g.set_ratio_profile([](int sign, double lm) -> double {
        if (lm < -745.0) return 0.0;
        return sign * std::exp(lm) * sin_of_exp(-2.0 * lm);
    });
    return g;
}

Germ make_scaled_wave(double r) {
    if (!(r > 0.0)) throw std::invalid_argument("scaled_wave needs r > 0");
    GermMeta m;
    m.lipschitz_bound = 1.0 + kTwoPi / r;
    m.odd_parity = true;
    m.exact_fractal_ratio = std::exp(-r);
    return make_ratio_germ(
        "scaled_wave", [r](int, double lm) { return std::sin(kTwoPi / r * lm); },
        Germ::kUnboundedRadius, m);
}

Germ make_jet_translation(double a, double b) {
    GermMeta m;
    m.lipschitz_bound = 1.0;
    m.label = "jet_translation";
    return Germ(
        1, 1, {a}, {b},
        [](std::span<const ScalePoint> x) { return SpVec{x[0]}; }, Germ::kUnboundedRadius, m);
}

}  // namespace

double sin_of_exp(double u) {
    if (u <= 36.0) return std::sin(std::exp(u));
    if (u > 1.0e5)
        throw std::domain_error("sin_of_exp: phase needs more than 150k bits, refusing");
    const auto prec = static_cast<mpfr_prec_t>(u * 1.4427) + 64;
    mpfr_t t;
    mpfr_init2(t, prec);
    mpfr_set_d(t, u, MPFR_RNDN);
    mpfr_exp(t, t, MPFR_RNDN);
    mpfr_sin(t, t, MPFR_RNDN);
    const double r = mpfr_get_d(t, MPFR_RNDN);
    mpfr_clear(t);
    return r;
}

void PeriodicProfile::validate() const {
    if (!(period > 0.0)) throw std::invalid_argument("profile period must be > 0");
    if (!(lipschitz_bound >= 0.0)) throw std::invalid_argument("profile lipschitz bound < 0");
    SplitMix64 rng(0x9e110d);
    for (int i = 0; i < 1000; ++i) {
        const double t = rng.uniform(-3.0 * period, 3.0 * period);
        if (std::fabs(profile(t + period) - profile(t)) > 1e-12 * std::max(1.0, std::fabs(profile(t))))
            throw std::invalid_argument("profile is not T-periodic to 1e-12");
        const double s = rng.uniform(-3.0 * period, 3.0 * period);
        if (std::fabs(profile(t) - profile(s)) > lipschitz_bound * std::fabs(t - s) + 1e-12)
            throw std::invalid_argument("profile violates its lipschitz bound");
    }
}

Germ periodic_to_fractal(const PeriodicProfile& p) {
    p.validate();
    GermMeta m;
    m.exact_fractal_ratio = std::exp(-p.period);
    auto fn = p.profile;
    return make_ratio_germ("periodic_wave", [fn](int, double lm) { return fn(lm); },
                           Germ::kUnboundedRadius, m);
}

Germ affine_tangent(const std::vector<double>& value, const std::vector<std::vector<double>>& linear,
                    const std::vector<double>& a) {
    const std::size_t rows = linear.size();
    if (rows == 0) throw std::invalid_argument("affine_tangent: empty matrix");
    const std::size_t cols = linear[0].size();
    for (const auto& row : linear)
        if (row.size() != cols) throw std::invalid_argument("affine_tangent: ragged matrix");
    if (a.size() != cols || value.size() != rows)
        throw std::invalid_argument("affine_tangent: matrix shape does not match the points");

    double frob2 = 0.0;
    for (const auto& row : linear)
        for (double c : row) frob2 += c * c;

    GermMeta m;
    m.lipschitz_bound = std::sqrt(frob2);  // Frobenius dominates the operator norm
    m.exact_positively_homogeneous = true;
    m.label = "affine";
    return Germ(
        static_cast<int>(cols), static_cast<int>(rows), a, value,
        [linear, rows, cols](std::span<const ScalePoint> x) {
            SpVec out(rows);
            for (std::size_t i = 0; i < rows; ++i) {
                ScalePoint acc = ScalePoint::zero();
                for (std::size_t j = 0; j < cols; ++j)
                    acc = sp_add(acc, sp_scale(x[j], linear[i][j]));
                out[i] = acc;
            }
            return out;
        },
        Germ::kUnboundedRadius, m);
}

Germ scaling_germ(double lambda) {
    return affine_tangent({0.0}, {{lambda}}, {0.0});
}

Germ make_named(const std::string& name) {
    std::string head = name;
    std::string params;
    if (const auto colon = name.find(':'); colon != std::string::npos) {
        head = name.substr(0, colon);
        params = name.substr(colon + 1);
    }
    const auto p = parse_params(params);

    if (head == "zero") return make_zero();
    if (head == "abs") return make_abs();
    if (head == "giseh") return make_giseh();
    if (head == "fractal_wave") return make_fractal_wave();
    if (head == "uncanny") return make_uncanny();
    if (head == "uncanny_ext") {
        Germ g = stretch(make_uncanny(), Germ::kUnboundedRadius);
        g.meta().label = "uncanny_ext";
        return g;
    }
    if (head == "bifractal") {
        const double a = p.count("a") ? p.at("a") : 1.0;
        const double b = p.count("b") ? p.at("b") : std::sqrt(2.0);
        return make_bifractal(a, b);
    }
    if (head == "f1") return make_f1();
    if (head == "f2") return make_f2();
    if (head == "scaled_wave") return make_scaled_wave(require_param(p, "r", head));
    if (head == "jet_translation")
        return make_jet_translation(require_param(p, "a", head), require_param(p, "b", head));
    throw std::invalid_argument("unknown germ name: " + name);
}

const std::vector<std::string>& known_germ_names() {
    static const std::vector<std::string> names = {
        "zero",          "abs", "giseh", "fractal_wave",         "uncanny",
        "uncanny_ext",   "bifractal:a=1,b=sqrt2",
        "f1",            "f2",  "scaled_wave:r=2pi",
        "jet_translation:a=0,b=1"};
    return names;
}

ShellSchedule recommended_schedule(const Germ& g) {
    ShellSchedule s = ShellSchedule::defaults();
    const std::string& label = g.meta().label;
    if (label == "uncanny" || label == "uncanny_ext") {
        // Probe depth must pass the profile's deep suprema near
        // |ln x| = exp(pi/2 + 2k pi); the innermost shell is placed on
        // the k = 2 peak so the cumulative-sup tail is flat.
        s.ratio = std::exp(-700.0);
        s.shells = 1971;
        s.samples_per_shell = 1024;
        return s;
    }
    if (g.meta().exact_fractal_ratio) {
        // Phase-lock the shells to the germ's log-period.
        const double k = *g.meta().exact_fractal_ratio;
        const double width = -std::log(k);
        if (width > 1e-6 && width < 200.0) {
            s.ratio = k;
            s.shells = std::max(16, static_cast<int>(std::ceil(150.0 / width)) + 1);
            s.samples_per_shell = 8192;
            return s;
        }
    }
    if (label == "bifractal") {
        s.ratio = std::exp(-12.0);
        s.shells = 16;
        s.samples_per_shell = 8192;
        return s;
    }
    if (!std::isinf(g.domain_radius()) && g.domain_radius() < 1.0)
        s.r0 = ScalePoint{1, std::log(g.domain_radius())};
    return s;
}

}  // namespace metjet
