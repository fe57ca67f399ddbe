#pragma once

// Extended-range scalar arithmetic in (sign, log-magnitude) form.
//
// A ScalePoint represents sign * exp(logmag). Magnitudes like exp(-2575)
// underflow IEEE doubles but are ordinary values here; all deep-zoom
// probing in this library runs on ScalePoints.

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace metjet {

struct ScalePoint {
    int sign = 0;         // -1, 0, +1
    double logmag = 0.0;  // ln|x|; meaningless (kept at 0) when sign == 0

    constexpr ScalePoint() = default;
    constexpr ScalePoint(int s, double l) : sign(s), logmag(s == 0 ? 0.0 : l) {}

    static ScalePoint zero() { return {}; }
    static ScalePoint one() { return {1, 0.0}; }

    static ScalePoint from_double(double x) {
        if (x == 0.0) return {};
        return {x > 0.0 ? 1 : -1, std::log(std::fabs(x))};
    }

    // Underflows/overflows to 0 / +-inf outside double range.
    double to_double() const {
        if (sign == 0) return 0.0;
        return static_cast<double>(sign) * std::exp(logmag);
    }

    bool is_zero() const { return sign == 0; }

    friend bool operator==(const ScalePoint& a, const ScalePoint& b) {
        if (a.sign != b.sign) return false;
        return a.sign == 0 || a.logmag == b.logmag;
    }
};

// Magnitude gap beyond which sp_add saturates to the dominant operand:
// the log1p correction term is below double precision there anyway.
inline constexpr double kAddSaturationGap = 700.0;

ScalePoint sp_mul(ScalePoint x, ScalePoint y);
ScalePoint sp_add(ScalePoint x, ScalePoint y);

inline ScalePoint sp_neg(ScalePoint x) { return {-x.sign, x.logmag}; }
inline ScalePoint sp_abs(ScalePoint x) { return {x.sign == 0 ? 0 : 1, x.logmag}; }
inline ScalePoint sp_sub(ScalePoint x, ScalePoint y) { return sp_add(x, sp_neg(y)); }
inline ScalePoint sp_scale(ScalePoint x, double c) { return sp_mul(x, ScalePoint::from_double(c)); }

// |x| < |y| (zero is smaller than everything nonzero)
inline bool sp_mag_less(ScalePoint x, ScalePoint y) {
    if (x.sign == 0) return y.sign != 0;
    if (y.sign == 0) return false;
    return x.logmag < y.logmag;
}

using SpVec = std::vector<ScalePoint>;

// Euclidean norm of a ScalePoint vector, as a nonnegative ScalePoint.
ScalePoint sp_norm(std::span<const ScalePoint> v);

// exp(logmag(a) - logmag(b)) as an ordinary double; 0 when a is zero.
// The workhorse quotient |a|/|b| behind every normalized gap.
double sp_mag_ratio(ScalePoint a, ScalePoint b);

// Text form used by the CLI and CSV files: `+exp(L)`, `-exp(L)`, `0`.
std::string sp_format(ScalePoint x);
// Accepts the exp form above or a plain decimal literal.
ScalePoint sp_parse(const std::string& text);

}  // namespace metjet
