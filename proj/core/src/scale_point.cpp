#include "metjet/scale_point.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <stdexcept>

namespace metjet {

ScalePoint sp_mul(ScalePoint x, ScalePoint y) {
    if (x.sign == 0 || y.sign == 0) return {};
    return {x.sign * y.sign, x.logmag + y.logmag};
}

ScalePoint sp_add(ScalePoint x, ScalePoint y) {
    if (x.sign == 0) return y;
    if (y.sign == 0) return x;

    const ScalePoint& hi = sp_mag_less(x, y) ? y : x;
    const ScalePoint& lo = sp_mag_less(x, y) ? x : y;
    const double gap = hi.logmag - lo.logmag;  // >= 0

    if (gap > kAddSaturationGap) return hi;  // documented saturation

    if (hi.sign == lo.sign) {
        return {hi.sign, hi.logmag + std::log1p(std::exp(-gap))};
    }
    if (gap == 0.0) return {};  // exact cancellation of equal magnitudes

    // log(1 - e^-gap): expm1 form is the accurate one for small gaps.
    const double corr = gap < 0.6931471805599453
                            ? std::log(-std::expm1(-gap))
                            : std::log1p(-std::exp(-gap));
    return {hi.sign, hi.logmag + corr};
}

ScalePoint sp_norm(std::span<const ScalePoint> v) {
    if (v.size() == 1) return sp_abs(v[0]);
    double max2 = -std::numeric_limits<double>::infinity();
    bool any = false;
    for (const auto& c : v) {
        if (c.sign != 0) {
            any = true;
            max2 = std::max(max2, 2.0 * c.logmag);
        }
    }
    if (!any) return {};
    double acc = 0.0;
    for (const auto& c : v) {
        if (c.sign != 0) acc += std::exp(2.0 * c.logmag - max2);
    }
    return {1, 0.5 * (max2 + std::log(acc))};
}

double sp_mag_ratio(ScalePoint a, ScalePoint b) {
    if (a.sign == 0) return 0.0;
    if (b.sign == 0) return std::numeric_limits<double>::infinity();
    return std::exp(a.logmag - b.logmag);
}

std::string sp_format(ScalePoint x) {
    if (x.sign == 0) return "0";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x.logmag);
    std::string l(buf, end);
    return (x.sign > 0 ? "+exp(" : "-exp(") + l + ")";
}

ScalePoint sp_parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty ScalePoint literal");
    if (text == "0") return {};
    if ((text[0] == '+' || text[0] == '-') && text.size() > 5 &&
        text.compare(1, 4, "exp(") == 0 && text.back() == ')') {
        const std::string inner = text.substr(5, text.size() - 6);
        double l = 0.0;
        auto [p, ec] = std::from_chars(inner.data(), inner.data() + inner.size(), l);
        if (ec != std::errc{} || p != inner.data() + inner.size())
            throw std::invalid_argument("bad logmag in ScalePoint literal: " + text);
        return {text[0] == '+' ? 1 : -1, l};
    }
    double v = 0.0;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || p != text.data() + text.size())
        throw std::invalid_argument("bad ScalePoint literal: " + text);
    return ScalePoint::from_double(v);
}

}  // namespace metjet
