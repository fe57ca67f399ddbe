#include "metjet/valued_monoid.hpp"

#include <cmath>
#include <stdexcept>

#include "metjet/csv.hpp"

namespace metjet {

ValuedMonoid ValuedMonoid::powers_of(double k) {
    if (!(k > 0.0 && k < 1.0))
        throw std::invalid_argument("PowersOfK needs k in (0,1)");
    return ValuedMonoid(Kind::PowersOfK, k);
}

double ValuedMonoid::valuation(double t) const {
    switch (kind_) {
        case Kind::Reals: return std::fabs(t);
        default: return t;  // identity on the nonnegative monoids
    }
}

double ValuedMonoid::log_scale_at_step(int n) const {
    if (kind_ == Kind::PowersOfK) return static_cast<double>(n) * std::log(k_);
    return -0.5 * static_cast<double>(n);
}

std::string ValuedMonoid::to_string() const {
    switch (kind_) {
        case Kind::Reals: return "R";
        case Kind::NonnegReals: return "R+";
        default: return "Nk:" + fmt_double(k_);
    }
}

ValuedMonoid ValuedMonoid::parse(const std::string& spec) {
    if (spec == "R") return reals();
    if (spec == "R+") return nonneg_reals();
    if (spec.rfind("Nk:", 0) == 0) {
        std::size_t used = 0;
        double k = 0.0;
        try {
            k = std::stod(spec.substr(3), &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad monoid spec: " + spec);
        }
        if (used != spec.size() - 3) throw std::invalid_argument("bad monoid spec: " + spec);
        return powers_of(k);
    }
    throw std::invalid_argument("bad monoid spec (want R, R+, or Nk:<k>): " + spec);
}

}  // namespace metjet
