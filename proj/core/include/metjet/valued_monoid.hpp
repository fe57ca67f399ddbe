#pragma once

// Probing monoids for homogeneity and contact extraction: the reals
// valued by |t|, the nonnegative reals, and the power monoid {k^n}.

#include <string>
#include <vector>

namespace metjet {

class ValuedMonoid {
  public:
    enum class Kind { Reals, NonnegReals, PowersOfK };

    static ValuedMonoid reals() { return ValuedMonoid(Kind::Reals, 0.0); }
    static ValuedMonoid nonneg_reals() { return ValuedMonoid(Kind::NonnegReals, 0.0); }
    static ValuedMonoid powers_of(double k);

    Kind kind() const { return kind_; }
    double k() const { return k_; }

    // the valuation v: absolute value for Reals, identity otherwise
    double valuation(double t) const;

    bool has_negative_elements() const { return kind_ == Kind::Reals; }

    // Log of the zoom scale at step n for contact extraction:
    // n*ln(k) for PowersOfK, -n/2 for the real monoids.
    double log_scale_at_step(int n) const;

    // Default contact-extraction depth (deeper for the slow real ladder).
    int default_steps() const { return kind_ == Kind::PowersOfK ? 200 : 400; }

    std::string to_string() const;

    // `R`, `R+`, or `Nk:<k>`; throws std::invalid_argument otherwise.
    static ValuedMonoid parse(const std::string& spec);

  private:
    ValuedMonoid(Kind kind, double k) : kind_(kind), k_(k) {}
    Kind kind_;
    double k_;
};

}  // namespace metjet
