#pragma once

#include <compare>
#include <string>

#include "padyn/rational.hpp"

namespace padyn {

// An element of {0} ∪ p^Q ∪ {+inf}, stored as the exponent. This is both the
// range of the p-adic norm and the state space of the radius dynamics.
// Quadratic extensions put half-integers in the exponent, so it is a rational.
class Radius {
  public:
    Radius() : kind_(Kind::Zero) {}  // zero radius

    static Radius zero() { return Radius(); }
    static Radius infinity() {
        Radius r;
        r.kind_ = Kind::Inf;
        return r;
    }
    static Radius one() { return from_exponent(Rat(0)); }
    static Radius from_exponent(const Rat& e) {
        Radius r;
        r.kind_ = Kind::Finite;
        r.exp_ = e;
        r.exp_.canonicalize();
        return r;
    }

    bool is_zero() const { return kind_ == Kind::Zero; }
    bool is_infinite() const { return kind_ == Kind::Inf; }
    bool is_finite() const { return kind_ == Kind::Finite; }

    // Only valid for finite radii.
    const Rat& exponent() const;

    // Value is p^exponent, so multiplication adds exponents. 0 * inf is
    // undefined and throws.
    Radius operator*(const Radius& o) const;
    Radius operator/(const Radius& o) const;
    Radius pow(long k) const;

    bool operator==(const Radius& o) const;
    bool operator!=(const Radius& o) const { return !(*this == o); }
    bool operator<(const Radius& o) const;
    bool operator<=(const Radius& o) const { return *this < o || *this == o; }
    bool operator>(const Radius& o) const { return o < *this; }
    bool operator>=(const Radius& o) const { return o <= *this; }

    // "zero", "inf", or "p^(e)".
    std::string str() const;

  private:
    enum class Kind { Zero, Finite, Inf };
    Kind kind_;
    Rat exp_;
};

}  // namespace padyn
