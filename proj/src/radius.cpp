#include "padyn/radius.hpp"

#include "padyn/errors.hpp"

namespace padyn {

const Rat& Radius::exponent() const {
    if (kind_ != Kind::Finite) throw Error("exponent of a non-finite radius");
    return exp_;
}

Radius Radius::operator*(const Radius& o) const {
    if (is_zero() || o.is_zero()) {
        if (is_infinite() || o.is_infinite()) throw Error("0 * inf radius is undefined");
        return zero();
    }
    if (is_infinite() || o.is_infinite()) return infinity();
    return from_exponent(exp_ + o.exp_);
}

Radius Radius::operator/(const Radius& o) const {
    if (o.is_zero()) throw DivisionByZeroError("radius division by zero");
    if (is_zero()) return zero();
    if (o.is_infinite()) {
        if (is_infinite()) throw Error("inf / inf radius is undefined");
        return zero();
    }
    if (is_infinite()) return infinity();
    return from_exponent(exp_ - o.exp_);
}

Radius Radius::pow(long k) const {
    if (k == 0) return one();
    if (is_zero()) return k > 0 ? zero() : infinity();
    if (is_infinite()) return k > 0 ? infinity() : zero();
    return from_exponent(exp_ * Rat(k));
}

bool Radius::operator==(const Radius& o) const {
    if (kind_ != o.kind_) return false;
    return kind_ != Kind::Finite || exp_ == o.exp_;
}

bool Radius::operator<(const Radius& o) const {
    if (kind_ == Kind::Zero) return o.kind_ != Kind::Zero;
    if (kind_ == Kind::Inf) return false;
    if (o.kind_ == Kind::Zero) return false;
    if (o.kind_ == Kind::Inf) return true;
    return exp_ < o.exp_;
}

std::string Radius::str() const {
    if (is_zero()) return "zero";
    if (is_infinite()) return "inf";
    return "p^(" + to_string(exp_) + ")";
}

}  // namespace padyn
