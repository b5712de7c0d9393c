#pragma once

#include <utility>
#include <vector>

#include "padyn/prime.hpp"
#include "padyn/radius.hpp"
#include "padyn/rational.hpp"

namespace padyn {

// A p-adic number known to finitely many digits: p^v * unit with the unit
// part tracked modulo p^prec (leading digit nonzero). Every operation
// propagates the minimum justified precision; cancellation in a subtraction
// genuinely loses digits. A "tracked zero" records only that the value is
// ≡ 0 mod p^k, and the backend refuses (PrecisionError) to answer questions
// the digits cannot certify.
class TruncatedScalar {
  public:
    // Absolute precision used for values that are zero exactly (not merely
    // indistinguishable from zero).
    static constexpr long kExactZero = 1L << 58;

    TruncatedScalar(Prime p, const Rat& x, long digits);

    static TruncatedScalar tracked_zero(Prime p, long known_zero_to);
    static TruncatedScalar from_parts(Prime p, long v, Int unit, long prec);

    Prime prime() const { return p_; }
    bool is_tracked_zero() const { return zero_; }
    bool is_exact_zero() const { return zero_ && abs_prec_ >= kExactZero; }

    // Valuation / norm, certified by a nonzero leading digit. Throws
    // PrecisionError on a tracked (non-exact) zero.
    long valuation() const;
    Radius norm() const;

    // Nonzero case only.
    const Int& unit() const { return unit_; }
    long precision() const { return prec_; }
    // Known ≡ value mod p^abs_precision().
    long abs_precision() const { return zero_ ? abs_prec_ : v_ + prec_; }

    // Base-p digits of the unit part, least significant first (count = precision()).
    std::vector<unsigned long> digits() const;

    TruncatedScalar operator-() const;
    TruncatedScalar operator+(const TruncatedScalar& o) const;
    TruncatedScalar operator-(const TruncatedScalar& o) const;
    TruncatedScalar operator*(const TruncatedScalar& o) const;
    TruncatedScalar operator/(const TruncatedScalar& o) const;
    TruncatedScalar inverse() const;

    // Certified inequality: true means the tracked digits prove the values
    // differ. Throws PrecisionError when the digits cannot distinguish them
    // (unless both are exact zeros).
    bool certified_unequal(const TruncatedScalar& o) const;

    // True when the overlapping tracked digits of the two values agree
    // (the backend-coherence relation "equal to tracked precision").
    bool consistent_with(const TruncatedScalar& o) const;

    std::string str() const;

  private:
    TruncatedScalar(Prime p) : p_(p), zero_(true), v_(0), prec_(0), abs_prec_(0) {}

    Prime p_;
    bool zero_;
    long v_;         // valuation (nonzero case)
    Int unit_;       // in [1, p^prec_), not divisible by p
    long prec_;      // significant digits
    long abs_prec_;  // tracked-zero case: value ≡ 0 mod p^abs_prec_
};

// Canonical expansion x = p^γ (x_0 + x_1 p + ...): returns γ and the first N
// digits. Defined error on x = 0.
std::pair<long, std::vector<unsigned long>> digits(const Rat& x, Prime p, long n);

}  // namespace padyn
