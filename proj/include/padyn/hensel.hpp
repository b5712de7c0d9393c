#pragma once

#include <optional>

#include "padyn/truncated.hpp"

namespace padyn {

// Outcome of deciding squareness of a rational inside Q_p.
enum class SquareClass { SquareInBase, NeedsExtension };

struct SqrtClassification {
    SquareClass cls;
    std::optional<TruncatedScalar> root;  // present iff SquareInBase
};

// Decides whether s is a square in Q_p and, if so, Hensel-lifts the canonical
// root to n digits. Odd p: even valuation + quadratic-residue unit. p = 2:
// even valuation + unit ≡ 1 mod 8. s = 0 yields the zero root.
// The canonical root is the one with the smaller leading digit (for p = 2,
// the one ≡ 1 mod 4), so independently created lifts agree.
SqrtClassification sqrt_class(const Rat& s, Prime p, long n);

// Incrementally lifts the canonical square root of s (a square in Q_p^*);
// used as the embedding sqrt(D) -> Z_p when a discriminant splits.
class HenselSqrt {
  public:
    HenselSqrt(const Rat& s, Prime p);

    // Root as a truncated scalar with (at least) n significant digits.
    TruncatedScalar root(long n) const;

    // Valuation of the root (= v_p(s)/2).
    long valuation() const { return half_v_; }

  private:
    void ensure(long n) const;

    Rat s_;
    Prime p_;
    long half_v_;
    mutable Int unit_root_;  // root of the unit part, mod p^prec_
    mutable long prec_;
};

}  // namespace padyn
