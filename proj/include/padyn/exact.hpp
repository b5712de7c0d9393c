#pragma once

#include <memory>
#include <optional>
#include <string>

#include "padyn/hensel.hpp"
#include "padyn/prime.hpp"
#include "padyn/radius.hpp"

namespace padyn {

// a + b*sqrt(D) with exact rational a, b and a fixed non-square rational D
// per analysis context. Rationals carry D = 0. Construction collapses square
// radicands, so b != 0 implies D is not a square in Q. Mixing two genuinely
// different radicands is refused (ExtensionTowerError) rather than coerced.
class ExactElement {
  public:
    ExactElement() : a_(0), b_(0), d_(0) {}
    ExactElement(const Rat& a) : a_(a), b_(0), d_(0) {}
    ExactElement(long a) : a_(a), b_(0), d_(0) {}
    static ExactElement make(const Rat& a, const Rat& b, const Rat& d);

    const Rat& rational_part() const { return a_; }
    const Rat& radical_part() const { return b_; }
    const Rat& radicand() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }
    // Only valid when is_rational().
    const Rat& as_rational() const;

    ExactElement operator-() const;
    ExactElement operator+(const ExactElement& o) const;
    ExactElement operator-(const ExactElement& o) const;
    ExactElement operator*(const ExactElement& o) const;
    ExactElement operator/(const ExactElement& o) const;
    ExactElement inverse() const;
    ExactElement conjugate() const { return make(a_, -b_, d_); }
    ExactElement pow(long k) const;

    bool operator==(const ExactElement& o) const;
    bool operator!=(const ExactElement& o) const { return !(*this == o); }

    // Total size of the numerators/denominators, used for orbit growth guards.
    size_t bit_size() const;

    std::string str() const;
    // Accepts "a", "a + b*sqrt(D)", "b*sqrt(D)", "sqrt(D)", with rational a, b, D.
    static ExactElement parse(const std::string& text);

  private:
    Rat a_, b_, d_;
};

ExactElement operator+(const Rat& a, const ExactElement& x);
ExactElement operator*(const Rat& a, const ExactElement& x);

// Valuation in the extended value group: a rational, or +inf for 0.
class ExtVal {
  public:
    static ExtVal infinite() { return ExtVal(true, Rat(0)); }
    static ExtVal of(const Rat& v) { return ExtVal(false, v); }

    bool is_infinite() const { return inf_; }
    const Rat& value() const;

    bool operator==(const ExtVal& o) const {
        return inf_ == o.inf_ && (inf_ || v_ == o.v_);
    }

  private:
    ExtVal(bool inf, const Rat& v) : inf_(inf), v_(v) {}
    bool inf_;
    Rat v_;
};

// How sqrt(D) sits relative to Q_p. Split means D is a square in Q_p (the
// context then fixes one Hensel root as the embedding); Inert/Ramified mean
// Q_p(sqrt(D)) is a genuine quadratic field and the norm form applies.
enum class ExtClass { None, Split, Inert, Ramified };

class PadicContext {
  public:
    explicit PadicContext(Prime p);
    PadicContext(Prime p, const Rat& d);

    Prime prime() const { return p_; }
    ExtClass ext_class() const { return cls_; }
    const Rat& discriminant() const { return d_; }
    bool has_extension() const { return cls_ != ExtClass::None; }

    // True when x can be expressed in this context (rational, or same D).
    bool contains(const ExactElement& x) const;

    ExtVal valuation(const ExactElement& x) const;
    Radius norm(const ExactElement& x) const;
    Radius distance(const ExactElement& x, const ExactElement& y) const { return norm(x - y); }

    // sqrt of a rational s inside this context: a rational root, or t*sqrt(D)
    // when s/D is a rational square. nullopt when s needs a different
    // extension than this context carries.
    std::optional<ExactElement> sqrt_in_context(const Rat& s) const;

    // The canonical Hensel embedding of sqrt(D) (Split contexts only).
    const HenselSqrt& embedding() const;

  private:
    Prime p_;
    Rat d_;
    ExtClass cls_;
    std::optional<HenselSqrt> embed_;
};

using ContextPtr = std::shared_ptr<const PadicContext>;

// Picks the context in which sqrt(s) exists: the given one if compatible,
// a fresh extension context otherwise. Returns the root and the context it
// lives in. Throws ExtensionTowerError if ctx already carries an
// incompatible extension.
struct ResolvedSqrt {
    ExactElement root;
    ContextPtr ctx;
};
ResolvedSqrt resolve_sqrt(const ContextPtr& ctx, const Rat& s);

// Truncated backend value for a quadratic context: x + y*sqrt(D) with both
// components tracked. Split contexts fold sqrt(D) into the scalar part at
// construction; Inert/Ramified keep the pair and use the norm form, so
// valuations may be half-integers.
class TruncatedExt {
  public:
    TruncatedExt(const ContextPtr& ctx, const ExactElement& value, long digits);

    const ContextPtr& context() const { return ctx_; }
    const TruncatedScalar& scalar() const { return x_; }
    const TruncatedScalar& radical() const { return y_; }

    ExtVal valuation() const;
    Radius norm() const;
    bool certified_unequal(const TruncatedExt& o) const;
    bool consistent_with(const TruncatedExt& o) const;

    TruncatedExt operator-() const;
    TruncatedExt operator+(const TruncatedExt& o) const;
    TruncatedExt operator-(const TruncatedExt& o) const;
    TruncatedExt operator*(const TruncatedExt& o) const;
    TruncatedExt operator/(const TruncatedExt& o) const;

    std::string str() const;

  private:
    TruncatedExt(ContextPtr ctx, TruncatedScalar x, TruncatedScalar y);

    ContextPtr ctx_;
    TruncatedScalar x_, y_;
};

}  // namespace padyn
