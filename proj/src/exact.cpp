#include "padyn/exact.hpp"

#include <algorithm>

#include "padyn/errors.hpp"

namespace padyn {

namespace {

// One radicand per analysis: binary operations accept (rational, anything)
// and (same D, same D), nothing else.
const Rat& merged_radicand(const ExactElement& x, const ExactElement& y) {
    if (x.radical_part() == 0) return y.radicand();
    if (y.radical_part() == 0) return x.radicand();
    if (x.radicand() == y.radicand()) return x.radicand();
    throw ExtensionTowerError("mixing sqrt(" + to_string(x.radicand()) + ") with sqrt(" +
                              to_string(y.radicand()) + ")");
}

}  // namespace

ExactElement ExactElement::make(const Rat& a, const Rat& b, const Rat& d) {
    ExactElement e;
    if (b == 0 || d == 0) {
        e.a_ = a;
        return e;
    }
    if (auto r = rational_sqrt(d)) {  // collapse square radicands
        e.a_ = a + b * *r;
        return e;
    }
    e.a_ = a;
    e.b_ = b;
    e.d_ = d;
    return e;
}

const Rat& ExactElement::as_rational() const {
    if (!is_rational()) throw Error("element is not rational: " + str());
    return a_;
}

ExactElement ExactElement::operator-() const { return make(-a_, -b_, d_); }

ExactElement ExactElement::operator+(const ExactElement& o) const {
    return make(a_ + o.a_, b_ + o.b_, merged_radicand(*this, o));
}

ExactElement ExactElement::operator-(const ExactElement& o) const { return *this + (-o); }

ExactElement ExactElement::operator*(const ExactElement& o) const {
    const Rat& d = merged_radicand(*this, o);
    return make(a_ * o.a_ + d * b_ * o.b_, a_ * o.b_ + b_ * o.a_, d);
}

ExactElement ExactElement::inverse() const {
    if (is_zero()) throw DivisionByZeroError();
    if (is_rational()) return ExactElement(Rat(1) / a_);
    const Rat n = a_ * a_ - d_ * b_ * b_;  // nonzero: d_ is not a square
    return make(a_ / n, -b_ / n, d_);
}

ExactElement ExactElement::operator/(const ExactElement& o) const { return *this * o.inverse(); }

ExactElement ExactElement::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    ExactElement r(Rat(1)), base = *this;
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

bool ExactElement::operator==(const ExactElement& o) const {
    if (is_rational() && o.is_rational()) return a_ == o.a_;
    if (is_rational() != o.is_rational()) return false;
    if (d_ != o.d_)
        throw ExtensionTowerError("comparing elements of different extensions");
    return a_ == o.a_ && b_ == o.b_;
}

size_t ExactElement::bit_size() const {
    auto bits = [](const Rat& q) {
        return mpz_sizeinbase(q.get_num().get_mpz_t(), 2) + mpz_sizeinbase(q.get_den().get_mpz_t(), 2);
    };
    return bits(a_) + bits(b_);
}

std::string ExactElement::str() const {
    if (is_rational()) return to_string(a_);
    std::string s;
    if (a_ != 0) s = to_string(a_) + (b_ > 0 ? " + " : " - ");
    else if (b_ < 0) s = "-";
    const Rat mag = b_ > 0 ? b_ : Rat(-b_);
    if (mag != 1) s += to_string(mag) + "*";
    return s + "sqrt(" + to_string(d_) + ")";
}

ExactElement operator+(const Rat& a, const ExactElement& x) { return ExactElement(a) + x; }
ExactElement operator*(const Rat& a, const ExactElement& x) { return ExactElement(a) * x; }

namespace {

size_t skip_ws(const std::string& s, size_t i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    return i;
}

// term := [rat '*'] 'sqrt(' rat ')' | rat
struct Term {
    Rat coef;
    Rat radicand;  // 0 for a plain rational term
};

Term parse_term(const std::string& s) {
    const size_t sq = s.find("sqrt(");
    if (sq == std::string::npos) return {parse_rational(s), Rat(0)};
    const size_t close = s.rfind(')');
    if (close == std::string::npos || close < sq) throw ParseError("unbalanced sqrt in '" + s + "'");
    const Rat rad = parse_rational(s.substr(sq + 5, close - sq - 5));
    std::string pre = s.substr(0, sq);
    const size_t star = pre.rfind('*');
    Rat coef(1);
    if (star != std::string::npos) {
        coef = parse_rational(pre.substr(0, star));
    } else {
        const std::string head = pre.substr(0, pre.find_last_not_of(" \t") + 1);
        if (head == "-") coef = -1;
        else if (!head.empty() && head != "+") throw ParseError("bad sqrt coefficient in '" + s + "'");
    }
    return {coef, rad};
}

}  // namespace

ExactElement ExactElement::parse(const std::string& text) {
    // Split on the top-level + or - that separates the two terms (the sign of
    // the first term is part of its literal).
    size_t split = std::string::npos;
    int depth = 0;
    for (size_t i = skip_ws(text, 0) + 1; i < text.size(); ++i) {
        const char ch = text[i];
        if (ch == '(') ++depth;
        else if (ch == ')') --depth;
        else if (depth == 0 && (ch == '+' || ch == '-')) {
            const char prev = text[i - 1];
            if (prev != 'e' && prev != 'E') {
                split = i;
                break;
            }
        }
    }
    if (split == std::string::npos) {
        Term t = parse_term(text);
        return t.radicand == 0 ? ExactElement(t.coef) : make(Rat(0), t.coef, t.radicand);
    }
    Term first = parse_term(text.substr(0, split));
    std::string rest = text.substr(split);  // keeps the sign
    rest = (rest[0] == '+') ? rest.substr(1) : "-" + rest.substr(1);
    Term second = parse_term(rest);
    if (first.radicand != 0 && second.radicand != 0)
        throw ParseError("two radical terms in '" + text + "'");
    if (first.radicand != 0) std::swap(first, second);
    if (second.radicand == 0) return ExactElement(first.coef + second.coef);
    return make(first.coef, second.coef, second.radicand);
}

const Rat& ExtVal::value() const {
    if (inf_) throw Error("value of the infinite valuation");
    return v_;
}

PadicContext::PadicContext(Prime p) : p_(p), d_(0), cls_(ExtClass::None) {}

PadicContext::PadicContext(Prime p, const Rat& d) : p_(p), d_(d), cls_(ExtClass::None) {
    if (d == 0 || rational_sqrt(d)) throw Error("context discriminant must be a non-square");
    const long v = *rat_valuation(d_, p_.as_int());
    if (v % 2 != 0) {
        cls_ = ExtClass::Ramified;
        return;
    }
    auto sc = sqrt_class(d_, p_, 1);
    if (sc.cls == SquareClass::SquareInBase) {
        cls_ = ExtClass::Split;
        embed_.emplace(d_, p_);
    } else if (!p_.odd()) {
        // v even, unit not ≡ 1 mod 8: ≡ 5 mod 8 is the unramified quadratic
        // extension of Q_2, ≡ 3,7 mod 8 are ramified.
        TruncatedScalar u(p_, unit_part(d_, p_.as_int()), 3);
        const unsigned long u8 = (u.unit() % 8).get_ui();
        cls_ = (u8 == 5) ? ExtClass::Inert : ExtClass::Ramified;
    } else {
        cls_ = ExtClass::Inert;
    }
}

bool PadicContext::contains(const ExactElement& x) const {
    return x.is_rational() || (has_extension() && x.radicand() == d_);
}

const HenselSqrt& PadicContext::embedding() const {
    if (!embed_) throw Error("context has no split embedding");
    return *embed_;
}

ExtVal PadicContext::valuation(const ExactElement& x) const {
    if (x.is_rational()) {
        auto v = rat_valuation(x.as_rational(), p_.as_int());
        return v ? ExtVal::of(Rat(*v)) : ExtVal::infinite();
    }
    if (!contains(x)) throw ExtensionTowerError("element sqrt(" + to_string(x.radicand()) +
                                                ") outside context sqrt(" + to_string(d_) + ")");
    const Rat& a = x.rational_part();
    const Rat& b = x.radical_part();
    if (cls_ == ExtClass::Inert || cls_ == ExtClass::Ramified) {
        const Rat nf = a * a - d_ * b * b;  // field norm; nonzero since d_ is a non-square
        return ExtVal::of(Rat(*rat_valuation(nf, p_.as_int())) / 2);
    }
    // Split: valuation of a + b*rho under the fixed embedding rho of sqrt(D).
    const long v_rho = embed_->valuation();
    const long vb = *rat_valuation(b, p_.as_int()) + v_rho;
    if (a == 0) return ExtVal::of(Rat(vb));
    const long va = *rat_valuation(a, p_.as_int());
    if (va != vb) return ExtVal::of(Rat(std::min(va, vb)));
    // Equal leading valuations: cancellation depth is bounded by
    // v(a^2 - D b^2) - 2 min, so a finite digit window certifies the answer.
    const long big_v = *rat_valuation(a * a - d_ * b * b, p_.as_int());
    const long window = big_v - 2 * va + 2;
    TruncatedScalar t = TruncatedScalar(p_, a, window) +
                        TruncatedScalar(p_, b, window) * embed_->root(window);
    return ExtVal::of(Rat(t.valuation()));
}

Radius PadicContext::norm(const ExactElement& x) const {
    const ExtVal v = valuation(x);
    if (v.is_infinite()) return Radius::zero();
    return Radius::from_exponent(-v.value());
}

std::optional<ExactElement> PadicContext::sqrt_in_context(const Rat& s) const {
    if (s == 0) return ExactElement();
    if (auto r = rational_sqrt(s)) return ExactElement(*r);
    if (!has_extension()) return std::nullopt;
    if (auto t = rational_sqrt(s / d_)) return ExactElement::make(Rat(0), *t, d_);
    return std::nullopt;
}

ResolvedSqrt resolve_sqrt(const ContextPtr& ctx, const Rat& s) {
    if (auto r = ctx->sqrt_in_context(s)) return {*r, ctx};
    if (ctx->has_extension())
        throw ExtensionTowerError("sqrt(" + to_string(s) + ") needs a second extension over sqrt(" +
                                  to_string(ctx->discriminant()) + ")");
    auto fresh = std::make_shared<PadicContext>(ctx->prime(), s);
    return {ExactElement::make(Rat(0), Rat(1), s), std::move(fresh)};
}

TruncatedExt::TruncatedExt(ContextPtr ctx, TruncatedScalar x, TruncatedScalar y)
    : ctx_(std::move(ctx)), x_(std::move(x)), y_(std::move(y)) {}

TruncatedExt::TruncatedExt(const ContextPtr& ctx, const ExactElement& value, long digits)
    : ctx_(ctx),
      x_(ctx->prime(), value.rational_part(), digits),
      y_(ctx->prime(), Rat(0), digits) {
    if (!ctx->contains(value))
        throw ExtensionTowerError("value outside the truncated context");
    if (value.radical_part() == 0) return;
    TruncatedScalar b(ctx->prime(), value.radical_part(), digits);
    if (ctx->ext_class() == ExtClass::Split) {
        x_ = x_ + b * ctx->embedding().root(digits);
    } else {
        y_ = b;
    }
}

namespace {

// Working relative precision for context constants: whatever the nonzero
// operands actually track (tracked zeros force tracked-zero products anyway).
long constant_digits(std::initializer_list<const TruncatedScalar*> xs) {
    long n = 1;
    for (const TruncatedScalar* s : xs)
        if (!s->is_tracked_zero()) n = std::max(n, s->precision());
    return n;
}

}  // namespace

ExtVal TruncatedExt::valuation() const {
    if (y_.is_exact_zero() || ctx_->ext_class() == ExtClass::Split || !ctx_->has_extension()) {
        if (x_.is_exact_zero()) return ExtVal::infinite();
        return ExtVal::of(Rat(x_.valuation()));
    }
    if (x_.is_exact_zero() && y_.is_exact_zero()) return ExtVal::infinite();
    // Norm form in tracked arithmetic; PrecisionError propagates honestly.
    TruncatedScalar d(ctx_->prime(), ctx_->discriminant(), constant_digits({&x_, &y_}));
    TruncatedScalar nf = x_ * x_ - d * y_ * y_;
    return ExtVal::of(Rat(nf.valuation()) / 2);
}

Radius TruncatedExt::norm() const {
    const ExtVal v = valuation();
    if (v.is_infinite()) return Radius::zero();
    return Radius::from_exponent(-v.value());
}

bool TruncatedExt::certified_unequal(const TruncatedExt& o) const {
    TruncatedExt d = *this - o;
    bool xz = d.x_.is_tracked_zero(), yz = d.y_.is_tracked_zero();
    if (!xz || !yz) return true;
    if (d.x_.is_exact_zero() && d.y_.is_exact_zero()) return false;
    throw PrecisionError("extension values agree to all tracked digits");
}

bool TruncatedExt::consistent_with(const TruncatedExt& o) const {
    TruncatedExt d = *this - o;
    return d.x_.is_tracked_zero() && d.y_.is_tracked_zero();
}

TruncatedExt TruncatedExt::operator-() const { return TruncatedExt(ctx_, -x_, -y_); }

TruncatedExt TruncatedExt::operator+(const TruncatedExt& o) const {
    return TruncatedExt(ctx_, x_ + o.x_, y_ + o.y_);
}

TruncatedExt TruncatedExt::operator-(const TruncatedExt& o) const { return *this + (-o); }

TruncatedExt TruncatedExt::operator*(const TruncatedExt& o) const {
    if (y_.is_exact_zero() && o.y_.is_exact_zero())
        return TruncatedExt(ctx_, x_ * o.x_, y_);
    TruncatedScalar d(ctx_->prime(), ctx_->discriminant(), constant_digits({&x_, &y_, &o.x_, &o.y_}));
    return TruncatedExt(ctx_, x_ * o.x_ + d * (y_ * o.y_), x_ * o.y_ + y_ * o.x_);
}

TruncatedExt TruncatedExt::operator/(const TruncatedExt& o) const {
    if (o.y_.is_exact_zero()) return TruncatedExt(ctx_, x_ / o.x_, y_.is_exact_zero() ? y_ : y_ / o.x_);
    TruncatedScalar d(ctx_->prime(), ctx_->discriminant(), constant_digits({&o.x_, &o.y_}));
    TruncatedScalar nf = o.x_ * o.x_ - d * (o.y_ * o.y_);
    TruncatedExt conj(ctx_, o.x_, -o.y_);
    TruncatedExt num = *this * conj;
    return TruncatedExt(ctx_, num.x_ / nf, num.y_ / nf);
}

std::string TruncatedExt::str() const {
    if (y_.is_exact_zero()) return x_.str();
    return x_.str() + " + (" + y_.str() + ")*sqrt(" + to_string(ctx_->discriminant()) + ")";
}

}  // namespace padyn
