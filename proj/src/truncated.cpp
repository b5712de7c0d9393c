#include "padyn/truncated.hpp"

#include <algorithm>

#include "padyn/errors.hpp"

namespace padyn {

namespace {

Int mod_pow(const Int& x, const Int& p, long k) {
    Int m = pow_ui(p, static_cast<unsigned long>(k));
    Int r = x % m;
    if (r < 0) r += m;
    return r;
}

Int invert_mod_pow(const Int& u, const Int& p, long k) {
    Int m = pow_ui(p, static_cast<unsigned long>(k));
    Int inv;
    if (!mpz_invert(inv.get_mpz_t(), u.get_mpz_t(), m.get_mpz_t()))
        throw DivisionByZeroError("non-unit in truncated inversion");
    return inv;
}

}  // namespace

TruncatedScalar::TruncatedScalar(Prime p, const Rat& x, long n) : p_(p), zero_(false), v_(0), prec_(0), abs_prec_(0) {
    if (n <= 0) throw Error("truncated precision must be positive");
    if (x == 0) {
        zero_ = true;
        abs_prec_ = kExactZero;
        return;
    }
    v_ = *rat_valuation(x, p.as_int());
    const Rat u = unit_part(x, p.as_int());
    // unit = num * den^{-1} mod p^n; both are coprime to p.
    const Int den_inv = invert_mod_pow(mod_pow(u.get_den(), p.as_int(), n), p.as_int(), n);
    unit_ = mod_pow(u.get_num() * den_inv, p.as_int(), n);
    prec_ = n;
}

TruncatedScalar TruncatedScalar::tracked_zero(Prime p, long known_zero_to) {
    TruncatedScalar t(p);
    t.abs_prec_ = known_zero_to;
    return t;
}

TruncatedScalar TruncatedScalar::from_parts(Prime p, long v, Int unit, long prec) {
    if (prec <= 0 || unit % p.as_int() == 0 || unit <= 0)
        throw Error("malformed truncated scalar parts");
    TruncatedScalar t(p);
    t.zero_ = false;
    t.v_ = v;
    t.unit_ = std::move(unit);
    t.prec_ = prec;
    return t;
}

long TruncatedScalar::valuation() const {
    if (zero_) throw PrecisionError("valuation of a value only known ≡ 0 mod p^" + std::to_string(abs_prec_));
    return v_;
}

Radius TruncatedScalar::norm() const {
    if (is_exact_zero()) return Radius::zero();
    return Radius::from_exponent(Rat(-valuation()));
}

std::vector<unsigned long> TruncatedScalar::digits() const {
    if (zero_) throw PrecisionError("digits of a tracked zero");
    std::vector<unsigned long> out;
    out.reserve(static_cast<size_t>(prec_));
    Int rest = unit_;
    for (long i = 0; i < prec_; ++i) {
        Int digit = rest % p_.as_int();
        out.push_back(digit.get_ui());
        rest /= p_.as_int();
    }
    return out;
}

TruncatedScalar TruncatedScalar::operator-() const {
    if (zero_) return *this;
    TruncatedScalar t(p_);
    t.zero_ = false;
    t.v_ = v_;
    t.prec_ = prec_;
    t.unit_ = pow_ui(p_.as_int(), static_cast<unsigned long>(prec_)) - unit_;
    return t;
}

TruncatedScalar TruncatedScalar::operator+(const TruncatedScalar& o) const {
    if (p_ != o.p_) throw Error("mixed primes in truncated arithmetic");
    const long a1 = abs_precision(), a2 = o.abs_precision();
    long a = std::min(a1, a2);
    if (zero_ && o.zero_) return tracked_zero(p_, a);
    if (zero_) {
        // o is nonzero; adding something ≡ 0 mod p^a1 only trims precision.
        if (o.v_ >= a) return tracked_zero(p_, a);
        TruncatedScalar t = o;
        long keep = std::min(o.prec_, a - o.v_);
        t.prec_ = keep;
        t.unit_ = mod_pow(o.unit_, p_.as_int(), keep);
        if (t.unit_ == 0) throw Error("internal: unit lost in zero-add");
        return t;
    }
    if (o.zero_) return o + *this;

    const long m = std::min(v_, o.v_);
    const long window = a - m;
    if (window <= 0) return tracked_zero(p_, a);
    Int t = mod_pow(unit_ * pow_ui(p_.as_int(), static_cast<unsigned long>(v_ - m)) +
                        o.unit_ * pow_ui(p_.as_int(), static_cast<unsigned long>(o.v_ - m)),
                    p_.as_int(), window);
    if (t == 0) return tracked_zero(p_, a);
    const long vt = int_valuation(t, p_.as_int());
    TruncatedScalar r(p_);
    r.zero_ = false;
    r.v_ = m + vt;
    r.prec_ = window - vt;
    r.unit_ = t / pow_ui(p_.as_int(), static_cast<unsigned long>(vt));
    return r;
}

TruncatedScalar TruncatedScalar::operator-(const TruncatedScalar& o) const { return *this + (-o); }

TruncatedScalar TruncatedScalar::operator*(const TruncatedScalar& o) const {
    if (p_ != o.p_) throw Error("mixed primes in truncated arithmetic");
    if (zero_ || o.zero_) {
        if (is_exact_zero() || o.is_exact_zero()) return tracked_zero(p_, kExactZero);
        // v(xy) >= abs_prec(zero side) + v(other side); for two tracked zeros
        // the bound abs1 + abs2 holds as well.
        long bound;
        if (zero_ && o.zero_) bound = abs_prec_ + o.abs_prec_;
        else if (zero_) bound = abs_prec_ + o.v_;
        else bound = o.abs_prec_ + v_;
        return tracked_zero(p_, bound);
    }
    TruncatedScalar r(p_);
    r.zero_ = false;
    r.v_ = v_ + o.v_;
    r.prec_ = std::min(prec_, o.prec_);
    r.unit_ = mod_pow(unit_ * o.unit_, p_.as_int(), r.prec_);
    return r;
}

TruncatedScalar TruncatedScalar::inverse() const {
    if (zero_) {
        if (is_exact_zero()) throw DivisionByZeroError();
        throw PrecisionError("inverting a value not certified nonzero");
    }
    TruncatedScalar r(p_);
    r.zero_ = false;
    r.v_ = -v_;
    r.prec_ = prec_;
    r.unit_ = invert_mod_pow(unit_, p_.as_int(), prec_);
    return r;
}

TruncatedScalar TruncatedScalar::operator/(const TruncatedScalar& o) const {
    if (zero_ && !o.zero_) return tracked_zero(p_, is_exact_zero() ? kExactZero : abs_prec_ - o.v_);
    return *this * o.inverse();
}

bool TruncatedScalar::certified_unequal(const TruncatedScalar& o) const {
    if (is_exact_zero() && o.is_exact_zero()) return false;
    TruncatedScalar d = *this - o;
    if (!d.zero_) return true;
    throw PrecisionError("values agree to all tracked digits (abs precision " +
                         std::to_string(d.abs_prec_) + "); cannot certify comparison");
}

bool TruncatedScalar::consistent_with(const TruncatedScalar& o) const {
    TruncatedScalar d = *this - o;
    return d.zero_;  // difference vanishes within the shared tracked window
}

std::string TruncatedScalar::str() const {
    if (is_exact_zero()) return "0";
    if (zero_) return "O(p^" + std::to_string(abs_prec_) + ")";
    std::string s = "p^" + std::to_string(v_) + "*(";
    auto ds = digits();
    for (size_t i = 0; i < ds.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(ds[i]);
    }
    return s + ")";
}

std::pair<long, std::vector<unsigned long>> digits(const Rat& x, Prime p, long n) {
    if (x == 0) throw NoExpansionError();
    TruncatedScalar t(p, x, n);
    return {t.valuation(), t.digits()};
}

}  // namespace padyn
