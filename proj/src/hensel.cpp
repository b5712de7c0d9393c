#include "padyn/hensel.hpp"

#include "padyn/errors.hpp"

namespace padyn {

namespace {

Int mod_pow_p(const Int& x, const Int& p, long k) {
    Int m = pow_ui(p, static_cast<unsigned long>(k));
    Int r = x % m;
    if (r < 0) r += m;
    return r;
}

// Unit part of s folded into a single integer mod p^k.
Int unit_as_int(const Rat& s, const Prime& p, long k) {
    const Rat u = unit_part(s, p.as_int());
    Int m = pow_ui(p.as_int(), static_cast<unsigned long>(k));
    Int den_inv;
    if (!mpz_invert(den_inv.get_mpz_t(), Int(u.get_den() % m).get_mpz_t(), m.get_mpz_t()))
        throw Error("internal: non-unit denominator");
    return mod_pow_p(u.get_num() * den_inv, p.as_int(), k);
}

bool is_qr(const Int& u, const Int& p) {
    return mpz_legendre(u.get_mpz_t(), p.get_mpz_t()) == 1;
}

Int mod_exp(const Int& b, const Int& e, const Int& m) {
    Int r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Tonelli–Shanks square root mod an odd prime; deterministic nonresidue scan
// keeps the result canonical across calls.
Int sqrt_mod_odd_prime(const Int& a, const Int& p) {
    Int a0 = a % p;
    if (a0 < 0) a0 += p;
    if (a0 == 0) return Int(0);
    if (p % 4 == 3) return mod_exp(a0, (p + 1) / 4, p);
    // factor p-1 = q * 2^s with q odd
    Int q = p - 1;
    unsigned long s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    Int z = 2;
    while (is_qr(z, p)) ++z;
    Int m(static_cast<long>(s)), c = mod_exp(z, q, p), t = mod_exp(a0, q, p), r = mod_exp(a0, (q + 1) / 2, p);
    while (t != 1) {
        Int tt = t;
        long i = 0;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        Int b = c;
        for (Int j = 0; j < m - i - 1; ++j) b = b * b % p;
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return r;
}

// Lift r0 (r0^2 ≡ u mod p) to r with r^2 ≡ u mod p^k via Newton doubling.
Int lift_root_odd(const Int& r0, const Rat& s, const Prime& p, long k) {
    Int r = r0;
    long have = 1;
    while (have < k) {
        long next = std::min(2 * have, k);
        const Int u = unit_as_int(s, p, next);
        Int m = pow_ui(p.as_int(), static_cast<unsigned long>(next));
        Int rinv;
        if (!mpz_invert(rinv.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t()))
            throw Error("internal: root not invertible during lifting");
        Int two_inv;
        mpz_invert(two_inv.get_mpz_t(), Int(2).get_mpz_t(), m.get_mpz_t());
        r = (r + u * rinv) % m * two_inv % m;
        have = next;
    }
    return mod_pow_p(r, p.as_int(), k);
}

// 2-adic lifting for u ≡ 1 mod 8; keeps the branch ≡ 1 mod 4.
Int lift_root_two(const Rat& s, const Prime& p, long k) {
    if (k <= 2) return Int(1);
    Int r(1);
    for (long bit = 3; bit <= k; ++bit) {
        const Int u = unit_as_int(s, p, bit);
        Int m = pow_ui(p.as_int(), static_cast<unsigned long>(bit));
        if ((r * r - u) % m != 0) r += pow_ui(p.as_int(), static_cast<unsigned long>(bit - 1)) / 2;
    }
    return mod_pow_p(r, p.as_int(), k);
}

}  // namespace

SqrtClassification sqrt_class(const Rat& s, Prime p, long n) {
    if (s == 0) return {SquareClass::SquareInBase, TruncatedScalar(p, Rat(0), n)};
    const auto v = *rat_valuation(s, p.as_int());
    if (v % 2 != 0) return {SquareClass::NeedsExtension, std::nullopt};
    if (p.odd()) {
        const Int u1 = unit_as_int(s, p, 1);
        if (!is_qr(u1, p.as_int())) return {SquareClass::NeedsExtension, std::nullopt};
    } else {
        const Int u3 = unit_as_int(s, p, 3);
        if (u3 % 8 != 1) return {SquareClass::NeedsExtension, std::nullopt};
    }
    HenselSqrt h(s, p);
    return {SquareClass::SquareInBase, h.root(n)};
}

HenselSqrt::HenselSqrt(const Rat& s, Prime p) : s_(s), p_(p), prec_(0) {
    if (s == 0) throw Error("HenselSqrt of 0");
    const long v = *rat_valuation(s, p.as_int());
    if (v % 2 != 0) throw Error("HenselSqrt: odd valuation radicand");
    half_v_ = v / 2;
    if (p.odd()) {
        const Int u1 = unit_as_int(s_, p_, 1);
        if (!is_qr(u1, p.as_int())) throw Error("HenselSqrt: non-residue radicand");
        Int r = sqrt_mod_odd_prime(u1, p.as_int());
        if (p.as_int() - r < r) r = p.as_int() - r;  // canonical: smaller leading digit
        unit_root_ = r;
        prec_ = 1;
    } else {
        const Int u3 = unit_as_int(s_, p_, 3);
        if (u3 % 8 != 1) throw Error("HenselSqrt: unit not ≡ 1 mod 8");
        unit_root_ = 1;
        prec_ = 2;
    }
}

void HenselSqrt::ensure(long n) const {
    if (n <= prec_) return;
    unit_root_ = p_.odd() ? lift_root_odd(unit_root_, s_, p_, n) : lift_root_two(s_, p_, n);
    prec_ = n;
}

TruncatedScalar HenselSqrt::root(long n) const {
    ensure(n);
    return TruncatedScalar::from_parts(p_, half_v_, mod_pow_p(unit_root_, p_.as_int(), n), n);
}

}  // namespace padyn
