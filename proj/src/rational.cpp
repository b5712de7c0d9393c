#include "padyn/rational.hpp"

#include <cctype>

#include "padyn/errors.hpp"

namespace padyn {

namespace {

std::string strip(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

bool is_integer_literal(const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
    const std::string s = strip(text);
    const size_t slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_literal(s)) throw ParseError("bad rational literal: '" + text + "'");
        return Rat(Int(s));
    }
    const std::string num = strip(s.substr(0, slash));
    const std::string den = strip(s.substr(slash + 1));
    if (!is_integer_literal(num) || !is_integer_literal(den))
        throw ParseError("bad rational literal: '" + text + "'");
    Int d(den);
    if (d == 0) throw ParseError("zero denominator in '" + text + "'");
    Rat q(Int(num), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rat& q) { return q.get_str(); }
std::string to_string(const Int& z) { return z.get_str(); }

long int_valuation(const Int& z, const Int& p) {
    Int rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t()));
}

std::optional<long> rat_valuation(const Rat& q, const Int& p) {
    if (q == 0) return std::nullopt;
    // mpq is kept canonical, so p divides at most one of num/den.
    long vn = int_valuation(q.get_num(), p);
    if (vn > 0) return vn;
    return -int_valuation(q.get_den(), p);
}

Rat unit_part(const Rat& q, const Int& p) {
    auto v = rat_valuation(q, p);
    if (!v) throw DivisionByZeroError("unit part of 0");
    return q / rat_pow(Rat(p), *v);
}

std::optional<Rat> rational_sqrt(const Rat& q) {
    if (q < 0) return std::nullopt;
    if (q == 0) return Rat(0);
    if (!mpz_perfect_square_p(q.get_num().get_mpz_t())) return std::nullopt;
    if (!mpz_perfect_square_p(q.get_den().get_mpz_t())) return std::nullopt;
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), q.get_den().get_mpz_t());
    Rat r(rn, rd);
    r.canonicalize();
    return r;
}

Int pow_ui(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rat rat_pow(const Rat& q, long e) {
    if (e == 0) return Rat(1);
    if (q == 0) {
        if (e < 0) throw DivisionByZeroError("0 raised to a negative power");
        return Rat(0);
    }
    const unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
    Rat r(pow_ui(Int(q.get_num()), mag), pow_ui(Int(q.get_den()), mag));
    r.canonicalize();
    if (e < 0) r = 1 / r;
    return r;
}

}  // namespace padyn
