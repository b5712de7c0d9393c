#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace padyn {

using Int = mpz_class;
using Rat = mpq_class;

// Parses "n", "-n", "n/m" (spaces tolerated). Throws ParseError on anything else.
Rat parse_rational(const std::string& text);

std::string to_string(const Rat& q);
std::string to_string(const Int& z);

// Exponent of p in z (z != 0). Caller guarantees p >= 2.
long int_valuation(const Int& z, const Int& p);

// Exponent of p in q, std::nullopt for q = 0.
std::optional<long> rat_valuation(const Rat& q, const Int& p);

// The p-coprime part of q: q / p^v with v = rat_valuation(q). q != 0.
Rat unit_part(const Rat& q, const Int& p);

// If q = r^2 for rational r >= 0, returns r.
std::optional<Rat> rational_sqrt(const Rat& q);

Int pow_ui(const Int& base, unsigned long e);

// q^e for integer e (negative allowed; q != 0 when e < 0).
Rat rat_pow(const Rat& q, long e);

}  // namespace padyn
