#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sigmatau {

// mpq_class keeps values canonical after every arithmetic operation; the
// helpers below make sure construction from parts is canonical too.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const mpz_class& num, const mpz_class& den);

// Accepts "3", "-7/12", "+2/4" (reduced on the way in).
Rational parse_rational(std::string_view text);

// "3", "-7/12".
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

} // namespace sigmatau
