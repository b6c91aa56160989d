#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace hsp {

using Int = mpz_class;
using Rat = mpq_class;

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& q);
std::string to_string(const Int& z);

// Accepts "p", "-p", "p/q".  Throws std::invalid_argument on malformed text
// or a zero denominator.
Rat parse_rational(std::string_view text);

Rat make_rat(long num, long den = 1);

long to_long(const Int& z);  // throws std::overflow_error
bool is_integer(const Rat& q);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

// Least common multiple of all denominators.
Int common_denominator(const std::vector<Rat>& v);

// Positive multiple of v with coprime integer entries; zero stays zero.
std::vector<Int> primitive_integer(const std::vector<Rat>& v);

// Floor/ceil of q onto the grid 2^-bits.
Rat dyadic_floor(const Rat& q, unsigned bits);
Rat dyadic_ceil(const Rat& q, unsigned bits);

}  // namespace hsp
