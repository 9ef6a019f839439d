#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace mc2red {

using BigInt = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Number of binary digits of |x|; 0 for x == 0.
std::size_t bit_length(const BigInt& x);

/// Bit at 1-based position k of |x| (position 1 has value 1).
bool bit_at(const BigInt& x, std::size_t k);

/// 2^e.
BigInt pow2(std::size_t e);

/// True iff x > 0 and x is a power of two.
bool is_power_of_two(const BigInt& x);

std::string to_string(const BigInt& x);
std::string to_string(const Rational& q);

/// Parses a decimal signed integer. Throws std::invalid_argument on junk.
BigInt parse_big_int(const std::string& text);

}  // namespace mc2red
