#ifndef PFHODGE_RATIONAL_HPP
#define PFHODGE_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace pfhodge {

// mpq_class keeps values in lowest terms with positive denominator as long
// as every construction from a raw num/den pair goes through make_rational.
using BigInt = mpz_class;
using BigRational = mpq_class;

BigRational make_rational(const BigInt& num, const BigInt& den);
BigRational make_rational(long num, long den = 1);

// "p/q" or "p"; throws Error on malformed input or zero denominator.
BigRational parse_rational(std::string_view text);
std::string to_string(const BigRational& q);
std::string to_string(const BigInt& z);

bool is_integer(const BigRational& q);
BigInt floor_of(const BigRational& q);
BigInt ceil_of(const BigRational& q);
// q - floor(q), in [0, 1)
BigRational frac_of(const BigRational& q);

// Throws Error when q is not an integer or does not fit.
std::int64_t to_int64(const BigRational& q);
std::int64_t to_int64(const BigInt& z);

BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);

}  // namespace pfhodge

#endif
