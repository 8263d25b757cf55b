#pragma once

#include <gmpxx.h>

#include <vector>

namespace commcount {

using Int = mpz_class;
using Rat = mpq_class;

long powmod(long base, long exp, long mod);
long invmod(long a, long mod);
bool is_prime(long n);

// Square root mod an odd prime (Tonelli-Shanks). Requires a to be a quadratic
// residue; 0 maps to 0.
long sqrt_mod(long a, long p);

std::vector<long> primes_up_to(long n);

// p-adic valuation of a nonzero integer / rational.
long vp_int(const Int& z, long p);
long vp_rat(const Rat& q, long p);

// Reduction mod p of an integer, or of a rational with p-coprime denominator.
long mod_p(const Int& z, long p);
long mod_p(const Rat& q, long p);

// Reduced fraction with positive denominator.
Rat make_rat(const Int& num, const Int& den);

// Exact rational square root; root is the nonnegative root when one exists.
bool rat_sqrt(const Rat& q, Rat& root);

Int floor_rat(const Rat& q);
bool squarefree(long n);

} // namespace commcount
