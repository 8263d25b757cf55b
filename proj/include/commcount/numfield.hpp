#pragma once

#include "commcount/quadrat.hpp"

#include <vector>

namespace commcount {

/// A prime ideal of Z[(1+sqrt5)/2], identified by its residue characteristic
/// and splitting behaviour. For split primes, sqrt5_residue is the image of
/// sqrt5 in F_p at this ideal; the "+" ideal of the pair is the one whose
/// residue lies below p/2.
struct PrimeIdeal {
    enum class Kind { split, inert, ramified };

    long p = 0;
    Kind kind = Kind::inert;
    long sqrt5_residue = 0; // split only, in (0, p)

    long residue_size() const { return kind == Kind::inert ? p * p : p; }
    long norm() const { return residue_size(); }
    bool dyadic() const { return p == 2; }
    bool plus() const { return kind == Kind::split && 2 * sqrt5_residue < p; }

    friend bool operator==(const PrimeIdeal&, const PrimeIdeal&) = default;
};

/// Element u + v*s of the residue field, s the image of sqrt5 (s^2 = 5).
/// v is always 0 except at inert primes, where the field is F_{p^2}.
struct ResidueElem {
    long u = 0;
    long v = 0;

    bool is_zero() const { return u == 0 && v == 0; }
    friend bool operator==(const ResidueElem&, const ResidueElem&) = default;
};

// Factorization of a rational prime in Z[(1+sqrt5)/2]: ramified at 5, split
// when 5 is a quadratic residue mod p (two ideals, "+" first), inert
// otherwise (2 included: 5 = 5 mod 8 is a 2-adic non-residue).
std::vector<PrimeIdeal> factor_rational_prime(long p);

// P-adic valuation of a nonzero element; at the ramified ideal the
// uniformizer is sqrt5, so valuation(5) = 2.
long valuation(const QuadRat& x, const PrimeIdeal& P);

// Image in the residue field. Requires valuation(x, P) >= 0; substitutes
// sqrt5 -> sqrt5_residue (split), -> s (inert), -> 0 (ramified).
ResidueElem residue(const QuadRat& x, const PrimeIdeal& P);

ResidueElem residue_mul(const ResidueElem& x, const ResidueElem& y, const PrimeIdeal& P);

// All non-dyadic prime ideals with norm <= norm_bound, ordered by increasing
// norm ("+" before "-" within a split pair).
std::vector<PrimeIdeal> ideals_up_to_norm(long norm_bound);

} // namespace commcount
