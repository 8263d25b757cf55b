#pragma once

#include "commcount/numfield.hpp"

namespace commcount {

/// Class of x in k_P^x / (k_P^x)^2 at a non-dyadic place: valuation parity
/// and the quadratic character of the unit part. (0, +1) is the class of
/// squares; there are exactly four classes.
struct SquareClass {
    int val_parity = 0; // 0 or 1
    int unit_char = 1;  // +1 or -1

    bool is_square() const { return val_parity == 0 && unit_char == 1; }
    friend bool operator==(const SquareClass&, const SquareClass&) = default;
};

/// A place of Q for the rational-level Hilbert symbol: a prime or infinity.
struct QPlace {
    long p = 0;
    bool infinite = false;

    static QPlace at_prime(long p) { return QPlace{p, false}; }
    static QPlace infinity() { return QPlace{0, true}; }
};

// Legendre symbol (u/p) for an odd prime p: 0 on multiples of p, else +-1
// via Euler's criterion u^{(p-1)/2}.
int legendre(const Int& u, long p);
int legendre(long u, long p);

// Quadratic character of the residue field of P (size q): 0 at zero, else
// e^{(q-1)/2}. For inert primes this is legendre of the F_p-norm u^2 - 5v^2.
int residue_char(const ResidueElem& e, const PrimeIdeal& P);

// Character of the unit part of x at P (x need not be a unit).
int unit_char_at(const QuadRat& x, const PrimeIdeal& P);

// Rational Hilbert symbol (a, b)_v over Q_v, all places including 2 and
// infinity, by the closed formulas. Used to cross-check the product formula.
int hilbert_Q(const Rat& a, const Rat& b, const QPlace& v);

// Tame Hilbert symbol over the completion of Q(sqrt5) at a non-dyadic prime
// ideal: with x = pi^alpha x0, y = pi^beta y0, the symbol is the residue
// character of (-1)^{alpha beta} x0^beta y0^alpha.
int hilbert_at(const QuadRat& x, const QuadRat& y, const PrimeIdeal& P);

SquareClass square_class_local(const QuadRat& x, const PrimeIdeal& P);

// Canonical uniformizer: sqrt5 at the ramified ideal, p otherwise.
QuadRat uniformizer(const PrimeIdeal& P);

// A unit at P whose residue character is -1 (a square-class representative
// of the non-square units).
QuadRat nonresidue_unit(const PrimeIdeal& P);

} // namespace commcount
