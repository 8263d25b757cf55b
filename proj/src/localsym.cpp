#include "commcount/localsym.hpp"

#include "commcount/errors.hpp"

namespace commcount {

namespace {

void require_nondyadic(const PrimeIdeal& P) {
    if (P.dyadic()) throw input_error("dyadic ideal rejected (residue characteristic 2)");
}

void require_nonzero(const QuadRat& x, const char* who) {
    if (x.is_zero()) throw input_error(std::string(who) + ": zero argument");
}

// Unit part of a p-unit rational: the value itself; callers pass unit parts.
int epsilon_mod2(const Rat& u) {
    // (u-1)/2 mod 2 for 2-adic units, computed from num*den mod 4
    // (den^2 = 1 mod 8 for odd den).
    long nd = mod_p(Int(u.get_num() * u.get_den()), 4);
    return nd == 1 ? 0 : 1;
}

int omega_mod2(const Rat& u) {
    // (u^2-1)/8 mod 2 for 2-adic units, from num*den mod 8.
    long nd = mod_p(Int(u.get_num() * u.get_den()), 8);
    return (nd == 1 || nd == 7) ? 0 : 1;
}

} // namespace

int legendre(const Int& u, long p) {
    if (p == 2 || !is_prime(p)) throw input_error("legendre: modulus must be an odd prime");
    long r = mod_p(u, p);
    if (r == 0) return 0;
    return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

int legendre(long u, long p) {
    return legendre(Int(u), p);
}

int residue_char(const ResidueElem& e, const PrimeIdeal& P) {
    require_nondyadic(P);
    if (e.is_zero()) return 0;
    if (P.kind == PrimeIdeal::Kind::inert) {
        // chi(e) = e^{(p^2-1)/2} = (e^{p+1})^{(p-1)/2}, and e^{p+1} is the
        // F_p-norm u^2 - 5 v^2.
        Int n = Int(e.u) * e.u - Int(5) * e.v * e.v;
        return legendre(n, P.p);
    }
    return legendre(e.u, P.p);
}

int unit_char_at(const QuadRat& x, const PrimeIdeal& P) {
    require_nondyadic(P);
    require_nonzero(x, "unit_char_at");
    long v = valuation(x, P);
    QuadRat unit = v == 0 ? x : x / uniformizer(P).pow(v);
    int chi = residue_char(residue(unit, P), P);
    if (chi == 0) throw internal_error("unit part reduced to zero");
    return chi;
}

int hilbert_Q(const Rat& a, const Rat& b, const QPlace& v) {
    if (a == 0 || b == 0) throw input_error("hilbert_Q: zero argument");
    if (v.infinite) return (a < 0 && b < 0) ? -1 : 1;
    long p = v.p;
    if (!is_prime(p)) throw input_error("hilbert_Q: place must be a prime or inf");
    long alpha = vp_rat(a, p), beta = vp_rat(b, p);
    auto unit_part = [p](const Rat& q, long e) {
        Int pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p),
                      static_cast<unsigned long>(e < 0 ? -e : e));
        return e >= 0 ? q / Rat(pw) : q * Rat(pw);
    };
    Rat a0 = unit_part(a, alpha), b0 = unit_part(b, beta);
    if (p == 2) {
        long e = epsilon_mod2(a0) * epsilon_mod2(b0) + alpha * omega_mod2(b0) + beta * omega_mod2(a0);
        return e % 2 == 0 ? 1 : -1;
    }
    int eps = ((p - 1) / 2) % 2; // -1 a non-residue iff p = 3 mod 4
    int sign = (alpha % 2 != 0 && beta % 2 != 0 && eps == 1) ? -1 : 1;
    long la = mod_p(a0, p), lb = mod_p(b0, p);
    if (alpha % 2 != 0) sign *= legendre(lb, p);
    if (beta % 2 != 0) sign *= legendre(la, p);
    return sign;
}

int hilbert_at(const QuadRat& x, const QuadRat& y, const PrimeIdeal& P) {
    require_nondyadic(P);
    require_nonzero(x, "hilbert_at");
    require_nonzero(y, "hilbert_at");
    long alpha = valuation(x, P);
    long beta = valuation(y, P);
    QuadRat pi = uniformizer(P);
    int chi_x0 = unit_char_at(x, P);
    int chi_y0 = unit_char_at(y, P);
    int chi_m1 = residue_char(residue(QuadRat(-1), P), P);
    int result = 1;
    if ((alpha % 2 != 0) && (beta % 2 != 0)) result *= chi_m1;
    if (beta % 2 != 0) result *= chi_x0;
    if (alpha % 2 != 0) result *= chi_y0;
    (void)pi;
    return result;
}

SquareClass square_class_local(const QuadRat& x, const PrimeIdeal& P) {
    require_nondyadic(P);
    require_nonzero(x, "square_class_local");
    long v = valuation(x, P);
    int parity = static_cast<int>(((v % 2) + 2) % 2);
    return SquareClass{parity, unit_char_at(x, P)};
}

QuadRat uniformizer(const PrimeIdeal& P) {
    return P.kind == PrimeIdeal::Kind::ramified ? QuadRat::sqrt5() : QuadRat(P.p);
}

QuadRat nonresidue_unit(const PrimeIdeal& P) {
    require_nondyadic(P);
    if (P.kind == PrimeIdeal::Kind::inert) {
        // Rational units are all squares in F_{p^2}; search t with t + sqrt5
        // of non-square norm t^2 - 5 (never 0 mod p for inert p).
        for (long t = 0; t < P.p; ++t) {
            QuadRat u(Rat(t), Rat(1));
            if (residue_char(residue(u, P), P) == -1) return u;
        }
        throw internal_error("no non-residue unit found at inert ideal");
    }
    for (long t = 2; t < P.p; ++t)
        if (legendre(t, P.p) == -1) return QuadRat(t);
    throw internal_error("no non-residue mod p");
}

} // namespace commcount
