#include "commcount/numfield.hpp"

#include "commcount/errors.hpp"

#include <algorithm>
#include <limits>

namespace commcount {

namespace {

constexpr long kInfVal = std::numeric_limits<long>::max() / 4;

long vp_or_inf(const Rat& q, long p) {
    return q == 0 ? kInfVal : vp_rat(q, p);
}

// x scaled so that both coordinates are p-integral and not both divisible
// by p; returns the power of p removed.
long strip_p(QuadRat& x, long p) {
    long m = std::min(vp_or_inf(x.a(), p), vp_or_inf(x.b(), p));
    if (m != 0) {
        Rat scale;
        Int pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p),
                      static_cast<unsigned long>(m < 0 ? -m : m));
        scale = m < 0 ? Rat(pw) : make_rat(1, pw);
        x = QuadRat(x.a() * scale, x.b() * scale);
    }
    return m;
}

long split_residue_mod_p(const QuadRat& unit_coords, const PrimeIdeal& P) {
    // coordinates must be p-integral
    long a = mod_p(unit_coords.a(), P.p);
    long b = mod_p(unit_coords.b(), P.p);
    return (a + static_cast<__int128>(b) * P.sqrt5_residue) % P.p;
}

} // namespace

std::vector<PrimeIdeal> factor_rational_prime(long p) {
    if (!is_prime(p)) throw input_error("not a prime: " + std::to_string(p));
    if (p == 5) return {PrimeIdeal{5, PrimeIdeal::Kind::ramified, 0}};
    if (p == 2) return {PrimeIdeal{2, PrimeIdeal::Kind::inert, 0}};
    if (powmod(5, (p - 1) / 2, p) == 1) {
        long c = sqrt_mod(5, p);
        if (2 * c > p) c = p - c;
        return {PrimeIdeal{p, PrimeIdeal::Kind::split, c},
                PrimeIdeal{p, PrimeIdeal::Kind::split, p - c}};
    }
    return {PrimeIdeal{p, PrimeIdeal::Kind::inert, 0}};
}

long valuation(const QuadRat& x, const PrimeIdeal& P) {
    if (x.is_zero()) throw input_error("valuation of zero");
    switch (P.kind) {
    case PrimeIdeal::Kind::ramified:
        // v(sqrt5) = 1, v(5) = 2; the two terms have distinct parities.
        return std::min(2 * vp_or_inf(x.a(), 5), 2 * vp_or_inf(x.b(), 5) + 1);
    case PrimeIdeal::Kind::inert:
        return std::min(vp_or_inf(x.a(), P.p), vp_or_inf(x.b(), P.p));
    case PrimeIdeal::Kind::split: {
        // After stripping p^m, the remaining unit part u can have positive
        // valuation at only one of the two conjugate ideals; which one is
        // read off from the residue of u at this ideal, and the amount from
        // v_p(norm(u)) = v_P(u) + v_Pbar(u).
        QuadRat u = x;
        long m = strip_p(u, P.p);
        long t = vp_rat(u.norm(), P.p);
        if (t == 0) return m;
        return m + (split_residue_mod_p(u, P) == 0 ? t : 0);
    }
    }
    throw internal_error("unreachable ideal kind");
}

ResidueElem residue(const QuadRat& x, const PrimeIdeal& P) {
    if (x.is_zero()) return ResidueElem{};
    long val = valuation(x, P);
    if (val < 0) throw input_error("residue of an element with a pole at the ideal");
    if (val > 0) return ResidueElem{};
    switch (P.kind) {
    case PrimeIdeal::Kind::ramified:
        return ResidueElem{mod_p(x.a(), 5), 0};
    case PrimeIdeal::Kind::inert:
        return ResidueElem{mod_p(x.a(), P.p), mod_p(x.b(), P.p)};
    case PrimeIdeal::Kind::split: {
        QuadRat u = x;
        long m = strip_p(u, P.p);
        if (m == 0) return ResidueElem{split_residue_mod_p(u, P), 0};
        // m < 0 and x is a P-unit: the conjugate ideal carries all of the
        // denominator, so rewrite x = (norm(u)/p^{-m}) / conj(u) where both
        // parts are P-units with p-integral data.
        if (m > 0) throw internal_error("unit with positive strip at split ideal");
        Rat w = u.norm();
        Int pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(P.p),
                      static_cast<unsigned long>(-m));
        w *= make_rat(1, pw);
        long wd = mod_p(w, P.p);
        long cd = split_residue_mod_p(u.conjugate(), P);
        if (cd == 0) throw internal_error("conjugate part not a unit in split residue");
        return ResidueElem{static_cast<long>(static_cast<__int128>(wd) * invmod(cd, P.p) % P.p), 0};
    }
    }
    throw internal_error("unreachable ideal kind");
}

ResidueElem residue_mul(const ResidueElem& x, const ResidueElem& y, const PrimeIdeal& P) {
    long p = P.p;
    auto red = [p](__int128 v) {
        long r = static_cast<long>(v % p);
        return r < 0 ? r + p : r;
    };
    __int128 u = static_cast<__int128>(x.u) * y.u + 5 * static_cast<__int128>(x.v) * y.v;
    __int128 v = static_cast<__int128>(x.u) * y.v + static_cast<__int128>(x.v) * y.u;
    return ResidueElem{red(u), red(v)};
}

std::vector<PrimeIdeal> ideals_up_to_norm(long norm_bound) {
    std::vector<PrimeIdeal> out;
    for (long p : primes_up_to(norm_bound)) {
        if (p == 2) continue; // dyadic
        if (p != 5 && p * p > norm_bound && powmod(5, (p - 1) / 2, p) != 1) continue;
        for (const PrimeIdeal& P : factor_rational_prime(p))
            if (P.norm() <= norm_bound) out.push_back(P);
    }
    std::sort(out.begin(), out.end(), [](const PrimeIdeal& x, const PrimeIdeal& y) {
        if (x.norm() != y.norm()) return x.norm() < y.norm();
        return x.sqrt5_residue < y.sqrt5_residue; // "+" ideal first
    });
    return out;
}

} // namespace commcount
