#include "commcount/modmath.hpp"

#include "commcount/errors.hpp"

namespace commcount {

namespace {

long mulmod(long a, long b, long mod) {
    return static_cast<long>(static_cast<__int128>(a) * b % mod);
}

} // namespace

long powmod(long base, long exp, long mod) {
    if (mod <= 0) throw internal_error("powmod: nonpositive modulus");
    long result = 1 % mod;
    long b = base % mod;
    if (b < 0) b += mod;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, b, mod);
        b = mulmod(b, b, mod);
        exp >>= 1;
    }
    return result;
}

long invmod(long a, long mod) {
    long r0 = mod, r1 = a % mod;
    if (r1 < 0) r1 += mod;
    long t0 = 0, t1 = 1;
    while (r1 != 0) {
        long q = r0 / r1;
        long r2 = r0 - q * r1;
        long t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) throw internal_error("invmod: argument not invertible");
    return t0 < 0 ? t0 + mod : t0;
}

bool is_prime(long n) {
    if (n < 2) return false;
    Int z(n);
    return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

long sqrt_mod(long a, long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    if (powmod(a, (p - 1) / 2, p) != 1)
        throw internal_error("sqrt_mod: argument is a non-residue");
    if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);

    // Tonelli-Shanks: p - 1 = q * 2^s with q odd.
    long q = p - 1, s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    long z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    long m = s;
    long c = powmod(z, q, p);
    long t = powmod(a, q, p);
    long r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        long i = 0, t2 = t;
        while (t2 != 1) { t2 = mulmod(t2, t2, p); ++i; }
        long b = powmod(c, 1L << (m - i - 1), p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return r;
}

std::vector<long> primes_up_to(long n) {
    std::vector<long> out;
    if (n < 2) return out;
    std::vector<bool> composite(static_cast<size_t>(n) + 1, false);
    for (long i = 2; i <= n; ++i) {
        if (composite[static_cast<size_t>(i)]) continue;
        out.push_back(i);
        for (long j = i * i; j <= n; j += i) composite[static_cast<size_t>(j)] = true;
    }
    return out;
}

long vp_int(const Int& z, long p) {
    if (z == 0) throw input_error("p-adic valuation of zero");
    Int rem;
    Int pz(p);
    return static_cast<long>(mpz_remove(rem.get_mpz_t(), z.get_mpz_t(), pz.get_mpz_t()));
}

long vp_rat(const Rat& q, long p) {
    if (q == 0) throw input_error("p-adic valuation of zero");
    return vp_int(q.get_num(), p) - vp_int(q.get_den(), p);
}

long mod_p(const Int& z, long p) {
    Int r = z % p;
    long v = r.get_si();
    return v < 0 ? v + p : v;
}

long mod_p(const Rat& q, long p) {
    long den = mod_p(q.get_den(), p);
    if (den == 0) throw input_error("mod_p: denominator divisible by p");
    return mulmod(mod_p(q.get_num(), p), invmod(den, p), p);
}

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw input_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

bool rat_sqrt(const Rat& q, Rat& root) {
    if (q < 0) return false;
    const Int& num = q.get_num();
    const Int& den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    root = make_rat(rn, rd);
    return true;
}

Int floor_rat(const Rat& q) {
    Int out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return out;
}

bool squarefree(long n) {
    if (n == 0) return false;
    if (n < 0) n = -n;
    for (long d = 2; d * d <= n; ++d) {
        if (n % (d * d) == 0) return false;
        while (n % d == 0) n /= d;
    }
    return true;
}

} // namespace commcount
