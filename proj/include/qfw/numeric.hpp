#pragma once

// Exact integer/rational helpers on top of GMP.  Everything here is
// deterministic and allocation-light; no floating point anywhere.

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "qfw/errors.hpp"

namespace qfw {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// Floor of the square root of n >= 0.
inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
    if (n < 0) return false;
    Int r = isqrt(n);
    if (r * r == n) {
        if (root) *root = r;
        return true;
    }
    return false;
}

// Floor and ceiling of an exact rational.
inline Int rat_floor(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Int rat_ceil(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

// Conversion that insists the rational is an integer.
inline Int rat_to_int(const Rat& q) {
    if (q.get_den() != 1)
        throw internal_error("rat_to_int: " + q.get_str() + " is not an integer");
    return q.get_num();
}

inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    // 40 Miller-Rabin rounds after BPSW-style preprocessing; exact for any
    // magnitude this workbench touches.
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

// Kronecker symbol (a/n), fully general.
inline int kronecker(const Int& a, const Int& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

inline int legendre(const Int& a, const Int& p) {
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

inline Int pow_mod(const Int& b, const Int& e, const Int& m) {
    Int r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Square root of a modulo an odd prime p (Tonelli-Shanks); requires a to be
// a quadratic residue or zero.
inline Int sqrt_mod_prime(Int a, const Int& p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    if (legendre(a, p) != 1)
        throw internal_error("sqrt_mod_prime: " + a.get_str() +
                             " is not a residue mod " + p.get_str());
    if (p % 4 == 3) return pow_mod(a, (p + 1) / 4, p);
    Int q = p - 1;
    unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
    q >>= s;
    Int z = 2;
    while (legendre(z, p) != -1) ++z;
    unsigned long m = s;
    Int c = pow_mod(z, q, p);
    Int t = pow_mod(a, q, p);
    Int r = pow_mod(a, (q + 1) / 2, p);
    while (t != 1) {
        Int tt = t;
        unsigned long i = 0;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        Int e = 1;
        e <<= (m - i - 1);
        Int b = pow_mod(c, e, p);
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return r;
}

// Trial-division factorization of |n|, smallest prime first.
inline std::vector<std::pair<Int, int>> factor(Int n) {
    if (n < 0) n = -n;
    if (n == 0) throw input_error("factor: argument is zero");
    std::vector<std::pair<Int, int>> out;
    Int p = 2;
    while (p * p <= n) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
        p += (p == 2) ? 1 : 2;
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline bool is_squarefree(const Int& n) {
    if (n == 0) return false;
    for (const auto& [p, e] : factor(n))
        if (e > 1) return false;
    return true;
}

inline std::vector<Int> prime_divisors(const Int& n) {
    std::vector<Int> out;
    for (const auto& [p, e] : factor(n)) out.push_back(p);
    return out;
}

inline std::vector<long> primes_up_to(long n) {
    std::vector<long> out;
    if (n < 2) return out;
    std::vector<bool> sieve(static_cast<size_t>(n) + 1, true);
    for (long i = 2; i <= n; ++i) {
        if (!sieve[static_cast<size_t>(i)]) continue;
        out.push_back(i);
        for (long j = 2 * i; j <= n; j += i) sieve[static_cast<size_t>(j)] = false;
    }
    return out;
}

// Certified rational enclosure of pi, width 1e-15.
inline Rat pi_lower() { return Rat(Int("3141592653589793"), Int("1000000000000000")); }
inline Rat pi_upper() { return Rat(Int("3141592653589794"), Int("1000000000000000")); }

// Rational upper bound on sqrt(n) within 10^-digits of the true value.
inline Rat sqrt_upper(const Int& n, int digits = 8) {
    if (n < 0) throw input_error("sqrt_upper: negative argument");
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Rat r(isqrt(n * scale * scale) + 1, scale);
    r.canonicalize();
    return r;
}

// Rational lower bound on sqrt(n).
inline Rat sqrt_lower(const Int& n, int digits = 8) {
    if (n < 0) throw input_error("sqrt_lower: negative argument");
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Rat r(isqrt(n * scale * scale), scale);
    r.canonicalize();
    return r;
}

}  // namespace qfw
