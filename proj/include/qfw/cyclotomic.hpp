#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_n), dense integer polynomials
// reduced modulo the n-th cyclotomic polynomial, with a shared denominator.
// Provides quadratic Gauss sums and the explicit embedding of sqrt(d) (and
// of the quadratic integer generator w) into the cyclotomic field whose
// conductor is the field discriminant.  Every embedding is constructive and
// squares back to d by exact reduction, so no analytic sign conventions are
// involved: when the running square lands on -d the i = zeta_4 factor flips
// it, and that flip is available exactly when the conductor is even.

#include <string>
#include <vector>

#include "qfw/element.hpp"
#include "qfw/field.hpp"
#include "qfw/numeric.hpp"

namespace qfw {

// Dense integer polynomials, ascending degree, no trailing zeros.
using Poly = std::vector<Int>;

namespace detail {

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

// Division by a monic divisor is exact over the integers; returns the
// quotient and leaves the remainder in p.
inline Poly poly_divmod_monic(Poly& p, const Poly& div) {
    if (div.empty() || div.back() != 1)
        throw internal_error("poly_divmod_monic: divisor must be monic");
    if (p.size() < div.size()) return {};
    Poly q(p.size() - div.size() + 1, Int(0));
    for (size_t k = q.size(); k-- > 0;) {
        Int c = p[k + div.size() - 1];
        if (c == 0) continue;
        q[k] = c;
        for (size_t j = 0; j < div.size(); ++j) p[k + j] -= c * div[j];
    }
    poly_trim(p);
    return q;
}

}  // namespace detail

inline long euler_phi(long n) {
    long out = n;
    for (const Int& p : prime_divisors(Int(n))) {
        long pl = mpz_get_si(p.get_mpz_t());
        out -= out / pl;
    }
    return out;
}

inline Poly cyclotomic_polynomial(long n) {
    if (n < 1) throw input_error("cyclotomic_polynomial: index must be >= 1");
    // Work up the divisors of n: each x^m - 1 sheds the already-known factors
    // of its proper divisors, leaving the primitive part.
    std::vector<long> divs;
    for (long m = 1; m <= n; ++m)
        if (n % m == 0) divs.push_back(m);
    std::vector<Poly> table(divs.size());
    for (size_t i = 0; i < divs.size(); ++i) {
        long m = divs[i];
        Poly p(m + 1, Int(0));
        p[0] = -1;
        p[m] = 1;
        for (size_t k = 0; k < i; ++k) {
            if (m % divs[k] != 0) continue;
            Poly rem = std::move(p);
            p = detail::poly_divmod_monic(rem, table[k]);
            if (!rem.empty())
                throw internal_error("cyclotomic_polynomial: division left a remainder");
        }
        table[i] = std::move(p);
    }
    return table.back();
}

// An element of Q(zeta_n): c / den over the power basis {zeta^j, j < phi(n)}.
// Canonical: den > 0, gcd of den and all coordinates is 1, size exactly
// phi(n).
struct CycInt {
    long n;
    std::vector<Int> c;
    Int den = 1;

    bool operator==(const CycInt& o) const { return n == o.n && den == o.den && c == o.c; }
    bool operator!=(const CycInt& o) const { return !(*this == o); }
};

namespace detail {

inline CycInt cyc_canon(long n, std::vector<Int> c, Int den) {
    if (den == 0) throw internal_error("cyclotomic: zero denominator");
    if (den < 0) {
        den = -den;
        for (Int& x : c) x = -x;
    }
    Int g = den;
    for (const Int& x : c) g = int_gcd(g, x);
    if (g > 1) {
        mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
        for (Int& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
    return CycInt{n, std::move(c), den};
}

// Reduce an integer polynomial modulo Phi_n and shape it to phi(n) coords.
inline CycInt cyc_reduce(long n, Poly p, const Int& den) {
    Poly phi = cyclotomic_polynomial(n);
    poly_divmod_monic(p, phi);
    std::vector<Int> c(phi.size() - 1, Int(0));
    for (size_t j = 0; j < p.size(); ++j) c[j] = p[j];
    return cyc_canon(n, std::move(c), den);
}

}  // namespace detail

inline CycInt cyc_from_int(long n, const Int& v) {
    std::vector<Int> c(euler_phi(n), Int(0));
    if (!c.empty()) c[0] = v;
    return detail::cyc_canon(n, std::move(c), 1);
}

// zeta_n^k, k taken modulo n.
inline CycInt cyc_root(long n, long k) {
    k %= n;
    if (k < 0) k += n;
    Poly p(k + 1, Int(0));
    p[k] = 1;
    return detail::cyc_reduce(n, std::move(p), 1);
}

namespace detail {

inline void cyc_check_same(const CycInt& x, const CycInt& y) {
    if (x.n != y.n) throw field_mismatch("cyclotomic: mixed conductors");
}

}  // namespace detail

inline CycInt cyc_add(const CycInt& x, const CycInt& y) {
    detail::cyc_check_same(x, y);
    Int den = int_lcm(x.den, y.den);
    Int fx = den / x.den, fy = den / y.den;
    std::vector<Int> c(x.c.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = x.c[i] * fx + y.c[i] * fy;
    return detail::cyc_canon(x.n, std::move(c), den);
}

inline CycInt cyc_neg(const CycInt& x) {
    std::vector<Int> c(x.c.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = -x.c[i];
    return CycInt{x.n, std::move(c), x.den};
}

inline CycInt cyc_sub(const CycInt& x, const CycInt& y) { return cyc_add(x, cyc_neg(y)); }

inline CycInt cyc_mul(const CycInt& x, const CycInt& y) {
    detail::cyc_check_same(x, y);
    Poly a(x.c.begin(), x.c.end()), b(y.c.begin(), y.c.end());
    detail::poly_trim(a);
    detail::poly_trim(b);
    return detail::cyc_reduce(x.n, detail::poly_mul(a, b), x.den * y.den);
}

inline CycInt cyc_scale(const CycInt& x, const Rat& s) {
    std::vector<Int> c(x.c.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = x.c[i] * s.get_num();
    return detail::cyc_canon(x.n, std::move(c), x.den * s.get_den());
}

// Re-express an element of Q(zeta_n) in Q(zeta_m) for n | m.
inline CycInt cyc_lift(const CycInt& x, long m) {
    if (m % x.n != 0) throw input_error("cyc_lift: target conductor not a multiple");
    long f = m / x.n;
    Poly p((x.c.size() - 1) * f + 1, Int(0));
    for (size_t j = 0; j < x.c.size(); ++j) p[j * f] = x.c[j];
    return detail::cyc_reduce(m, std::move(p), x.den);
}

// Quadratic Gauss sum g(p) = sum of legendre(a, p) * zeta_p^a; its square is
// p for p = 1 mod 4 and -p for p = 3 mod 4.
inline CycInt gauss_sum(const Int& p) {
    if (!is_prime(p)) throw not_prime("gauss_sum: modulus must be prime");
    if (p == 2) throw not_odd_prime("gauss_sum: modulus must be odd");
    long pl = mpz_get_si(p.get_mpz_t());
    Poly g(pl, Int(0));
    for (long a = 1; a < pl; ++a) g[a] = legendre(Int(a), p);
    return detail::cyc_reduce(pl, std::move(g), 1);
}

// The image of sqrt(d) in Q(zeta_n) for the conductor n = |disc|: a product
// of Gauss sums, the zeta_8 + zeta_8^{-1} factor for the prime 2, and a
// zeta_4 when the accumulated square is -d.  The result is certified by
// squaring before it is returned.
inline CycInt embed_sqrt(const QuadraticField& F) {
    long n = mpz_get_si(Int(abs(F.D)).get_mpz_t());
    CycInt s = cyc_from_int(n, 1);
    Int rest = abs(F.d);
    if (rest % 2 == 0) {
        // zeta_8 + zeta_8^{-1} squares to 2; the conductor 4|d| is divisible
        // by 8 exactly when d is even.
        rest /= 2;
        s = cyc_mul(s, cyc_add(cyc_root(n, n / 8), cyc_root(n, n - n / 8)));
    }
    for (const Int& p : prime_divisors(rest))
        s = cyc_mul(s, cyc_lift(gauss_sum(p), n));
    CycInt sq = cyc_mul(s, s);
    if (sq == cyc_from_int(n, -F.d)) {
        s = cyc_mul(s, cyc_root(n, n / 4));
        sq = cyc_mul(s, s);
    }
    if (sq != cyc_from_int(n, F.d))
        throw internal_error("embed_sqrt: square certificate failed");
    return s;
}

// The image of the module generator w; integral, so the denominator clears.
inline CycInt embed_omega(const QuadraticField& F) {
    CycInt s = embed_sqrt(F);
    if (!F.half) return s;
    CycInt w = cyc_scale(cyc_add(cyc_from_int(s.n, 1), s), Rat(1, 2));
    if (w.den != 1) throw internal_error("embed_omega: generator is not integral");
    return w;
}

inline std::string to_string(const CycInt& x) {
    std::string out;
    for (size_t j = 0; j < x.c.size(); ++j) {
        if (x.c[j] == 0) continue;
        Rat q(x.c[j], x.den);
        q.canonicalize();
        bool neg = q < 0;
        Rat a = neg ? Rat(-q) : q;
        std::string term;
        if (j == 0) {
            term = rat_str(a);
        } else {
            term = (a == 1) ? "" : rat_str(a) + "*";
            term += "z";
            if (j > 1) term += "^" + std::to_string(j);
        }
        if (out.empty())
            out = (neg ? "-" : "") + term;
        else
            out += (neg ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

}  // namespace qfw
