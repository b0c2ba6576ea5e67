#pragma once

// Fractional ideals of the ring of integers, stored as a canonical pair
// (B, den): B is the 2x2 upper-triangular Hermite basis of den*I over the
// integral basis (1, w), den > 0, and gcd(content(B), den) = 1.  All
// operations are exact; every constructor validates that the lattice is
// closed under multiplication by w, so the invariant "this is an ideal" holds
// throughout.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qfw/element.hpp"
#include "qfw/matrix.hpp"
#include "qfw/principal.hpp"

namespace qfw {

struct FractionalIdeal {
    QuadraticField F;
    IMat B;       // [[a, b], [0, c]] with a, c > 0, 0 <= b < c
    Int den = 1;  // the ideal is (1/den) * rowspan(B)

    bool operator==(const FractionalIdeal& o) const {
        return F == o.F && den == o.den && B == o.B;
    }
    bool operator!=(const FractionalIdeal& o) const { return !(*this == o); }

    bool is_integral() const { return den == 1; }
};

namespace detail {

// Does w * (p + q*w)/den stay inside the lattice?  Row coordinates of the
// product are (-q*n, p + q*t).
inline bool omega_multiple_inside(const QuadraticField& F, const IMat& B,
                                  const Int& den, const Int& p, const Int& q) {
    Int t = F.omega_trace(), n = F.omega_norm();
    std::vector<Int> v = {-q * n, p + q * t};
    return lat_contains(Lattice{B, den}, v, den);
}

}  // namespace detail

// Canonicalize a stack of row vectors (over (1, w), scaled by 1/den) into an
// ideal.  Throws zero_ideal when the rows do not span a rank-2 lattice and
// not_module when the lattice is not stable under multiplication by w.
inline FractionalIdeal make_ideal(const QuadraticField& F, IMat rows, Int den) {
    if (rows.cols != 2) throw internal_error("make_ideal: rows must have 2 columns");
    Lattice L = lat_canon(std::move(rows), std::move(den));
    if (L.B.rows != 2)
        throw zero_ideal("ideal basis spans a lattice of rank " +
                         std::to_string(L.B.rows) + ", need rank 2");
    for (size_t i = 0; i < 2; ++i) {
        if (!detail::omega_multiple_inside(F, L.B, L.den, L.B.at(i, 0), L.B.at(i, 1)))
            throw not_module("lattice is not closed under multiplication by w");
    }
    return FractionalIdeal{F, std::move(L.B), std::move(L.den)};
}

inline FractionalIdeal ring_of_integers(const QuadraticField& F) {
    return FractionalIdeal{F, IMat::identity(2), 1};
}

inline FractionalIdeal ideal_from_generators(const QuadraticField& F,
                                             const std::vector<FieldElement>& gens) {
    Int L = 1;
    for (const auto& g : gens) {
        check_same_field(F, g.F, "ideal_from_generators");
        L = int_lcm(L, int_lcm(g.a.get_den(), g.b.get_den()));
    }
    IMat rows(2 * gens.size(), 2);
    Int t = F.omega_trace(), n = F.omega_norm();
    for (size_t i = 0; i < gens.size(); ++i) {
        // Scale to integers, then add both g and w*g so the span is a module.
        Int p = rat_to_int(gens[i].a * L), q = rat_to_int(gens[i].b * L);
        rows.at(2 * i, 0) = p;
        rows.at(2 * i, 1) = q;
        rows.at(2 * i + 1, 0) = -q * n;
        rows.at(2 * i + 1, 1) = p + q * t;
    }
    bool all_zero = true;
    for (const auto& x : rows.a)
        if (x != 0) all_zero = false;
    if (all_zero) throw zero_ideal("ideal generated by zero");
    return make_ideal(F, std::move(rows), L);
}

inline FractionalIdeal principal_ideal(const FieldElement& x) {
    return ideal_from_generators(x.F, {x});
}

inline FractionalIdeal ideal_mul(const FractionalIdeal& I, const FractionalIdeal& J) {
    check_same_field(I.F, J.F, "ideal_mul");
    // Pairwise products of basis elements span the product module.
    Int t = I.F.omega_trace(), n = I.F.omega_norm();
    IMat rows(4, 2);
    size_t k = 0;
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) {
            Int p1 = I.B.at(i, 0), q1 = I.B.at(i, 1);
            Int p2 = J.B.at(j, 0), q2 = J.B.at(j, 1);
            rows.at(k, 0) = p1 * p2 - n * q1 * q2;
            rows.at(k, 1) = p1 * q2 + q1 * p2 + t * q1 * q2;
            ++k;
        }
    return make_ideal(I.F, std::move(rows), I.den * J.den);
}

inline FractionalIdeal ideal_add(const FractionalIdeal& I, const FractionalIdeal& J) {
    check_same_field(I.F, J.F, "ideal_add");
    Lattice S = lat_sum(Lattice{I.B, I.den}, Lattice{J.B, J.den});
    return make_ideal(I.F, std::move(S.B), std::move(S.den));
}

inline FractionalIdeal ideal_intersect(const FractionalIdeal& I,
                                       const FractionalIdeal& J) {
    check_same_field(I.F, J.F, "ideal_intersect");
    Lattice S = lat_intersect(Lattice{I.B, I.den}, Lattice{J.B, J.den});
    return make_ideal(I.F, std::move(S.B), std::move(S.den));
}

// The module quotient (O : I) = {x : x*I <= O}, which for the maximal order
// is the inverse ideal.  Computed as the intersection over basis vectors v of
// v^{-1} * O, each of which is the row span of the inverse multiplication
// matrix of v.
inline FractionalIdeal ideal_dual(const FractionalIdeal& I) {
    Int t = I.F.omega_trace(), n = I.F.omega_norm();
    std::optional<Lattice> acc;
    for (size_t i = 0; i < 2; ++i) {
        Int p = I.B.at(i, 0), q = I.B.at(i, 1);
        IMat M(2, 2);  // multiplication by p + q*w on row coordinates
        M.at(0, 0) = p;
        M.at(0, 1) = q;
        M.at(1, 0) = -q * n;
        M.at(1, 1) = p + q * t;
        auto [Minv, dd] = inverse(M);
        for (auto& x : Minv.a) x *= I.den;  // v = (p + q*w)/den, so v^{-1} gains den
        Lattice Lv = lat_canon(std::move(Minv), dd);
        acc = acc ? lat_intersect(*acc, Lv) : Lv;
    }
    return make_ideal(I.F, std::move(acc->B), std::move(acc->den));
}

inline FractionalIdeal ideal_inverse(const FractionalIdeal& I) { return ideal_dual(I); }

inline Rat ideal_norm(const FractionalIdeal& I) {
    Rat r(I.B.at(0, 0) * I.B.at(1, 1), I.den * I.den);
    r.canonicalize();
    return r;
}

inline FractionalIdeal ideal_conj(const FractionalIdeal& I) {
    Int t = I.F.omega_trace();
    IMat rows(2, 2);
    for (size_t i = 0; i < 2; ++i) {
        Int p = I.B.at(i, 0), q = I.B.at(i, 1);
        rows.at(i, 0) = p + q * t;
        rows.at(i, 1) = -q;
    }
    return make_ideal(I.F, std::move(rows), I.den);
}

inline bool ideal_contains(const FractionalIdeal& I, const FieldElement& x) {
    check_same_field(I.F, x.F, "ideal_contains");
    Int q = int_lcm(x.a.get_den(), x.b.get_den());
    std::vector<Int> v = {rat_to_int(x.a * q), rat_to_int(x.b * q)};
    return lat_contains(Lattice{I.B, I.den}, v, q);
}

// I <= J as sets.
inline bool ideal_subset(const FractionalIdeal& I, const FractionalIdeal& J) {
    check_same_field(I.F, J.F, "ideal_subset");
    for (size_t i = 0; i < 2; ++i) {
        std::vector<Int> v = {I.B.at(i, 0), I.B.at(i, 1)};
        if (!lat_contains(Lattice{J.B, J.den}, v, I.den)) return false;
    }
    return true;
}

// Largest positive rational c with I <= c * O; the "rational part" of I.
inline Rat ideal_content(const FractionalIdeal& I) {
    Rat r(content(I.B), I.den);
    r.canonicalize();
    return r;
}

// Standard two-element presentation Z*a + Z*(b+w) of a primitive integral
// ideal (content 1), with a = N(I) and 0 <= b < a.
inline std::pair<Int, Int> standard_presentation(const QuadraticField& F,
                                                 const IMat& B) {
    Int p = B.at(0, 0), q = B.at(0, 1), r = B.at(1, 1);
    Int g, u, v;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), q.get_mpz_t(),
               r.get_mpz_t());
    if (g != 1)
        throw internal_error("standard_presentation: ideal is not primitive");
    Int a = p * r;
    Int b = ((u * p) % a + a) % a;
    // The presentation is only valid when a divides N(b+w); this certifies
    // that the lattice really was a module.
    Int t = F.omega_trace(), n = F.omega_norm();
    if ((b * b + b * t + n) % a != 0)
        throw internal_error("standard_presentation: norm divisibility failed");
    return {a, b};
}

// Generator when I is principal (normalized associate), nullopt otherwise.
inline std::optional<FieldElement> ideal_generator(const FractionalIdeal& I) {
    Int c = content(I.B);
    IMat P = I.B;
    for (auto& x : P.a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    auto [a, b] = standard_presentation(I.F, P);
    auto g = principal_generator_primitive(I.F, a, b);
    if (!g) return std::nullopt;
    Rat scale(c, I.den);
    scale.canonicalize();
    return normalize_associate(scale * *g);
}

inline bool ideal_is_principal(const FractionalIdeal& I) {
    return ideal_generator(I).has_value();
}

inline FractionalIdeal ideal_pow(const FractionalIdeal& I, const Int& e) {
    FractionalIdeal base = e < 0 ? ideal_inverse(I) : I;
    Int k = abs(e);
    FractionalIdeal acc = ring_of_integers(I.F);
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = ideal_mul(acc, base);
        base = ideal_mul(base, base);
        k >>= 1;
    }
    return acc;
}

// Same class in the ideal class group: I * J^{-1} principal.
inline bool ideal_equivalent(const FractionalIdeal& I, const FractionalIdeal& J) {
    return ideal_is_principal(ideal_mul(I, ideal_inverse(J)));
}

// Order of the class of I in the class group.  The cap only guards against
// runaway loops; class numbers here are tiny.
inline Int ideal_class_order(const FractionalIdeal& I, long cap = 100000) {
    FractionalIdeal acc = I;
    for (long k = 1; k <= cap; ++k) {
        if (ideal_is_principal(acc)) return k;
        acc = ideal_mul(acc, I);
    }
    throw internal_error("ideal_class_order: exceeded iteration cap");
}

// All integral ideals of norm exactly m >= 1, ordered by Hermite basis
// (lexicographic in (a, b, c)).  Enumerates divisor splits a*c = m and keeps
// the w-stable lattices.
inline std::vector<FractionalIdeal> ideals_of_norm(const QuadraticField& F,
                                                   const Int& m) {
    if (m < 1) throw input_error("ideals_of_norm: norm must be >= 1");
    std::vector<FractionalIdeal> out;
    std::vector<Int> divs;
    for (Int p = 1; p * p <= m; ++p) {
        if (m % p != 0) continue;
        divs.push_back(p);
        if (p * p != m) divs.push_back(m / p);
    }
    std::sort(divs.begin(), divs.end());
    for (const Int& p : divs) {
        Int r = m / p;
        for (Int q = 0; q < r; ++q) {
            IMat B(2, 2);
            B.at(0, 0) = p;
            B.at(0, 1) = q;
            B.at(1, 1) = r;
            if (!detail::omega_multiple_inside(F, B, 1, p, q)) continue;
            if (!detail::omega_multiple_inside(F, B, 1, Int(0), r)) continue;
            out.push_back(FractionalIdeal{F, std::move(B), 1});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Text form: "[a b; 0 c] @ d=-5", with "/den" after the bracket when den > 1.
// The parser accepts any integer 2x2 matrix (rows are lattice generators) and
// canonicalizes it.
// ---------------------------------------------------------------------------

inline std::string to_string(const FractionalIdeal& I) {
    std::string s = "[" + I.B.at(0, 0).get_str() + " " + I.B.at(0, 1).get_str() +
                    "; 0 " + I.B.at(1, 1).get_str() + "]";
    if (I.den != 1) s += "/" + I.den.get_str();
    s += " @ d=" + I.F.d.get_str();
    return s;
}

namespace detail {

struct IdealParser {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    Int integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        size_t digits = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        if (pos == digits)
            throw parse_error("ideal: expected integer at '" + s.substr(start) +
                              "'");
        return Int(s.substr(start, pos - start));
    }
};

}  // namespace detail

// Parse the bracket form.  When `expect` is given, a trailing "@ d=..." must
// agree with it; otherwise the trailing field marker is required.
inline FractionalIdeal parse_ideal(const std::string& text,
                                   const std::optional<QuadraticField>& expect = {}) {
    detail::IdealParser p{text};
    if (!p.eat('['))
        throw parse_error("ideal: expected '[' in '" + text + "'");
    IMat rows(2, 2);
    rows.at(0, 0) = p.integer();
    rows.at(0, 1) = p.integer();
    if (!p.eat(';'))
        throw parse_error("ideal: expected ';' in '" + text + "'");
    rows.at(1, 0) = p.integer();
    rows.at(1, 1) = p.integer();
    if (!p.eat(']'))
        throw parse_error("ideal: expected ']' in '" + text + "'");
    Int den = 1;
    if (p.eat('/')) {
        den = p.integer();
        if (den <= 0) throw parse_error("ideal: denominator must be positive");
    }
    std::optional<QuadraticField> F = expect;
    if (p.eat('@')) {
        p.skip_ws();
        if (p.s.compare(p.pos, 2, "d=") != 0)
            throw parse_error("ideal: expected 'd=' after '@' in '" + text + "'");
        p.pos += 2;
        QuadraticField given = make_field(p.integer());
        if (F && *F != given)
            throw field_mismatch("ideal: field marker d=" + given.d.get_str() +
                                 " does not match d=" + F->d.get_str());
        F = given;
    }
    p.skip_ws();
    if (p.pos != text.size())
        throw parse_error("ideal: trailing input in '" + text + "'");
    if (!F)
        throw parse_error("ideal: no field given (append '@ d=...')");
    return make_ideal(*F, std::move(rows), den);
}

}  // namespace qfw
