#pragma once

// Principality testing and unit computation.  A primitive integral ideal
// Z*a + Z*(b+w) is attached to the binary quadratic form
// (a, 2b+Tr(w), N(b+w)/a) of discriminant D; the ideal is principal exactly
// when the form represents 1 (imaginary fields) or +-1 (real fields).
// Imaginary fields reduce to a bounded search; real fields walk the reduction
// orbit of indefinite forms, accumulating the element that transports the
// start ideal to the ring of integers.

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "qfw/element.hpp"

namespace qfw {

namespace detail {

struct Form {
    Int A, B, C;
};

// One reduction step of an indefinite form of discriminant D > 0 (non-square);
// r = floor(sqrt(D)).  The new middle coefficient is the unique B' = -B
// (mod 2|C|) in (-|C|, |C|] when |C| > sqrt(D) and the largest one below
// sqrt(D) otherwise.
inline Form rho_step(const Form& f, const Int& D, const Int& r) {
    Int c = abs(f.C);
    Int twoc = 2 * c;
    Int Bp;
    if (c > r) {
        Bp = ((-f.B) % twoc + twoc) % twoc;
        if (Bp > c) Bp -= twoc;
    } else {
        Bp = r - ((r + f.B) % twoc + twoc) % twoc;
    }
    Int Cp = (Bp * Bp - D) / (4 * f.C);  // exact: B'^2 = D mod 4C
    return Form{f.C, Bp, Cp};
}

// The element (B + sqrt(D)) / (2*Anew) transporting one step of the walk,
// written over the basis (1, w) via sqrt(D) = 2w - Tr(w).
inline FieldElement step_element(const QuadraticField& F, const Int& B,
                                 const Int& Anew) {
    Int half_B = (B - F.omega_trace()) / 2;  // B and Tr(w) share parity
    return FieldElement(F, Rat(half_B, Anew), Rat(Int(1), Anew));
}

}  // namespace detail

// Generator of the primitive integral ideal Z*a + Z*(b+w) in a real field,
// or nullopt when the ideal is not principal.  Requires a > 0 and
// a | N(b+w).  Walks the form orbit until a unit leading coefficient appears
// (principal: the accumulated product of step elements is a generator) or a
// state repeats (the whole cycle lacks one: not principal).
inline std::optional<FieldElement> real_principal_generator(
    const QuadraticField& F, const Int& a, const Int& b) {
    if (F.imaginary())
        throw internal_error("real_principal_generator: imaginary field");
    Int D = F.D, r = isqrt(D);
    Int t = F.omega_trace(), n = F.omega_norm();
    detail::Form f{a, 2 * b + t, (b * b + b * t + n) / a};
    FieldElement g(F, 1, 0);
    std::set<std::pair<Int, Int>> seen;
    while (true) {
        if (abs(f.A) == 1) return g;
        if (!seen.insert({f.A, f.B}).second) return std::nullopt;
        detail::Form nf = detail::rho_step(f, D, r);
        g = g * detail::step_element(F, f.B, nf.A);
        f = nf;
    }
}

// Same interface for an imaginary field: solve
// (2ax + By)^2 + |D| y^2 = 4a exactly over a bounded range of y.
inline std::optional<FieldElement> imag_principal_generator(
    const QuadraticField& F, const Int& a, const Int& b) {
    if (!F.imaginary())
        throw internal_error("imag_principal_generator: real field");
    Int t = F.omega_trace();
    Int B = 2 * b + t, absD = -F.D;
    Int ymax = isqrt(4 * a / absD);
    for (Int y = 0; y <= ymax; ++y) {
        Int rem = 4 * a - absD * y * y;
        Int s;
        if (!is_perfect_square(rem, &s)) continue;
        for (int sy : {1, -1}) {
            if (s == 0 && sy < 0) continue;
            for (int sgn_y : {1, -1}) {
                if (y == 0 && sgn_y < 0) continue;
                Int yy = sgn_y * y;
                Int num = sy * s - B * yy;
                if (num % (2 * a) != 0) continue;
                Int x = num / (2 * a);
                FieldElement g(F, Rat(x * a + yy * b), Rat(yy));
                return g;
            }
        }
    }
    return std::nullopt;
}

inline std::optional<FieldElement> principal_generator_primitive(
    const QuadraticField& F, const Int& a, const Int& b) {
    return F.imaginary() ? imag_principal_generator(F, a, b)
                         : real_principal_generator(F, a, b);
}

// Fundamental unit of a real quadratic field, normalized to be > 1 under the
// embedding sqrt(d) > 0.  Walks the orbit of the principal form once, to the
// first recurrence of unit leading coefficient.
inline FieldElement fundamental_unit(const QuadraticField& F) {
    if (F.imaginary())
        throw imaginary_field("fundamental_unit: field must be real");
    Int D = F.D, r = isqrt(D);
    Int Bt = ((r - D) % 2 == 0) ? r : r - 1;  // match parity of D
    detail::Form f{1, Bt, (Bt * Bt - D) / 4};
    FieldElement g(F, 1, 0);
    while (true) {
        detail::Form nf = detail::rho_step(f, D, r);
        g = g * detail::step_element(F, f.B, nf.A);
        f = nf;
        if (abs(f.A) == 1) break;
    }
    if (element_sign(g) < 0) g = -g;
    // The walk may produce the inverse automorphism; pin the one above 1.
    FieldElement one(F, 1, 0);
    if (element_sign(g - one) < 0) {
        g = one / g;
        if (element_sign(g) < 0) g = -g;
    }
    return g;
}

// The finitely many roots of unity in the ring of integers: {+-1} except for
// the Gaussian (4 units) and Eisenstein (6 units) cases.
inline std::vector<FieldElement> torsion_units(const QuadraticField& F) {
    std::vector<FieldElement> us = {FieldElement(F, 1, 0), FieldElement(F, -1, 0)};
    if (F.d == -1) {
        us.emplace_back(F, 0, 1);
        us.emplace_back(F, 0, -1);
    } else if (F.d == -3) {
        // w = (1+sqrt(-3))/2 is a primitive 6th root of unity; w^2 = w - 1.
        us.emplace_back(F, 0, 1);
        us.emplace_back(F, 0, -1);
        us.emplace_back(F, -1, 1);
        us.emplace_back(F, 1, -1);
    }
    return us;
}

// Canonical representative of the orbit of x under unit multiplication.
// Imaginary fields: the associate with lexicographically greatest
// coordinates.  Real fields: the positive associate y with
// sqrt(|N|) <= y < eps * sqrt(|N|), i.e. |N| <= y^2 < eps^2 |N|.
inline FieldElement normalize_associate(const FieldElement& x) {
    if (x.is_zero()) return x;
    if (x.F.imaginary()) {
        FieldElement best = x;
        for (const auto& u : torsion_units(x.F)) {
            FieldElement c = x * u;
            if (c.a > best.a || (c.a == best.a && c.b > best.b)) best = c;
        }
        return best;
    }
    FieldElement y = element_sign(x) > 0 ? x : -x;
    FieldElement eps = fundamental_unit(x.F);
    Rat absN = abs(x.norm());
    FieldElement lo(x.F, absN, 0);
    FieldElement hi = FieldElement(x.F, absN, 0) * (eps * eps);
    while (element_sign(y * y - lo) < 0) y = y * eps;
    while (element_sign(y * y - hi) >= 0) y = y / eps;
    return y;
}

}  // namespace qfw
