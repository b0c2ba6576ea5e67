#pragma once

// Elements of a quadratic field in coordinates over the integral basis
// (1, w), with exact rational components.  Includes a small expression parser
// used by the CLI ("1+w", "(1+w)/2", "3/2 - 5*w", ...).

#include <cstddef>
#include <string>

#include "qfw/field.hpp"

namespace qfw {

struct FieldElement {
    QuadraticField F;
    Rat a, b;  // value = a + b*w

    FieldElement() = default;
    FieldElement(const QuadraticField& f, Rat x, Rat y)
        : F(f), a(std::move(x)), b(std::move(y)) {
        a.canonicalize();
        b.canonicalize();
    }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_integral() const { return a.get_den() == 1 && b.get_den() == 1; }

    Rat norm() const {
        // N(a + bw) = a^2 + a*b*Tr(w) + b^2*N(w)
        return a * a + a * b * F.omega_trace() + b * b * F.omega_norm();
    }
    Rat trace() const { return 2 * a + b * F.omega_trace(); }

    FieldElement conj() const {
        // sigma(w) = Tr(w) - w
        return FieldElement(F, a + b * F.omega_trace(), -b);
    }

    bool is_unit() const {
        if (!is_integral()) return false;
        Rat n = norm();
        return n == 1 || n == -1;
    }

    bool operator==(const FieldElement& o) const {
        return F.d == o.F.d && a == o.a && b == o.b;
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
};

inline void check_same_field(const QuadraticField& x, const QuadraticField& y,
                             const char* op) {
    if (x != y)
        throw field_mismatch(std::string(op) + ": elements of Q(sqrt(" +
                             x.d.get_str() + ")) and Q(sqrt(" + y.d.get_str() +
                             ")) mixed");
}

inline FieldElement operator+(const FieldElement& x, const FieldElement& y) {
    check_same_field(x.F, y.F, "operator+");
    return FieldElement(x.F, x.a + y.a, x.b + y.b);
}

inline FieldElement operator-(const FieldElement& x, const FieldElement& y) {
    check_same_field(x.F, y.F, "operator-");
    return FieldElement(x.F, x.a - y.a, x.b - y.b);
}

inline FieldElement operator-(const FieldElement& x) {
    return FieldElement(x.F, -x.a, -x.b);
}

inline FieldElement operator*(const FieldElement& x, const FieldElement& y) {
    check_same_field(x.F, y.F, "operator*");
    // (a1 + b1 w)(a2 + b2 w) with w^2 = t*w - n
    Rat t(x.F.omega_trace()), n(x.F.omega_norm());
    Rat cross = x.b * y.b;
    return FieldElement(x.F, x.a * y.a - n * cross,
                        x.a * y.b + x.b * y.a + t * cross);
}

inline FieldElement operator*(const Rat& c, const FieldElement& x) {
    return FieldElement(x.F, c * x.a, c * x.b);
}

inline FieldElement operator/(const FieldElement& x, const FieldElement& y) {
    check_same_field(x.F, y.F, "operator/");
    if (y.is_zero()) throw division_by_zero("element division by zero");
    Rat n = y.norm();
    FieldElement num = x * y.conj();
    return FieldElement(x.F, num.a / n, num.b / n);
}

inline FieldElement element_pow(FieldElement base, Int e) {
    if (e < 0) throw input_error("element_pow: negative exponent");
    FieldElement acc(base.F, 1, 0);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

// Divisibility in the ring of integers: y | x exactly.
inline bool divides(const FieldElement& y, const FieldElement& x) {
    if (y.is_zero()) return x.is_zero();
    return (x / y).is_integral();
}

inline bool is_associate(const FieldElement& x, const FieldElement& y) {
    if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
    FieldElement q = x / y;
    return q.is_unit();
}

// Sign of r + s*sqrt(d) for d > 0, exactly.
inline int sign_plus_sqrt(const Rat& r, const Rat& s, const Int& d) {
    int sr = sgn(r), ss = sgn(s);
    if (sr == 0 && ss == 0) return 0;
    if (sr >= 0 && ss >= 0) return 1;
    if (sr <= 0 && ss <= 0) return -1;
    // Opposite signs: compare r^2 against s^2 d.
    Rat lhs = r * r, rhs = s * s * d;
    int c = cmp(lhs, rhs);
    if (sr > 0) return c > 0 ? 1 : (c < 0 ? -1 : 0);
    return c < 0 ? 1 : (c > 0 ? -1 : 0);
}

// Exact sign of a real-quadratic element under the embedding sqrt(d) > 0.
inline int element_sign(const FieldElement& x) {
    if (x.F.imaginary())
        throw imaginary_field("element_sign: field must be real");
    // a + b*w = (a + b/2) + (b/2) sqrt(d) in the half case, a + b sqrt(d) else.
    if (x.F.half) return sign_plus_sqrt(x.a + x.b / 2, x.b / 2, x.F.d);
    return sign_plus_sqrt(x.a, x.b, x.F.d);
}

// ---------------------------------------------------------------------------
// Text form: "a + b*w".  The parser accepts +, -, *, /, parentheses, integer
// and p/q literals, and the symbol w.
// ---------------------------------------------------------------------------

inline std::string rat_str(const Rat& q) {
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

inline std::string to_string(const FieldElement& x) {
    if (x.b == 0) return rat_str(x.a);
    std::string wterm;
    Rat ab = abs(x.b);
    if (ab == 1)
        wterm = "w";
    else
        wterm = rat_str(ab) + "*w";
    if (x.a == 0) return (sgn(x.b) < 0 ? "-" : "") + wterm;
    return rat_str(x.a) + (sgn(x.b) < 0 ? " - " : " + ") + wterm;
}

namespace detail {

struct ElementParser {
    const QuadraticField& F;
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    bool eat(char c) {
        if (!peek(c)) return false;
        ++pos;
        return true;
    }

    FieldElement parse_expr() {
        FieldElement acc = parse_term();
        while (true) {
            if (eat('+'))
                acc = acc + parse_term();
            else if (eat('-'))
                acc = acc - parse_term();
            else
                break;
        }
        return acc;
    }

    FieldElement parse_term() {
        FieldElement acc = parse_factor();
        while (true) {
            if (eat('*'))
                acc = acc * parse_factor();
            else if (eat('/'))
                acc = acc / parse_factor();
            else {
                // Juxtaposition like "2w" means multiplication.
                skip_ws();
                if (pos < s.size() && (s[pos] == 'w' || s[pos] == 'W' || s[pos] == '('))
                    acc = acc * parse_factor();
                else
                    break;
            }
        }
        return acc;
    }

    FieldElement parse_factor() {
        skip_ws();
        if (eat('-')) return -parse_factor();
        if (eat('+')) return parse_factor();
        if (eat('(')) {
            FieldElement inner = parse_expr();
            if (!eat(')')) throw parse_error("element: missing ')' in '" + s + "'");
            return inner;
        }
        if (pos < s.size() && (s[pos] == 'w' || s[pos] == 'W')) {
            ++pos;
            return FieldElement(F, 0, 1);
        }
        if (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
            size_t start = pos;
            while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
            Int v(s.substr(start, pos - start));
            return FieldElement(F, Rat(v), 0);
        }
        throw parse_error("element: unexpected input at '" +
                          s.substr(pos) + "' in '" + s + "'");
    }
};

}  // namespace detail

inline FieldElement parse_element(const QuadraticField& F, const std::string& text) {
    detail::ElementParser p{F, text};
    FieldElement e = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size())
        throw parse_error("element: trailing input in '" + text + "'");
    return e;
}

}  // namespace qfw
