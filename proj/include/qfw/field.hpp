#pragma once

// Real and imaginary quadratic fields Q(sqrt(d)) for squarefree d, with the
// standard integral basis (1, w): w = sqrt(d) when d = 2,3 mod 4 and
// w = (1+sqrt(d))/2 when d = 1 mod 4.

#include <string>

#include "qfw/numeric.hpp"

namespace qfw {

struct QuadraticField {
    Int d = 0;      // squarefree generator of the field
    Int D = 0;      // fundamental discriminant
    bool half = false;  // true iff w = (1+sqrt(d))/2

    bool imaginary() const { return d < 0; }

    // Minimal polynomial of w is x^2 - t*x + n.
    Int omega_trace() const { return half ? 1 : 0; }
    Int omega_norm() const { return half ? Int((1 - d) / 4) : Int(-d); }

    bool operator==(const QuadraticField& o) const { return d == o.d; }
    bool operator!=(const QuadraticField& o) const { return d != o.d; }
};

inline QuadraticField make_field(const Int& d) {
    if (d == 0 || d == 1)
        throw degenerate_discriminant("make_field: d must not be 0 or 1, got " +
                                      d.get_str());
    if (!is_squarefree(d))
        throw not_squarefree("make_field: d = " + d.get_str() +
                             " is not squarefree");
    QuadraticField F;
    F.d = d;
    Int m4 = ((d % 4) + 4) % 4;
    F.half = (m4 == 1);
    F.D = F.half ? d : 4 * d;
    return F;
}

inline std::string field_name(const QuadraticField& F) {
    return "Q(sqrt(" + F.d.get_str() + "))";
}

}  // namespace qfw
