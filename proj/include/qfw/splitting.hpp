#pragma once

// How rational primes decompose in the ring of integers: split into two
// conjugate primes, stay inert, or ramify, decided by the Kronecker symbol of
// the discriminant.  Produces the actual prime ideals, ready to be multiplied
// back together as a check.

#include <algorithm>
#include <tuple>
#include <utility>
#include <vector>

#include "qfw/ideal.hpp"

namespace qfw {

enum class SplitType { split, inert, ramified };

inline const char* split_name(SplitType t) {
    switch (t) {
        case SplitType::split: return "split";
        case SplitType::inert: return "inert";
        default: return "ramified";
    }
}

inline SplitType split_type(const QuadraticField& F, const Int& p) {
    if (!is_prime(p))
        throw not_prime("split_type: " + p.get_str() + " is not prime");
    int k = kronecker(F.D, p);
    if (k == 1) return SplitType::split;
    if (k == -1) return SplitType::inert;
    return SplitType::ramified;
}

// The primes above p, each of residue degree 1 unless p is inert (degree 2).
// Split primes come sorted by their Hermite bases, so the order is stable.
inline std::vector<FractionalIdeal> primes_above(const QuadraticField& F,
                                                 const Int& p) {
    SplitType st = split_type(F, p);
    if (st == SplitType::inert) return {principal_ideal(FieldElement(F, Rat(p), 0))};
    Int t = F.omega_trace(), n = F.omega_norm();
    // Roots of x^2 - t x + n mod p give the degree-1 primes (p, w - r).
    std::vector<Int> roots;
    if (p == 2) {
        for (Int r = 0; r < 2; ++r)
            if ((r * r - t * r + n) % 2 == 0) roots.push_back(r);
    } else {
        Int s = sqrt_mod_prime(F.D, p);
        Int inv2 = pow_mod(2, p - 2, p);
        for (const Int& sg : {s, Int(p - s)}) {
            Int r = (t + sg) % p * inv2 % p;
            roots.push_back(r);
        }
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    }
    std::vector<FractionalIdeal> out;
    for (const Int& r : roots)
        out.push_back(ideal_from_generators(
            F, {FieldElement(F, Rat(p), 0), FieldElement(F, Rat(-r), 1)}));
    size_t want = st == SplitType::split ? 2 : 1;
    if (out.size() != want)
        throw internal_error("primes_above: expected " + std::to_string(want) +
                             " primes over " + p.get_str() + ", found " +
                             std::to_string(out.size()));
    std::sort(out.begin(), out.end(), [](const FractionalIdeal& x,
                                         const FractionalIdeal& y) {
        return std::tie(x.B.a[0], x.B.a[1]) < std::tie(y.B.a[0], y.B.a[1]);
    });
    return out;
}

// Factorization of the principal ideal (p) as prime-power pairs.
inline std::vector<std::pair<FractionalIdeal, int>> factor_rational_prime(
    const QuadraticField& F, const Int& p) {
    SplitType st = split_type(F, p);
    auto ps = primes_above(F, p);
    std::vector<std::pair<FractionalIdeal, int>> out;
    if (st == SplitType::ramified) {
        out.emplace_back(ps[0], 2);
    } else {
        for (auto& P : ps) out.emplace_back(std::move(P), 1);
    }
    return out;
}

}  // namespace qfw
