#pragma once

// Irreducible elements and explicit failures of unique factorization.
//
// An integral element x with 1 < |N(x)| is reducible exactly when some
// principal ideal of intermediate norm contains it: x = a*b with both factors
// nonunits gives (a), and conversely a generator of such an ideal splits off
// a nonunit cofactor.  This turns irreducibility into a finite ideal search.
//
// A field with class number > 1 admits a concrete witness: rational primes
// p < q whose prime ideals are nonprincipal but whose product P*Q is
// principal with generator x1.  Then p*q = x1*x2 are two factorizations of
// the same integer into irreducibles that do not match up to units, since
// |N(x1)| = p*q differs from p^2 and q^2.

#include <optional>
#include <vector>

#include "qfw/classgroup.hpp"
#include "qfw/ideal.hpp"
#include "qfw/splitting.hpp"

namespace qfw {

// True when x admits no factorization into two nonunits.  Rejects zero,
// units, and non-integral inputs, which have no meaningful answer.
inline bool is_irreducible(const FieldElement& x) {
    if (x.a == 0 && x.b == 0) throw zero_ideal("is_irreducible: zero input");
    if (!x.is_integral()) throw not_integral("is_irreducible: input is not an algebraic integer");
    Int n = abs(rat_to_int(x.norm()));
    if (n == 1) throw unit_input("is_irreducible: units are not factorization subjects");
    std::vector<Int> divs;
    for (Int m = 2; m * m <= n; ++m) {
        if (n % m != 0) continue;
        divs.push_back(m);
        if (m * m != n) divs.push_back(n / m);
    }
    for (const Int& m : divs) {
        for (const auto& I : ideals_of_norm(x.F, m)) {
            if (!ideal_contains(I, x)) continue;
            if (ideal_is_principal(I)) return false;
        }
    }
    return true;
}

// Two factorizations of the same rational integer that cannot be matched up
// to units: p*q = x1*x2 with all four factors irreducible and |N(x1)| = p*q.
struct FactorizationWitness {
    Int p;
    Int q;
    FieldElement x1;
    FieldElement x2;
};

// Searches prime pairs p < q up to the bound, ordered by (p*q, p), for
// nonprincipal primes P | p and Q | q with P*Q principal.  Returns the first
// hit, or nothing (in particular whenever the class number is 1, where no
// witness exists at any bound).
inline std::optional<FactorizationWitness> find_factorization_witness(
    const QuadraticField& F, long prime_bound = 50) {
    std::vector<long> ps = primes_up_to(prime_bound);
    std::vector<std::pair<long, long>> pairs;
    for (size_t i = 0; i < ps.size(); ++i)
        for (size_t j = i + 1; j < ps.size(); ++j)
            pairs.emplace_back(ps[i], ps[j]);
    std::sort(pairs.begin(), pairs.end(),
              [](const std::pair<long, long>& l, const std::pair<long, long>& r) {
                  return std::make_pair(l.first * l.second, l.first) <
                         std::make_pair(r.first * r.second, r.first);
              });
    for (const auto& [p, q] : pairs) {
        if (split_type(F, Int(p)) == SplitType::inert) continue;
        if (split_type(F, Int(q)) == SplitType::inert) continue;
        for (const auto& P : primes_above(F, Int(p))) {
            if (ideal_is_principal(P)) continue;
            for (const auto& Q : primes_above(F, Int(q))) {
                if (ideal_is_principal(Q)) continue;
                auto g = ideal_generator(ideal_mul(P, Q));
                if (!g) continue;
                FieldElement x1 = *g;
                FieldElement pq(F, Rat(Int(p) * q), Rat(0));
                return FactorizationWitness{Int(p), Int(q), x1, pq / x1};
            }
        }
    }
    return std::nullopt;
}

}  // namespace qfw
