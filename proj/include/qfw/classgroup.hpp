#pragma once

// The ideal class group, computed exactly.  Every class contains an integral
// ideal of norm at most the Minkowski bound, so enumerating ideals by
// ascending norm (lexicographic within a norm) and keeping the first member
// of each equivalence class yields one canonical representative per class.
// The group structure comes from relations among the classes of the
// non-inert primes below the bound, put into Smith normal form.

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "qfw/splitting.hpp"

namespace qfw {

// Exact rational upper enclosure of the Minkowski bound:
// (2/pi) sqrt(|D|) for imaginary fields, sqrt(D)/2 for real ones.
inline Rat minkowski_bound(const QuadraticField& F) {
    if (F.imaginary()) return Rat(2) * sqrt_upper(-F.D) / pi_lower();
    return sqrt_upper(F.D) / 2;
}

struct ClassGroup {
    QuadraticField F;
    Rat minkowski;
    Int h = 1;
    std::vector<Int> divisors;  // cyclic orders > 1, each dividing the next
    std::vector<FractionalIdeal> generators;  // canonical rep per divisor
    std::vector<FractionalIdeal> reps;        // canonical rep per class
    std::vector<std::vector<Int>> rep_exponents;  // reps[i] ~ prod gen^exp[i]
};

// Index of the class of I among the representatives.
inline size_t class_index(const std::vector<FractionalIdeal>& reps,
                          const FractionalIdeal& I) {
    for (size_t i = 0; i < reps.size(); ++i)
        if (ideal_equivalent(I, reps[i])) return i;
    throw internal_error("class_index: class not represented");
}

inline ClassGroup compute_class_group(const QuadraticField& F) {
    ClassGroup CG;
    CG.F = F;
    CG.minkowski = minkowski_bound(F);
    Int bound = rat_floor(CG.minkowski);

    // One canonical representative per class: first by (norm, Hermite basis).
    std::vector<FractionalIdeal>& reps = CG.reps;
    for (Int m = 1; m <= bound; ++m) {
        for (auto& I : ideals_of_norm(F, m)) {
            bool seen = false;
            for (const auto& r : reps)
                if (ideal_equivalent(I, r)) {
                    seen = true;
                    break;
                }
            if (!seen) reps.push_back(std::move(I));
        }
    }
    CG.h = reps.size();

    // Adopt the non-principal prime classes one at a time.  For each new
    // prime P, find the least n with [P]^n inside the subgroup S generated so
    // far; that exponent vector is one relation row, and S grows by the
    // cosets of P, ..., P^{n-1}.  The resulting k relations have determinant
    // |S|, so once |S| = h they present the whole group.
    std::vector<FractionalIdeal> adopted;     // the prime ideals
    std::vector<std::vector<Int>> relations;  // rows over adopted exponents
    std::map<size_t, std::vector<Int>> sub;   // class index -> exponents
    sub[class_index(reps, ring_of_integers(F))] = {};

    for (const Int& p : primes_up_to(mpz_get_si(bound.get_mpz_t()))) {
        if (Int(CG.h) == Int(sub.size())) break;  // group already generated
        if (split_type(F, p) == SplitType::inert) continue;
        FractionalIdeal P = primes_above(F, p)[0];
        size_t pidx = class_index(reps, P);
        if (sub.count(pidx)) {
            // Dependent class: no new generator needed.  (Its relation is
            // implied by the subgroup data, so nothing to record.)
            continue;
        }
        size_t j = adopted.size();
        // Walk P, P^2, ... as canonical classes until landing in S.
        std::vector<size_t> power_idx = {pidx};
        FractionalIdeal cur = reps[pidx];
        Int n = 1;
        while (!sub.count(power_idx.back())) {
            cur = reps[class_index(reps, ideal_mul(cur, P))];
            power_idx.push_back(class_index(reps, cur));
            ++n;
        }
        // Relation: n * e_j = exponents of P^n over the earlier generators.
        std::vector<Int> row(j + 1, Int(0));
        const std::vector<Int>& inside = sub.at(power_idx.back());
        for (size_t i = 0; i < inside.size(); ++i) row[i] = -inside[i];
        row[j] = n;
        relations.push_back(std::move(row));
        // Enlarge S by multiplying every known coset with P^1 .. P^{n-1}.
        std::map<size_t, std::vector<Int>> grown = sub;
        for (Int e = 1; e < n; ++e) {
            const FractionalIdeal& Pe = reps[power_idx[mpz_get_ui(e.get_mpz_t()) - 1]];
            for (const auto& [idx, vec] : sub) {
                size_t nidx = class_index(reps, ideal_mul(reps[idx], Pe));
                std::vector<Int> nvec = vec;
                nvec.resize(j + 1, Int(0));
                nvec[j] = e;
                grown.emplace(nidx, std::move(nvec));
            }
        }
        sub = std::move(grown);
        adopted.push_back(std::move(P));
    }
    if (Int(sub.size()) != CG.h)
        throw internal_error("class group: prime classes generated " +
                             std::to_string(sub.size()) + " of " +
                             CG.h.get_str() + " classes");

    // Smith normal form of the relation rows (padded to full width) gives the
    // cyclic structure; the inverse column transform recovers generators.
    size_t k = adopted.size();
    if (k > 0) {
        IMat R(relations.size(), k);
        for (size_t i = 0; i < relations.size(); ++i)
            for (size_t jj = 0; jj < relations[i].size(); ++jj)
                R.at(i, jj) = relations[i][jj];
        Smith sm = snf(R);
        auto [Vinv, vden] = inverse(sm.V);
        if (vden != 1 && vden != -1)
            throw internal_error("class group: column transform not unimodular");
        Int total = 1;
        for (size_t j = 0; j < k; ++j) {
            Int dj = sm.D.at(j, j);
            if (dj == 0)
                throw internal_error("class group: relation lattice not full rank");
            total *= dj;
            if (dj == 1) continue;
            // Generator: product of adopted primes with exponents from the
            // j-th row of V^{-1} (times the sign of the denominator).
            FractionalIdeal g = ring_of_integers(F);
            for (size_t i = 0; i < k; ++i)
                g = ideal_mul(g, ideal_pow(adopted[i], Vinv.at(j, i) * vden));
            g = CG.reps[class_index(reps, g)];
            if (ideal_class_order(g) != dj)
                throw internal_error("class group: generator order mismatch");
            CG.divisors.push_back(dj);
            CG.generators.push_back(std::move(g));
        }
        if (total != CG.h)
            throw internal_error("class group: relation determinant " +
                                 total.get_str() + " != class count " +
                                 CG.h.get_str());
    } else if (CG.h != 1) {
        throw internal_error("class group: no generators but h > 1");
    }

    // Exponent table: walk the odometer over the divisor box and record the
    // class each exponent vector lands on.
    CG.rep_exponents.assign(reps.size(), {});
    size_t r = CG.divisors.size();
    std::vector<Int> y(r, Int(0));
    while (true) {
        FractionalIdeal prod = ring_of_integers(F);
        for (size_t j = 0; j < r; ++j)
            if (y[j] != 0) prod = ideal_mul(prod, ideal_pow(CG.generators[j], y[j]));
        CG.rep_exponents[class_index(reps, prod)] = y;
        size_t j = 0;
        while (j < r) {
            ++y[j];
            if (y[j] < CG.divisors[j]) break;
            y[j] = 0;
            ++j;
        }
        if (j == r) break;
    }
    for (size_t i = 0; i < reps.size(); ++i)
        if (CG.h > 1 && CG.rep_exponents[i].empty() && i != class_index(reps, ring_of_integers(F)))
            throw internal_error("class group: exponent table incomplete");
    return CG;
}

inline std::vector<Int> class_exponents(const ClassGroup& CG,
                                        const FractionalIdeal& I) {
    return CG.rep_exponents[class_index(CG.reps, I)];
}

// ---------------------------------------------------------------------------
// S-class group: the quotient of the class group by the subgroup generated by
// the classes of all primes above the listed rational primes.
// ---------------------------------------------------------------------------

struct SClassGroup {
    QuadraticField F;
    std::vector<Int> S;  // inverted rational primes, ascending
    Int h_S = 1;
    std::vector<Int> divisors;                 // structure of the quotient
    std::vector<FractionalIdeal> coset_reps;   // canonical class rep per coset
    IMat subgroup_basis;                       // Hermite rows over generator exponents
};

inline SClassGroup compute_s_class_group(const ClassGroup& CG,
                                         std::vector<Int> S) {
    if (S.empty()) throw empty_config("s-class group: no primes listed");
    std::sort(S.begin(), S.end());
    S.erase(std::unique(S.begin(), S.end()), S.end());
    SClassGroup out;
    out.F = CG.F;
    out.S = S;

    size_t r = CG.divisors.size();
    // Rows: the divisor lattice plus the exponent vector of every S-prime.
    std::vector<std::vector<Int>> rows;
    for (size_t j = 0; j < r; ++j) {
        std::vector<Int> row(r, Int(0));
        row[j] = CG.divisors[j];
        rows.push_back(std::move(row));
    }
    for (const Int& p : S) {
        if (!is_prime(p))
            throw not_prime("s-class group: " + p.get_str() + " is not prime");
        for (const auto& P : primes_above(CG.F, p))
            rows.push_back(class_exponents(CG, P));
    }
    IMat R(rows.size(), r);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < r; ++j) R.at(i, j) = rows[i][j];

    if (r == 0) {
        out.h_S = 1;
        out.coset_reps = {CG.reps[class_index(CG.reps, ring_of_integers(CG.F))]};
        out.subgroup_basis = IMat(0, 0);
        return out;
    }

    out.subgroup_basis = hnf(R);
    for (const Int& dj : snf_divisors(R)) {
        if (dj > 1) out.divisors.push_back(dj);
        out.h_S *= dj;
    }

    // Coset representatives: scan classes in canonical order, keep one per
    // coset (difference of exponent vectors inside the subgroup lattice).
    auto in_subgroup = [&](const std::vector<Int>& u, const std::vector<Int>& v) {
        std::vector<Int> w(r);
        for (size_t j = 0; j < r; ++j) w[j] = u[j] - v[j];
        return solve_upper(out.subgroup_basis, w).has_value();
    };
    for (size_t i = 0; i < CG.reps.size(); ++i) {
        bool seen = false;
        for (const auto& c : out.coset_reps) {
            if (in_subgroup(CG.rep_exponents[i],
                            CG.rep_exponents[class_index(CG.reps, c)])) {
                seen = true;
                break;
            }
        }
        if (!seen) out.coset_reps.push_back(CG.reps[i]);
    }
    if (Int(out.coset_reps.size()) != out.h_S)
        throw internal_error("s-class group: coset count " +
                             std::to_string(out.coset_reps.size()) +
                             " != quotient order " + out.h_S.get_str());
    return out;
}

}  // namespace qfw
