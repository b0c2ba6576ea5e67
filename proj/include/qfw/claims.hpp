#pragma once

// Claim harness: run a registry of statements about quadratic fields against
// a configured list of discriminant radicands, and collect one verdict per
// (claim, field) with a machine-checkable witness attached.  Every FAILS
// verdict carries a witness that re-verifies under the module that found it.

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qfw/capitulation.hpp"
#include "qfw/classgroup.hpp"
#include "qfw/cyclotomic.hpp"
#include "qfw/witness.hpp"

namespace qfw {

using Json = nlohmann::ordered_json;

// Claim identifiers with a one-line reading of what each one asserts.
// Reports list claims in this order.
inline const std::vector<std::pair<std::string, std::string>>&
claim_registry() {
    static const std::vector<std::pair<std::string, std::string>> table = {
        {"L1.2", "every ideal class dies after inverting the ramified primes"},
        {"L1.3", "the class group is finite"},
        {"UFD-IFF",
         "unique factorization holds exactly when the class group is trivial"},
        {"CHAIN-1",
         "a module containing the ring powers strictly down to the ring"},
        {"P2.1", "noncommuting Galois pullbacks act identically on classes"},
        {"P2.2", "conjugation-fixed classes descend to the rationals"},
        {"T2.3", "a class of order n dies in a degree-n radical extension"},
        {"T2.4", "one abelian extension kills every class"},
        {"T2.5", "the killing extension has degree equal to the class number"},
        {"T3.1", "quadratic fields embed in cyclotomic fields"},
        {"REMARK",
         "prime-radicand real fields escape root-of-unity adjunction"},
    };
    return table;
}

struct ClaimOutcome {
    std::string claim_id;
    long d = 0;
    std::string status;   // HOLDS | FAILS | UNDECIDED | OUT_OF_SCOPE
    Json witness;         // null unless the verdict carries data
    std::string reason;   // set for OUT_OF_SCOPE / UNDECIDED
    std::string summary;  // one line for the text table
};

struct ClaimConfig {
    std::vector<long> fields;
    long witness_prime_bound = 50;   // prime search cap for factorizations
    long capitulation_bound = 50;    // coefficient shells for generator search
};

inline ClaimConfig default_claim_config() {
    return ClaimConfig{
        {-23, -21, -15, -14, -13, -10, -7, -6, -5, -3, -2, -1,
         2, 3, 5, 6, 7, 10},
        50,
        50};
}

struct ClaimReport {
    ClaimConfig config;
    std::vector<ClaimOutcome> outcomes;
};

namespace detail {

// One class sent to a radical extension: the module, the extension degree,
// and (when the search succeeds) a principal generator of its extension.
struct RadicalKill {
    std::string module;
    long degree = 0;
    bool found = false;
    long shell = -1;
    long bound = 0;
    std::string generator;
    std::string generator_norm;
};

struct FieldClaimData {
    QuadraticField F;
    ClassGroup CG;
    std::map<std::string, RadicalKill> kill_cache;
};

inline const RadicalKill& kill_class(FieldClaimData& fd,
                                     const FractionalIdeal& M, long bound) {
    std::string key = to_string(M);
    auto it = fd.kill_cache.find(key);
    if (it != fd.kill_cache.end()) return it->second;
    RadicalKill rk;
    rk.module = key;
    ExtensionOrder O = build_extension_order(M);
    rk.degree = O.ring.n;
    CapitulationSearch search = find_capitulation_generator(O, M, bound);
    rk.found = search.found;
    rk.shell = search.shell;
    rk.bound = search.bound;
    if (search.found) {
        rk.generator = to_string(O.ring, search.generator);
        rk.generator_norm = rat_str(ext_norm(O.ring, search.generator));
    }
    return fd.kill_cache.emplace(std::move(key), std::move(rk)).first->second;
}

inline Json kill_json(const RadicalKill& rk) {
    Json c;
    c["module"] = rk.module;
    c["extension_degree"] = rk.degree;
    if (rk.found) {
        c["principal_generator"] = rk.generator;
        c["generator_norm"] = rk.generator_norm;
    } else {
        c["searched_shells"] = rk.bound;
    }
    return c;
}

// L1.2 — inverting the primes that ramify should trivialize every class.
inline ClaimOutcome check_ramified_inversion(const FieldClaimData& fd) {
    ClaimOutcome out;
    Int absD = fd.F.D < 0 ? Int(-fd.F.D) : fd.F.D;
    std::vector<Int> ram = prime_divisors(absD);
    SClassGroup SC = compute_s_class_group(fd.CG, ram);
    Json ws;
    Json ramj = Json::array();
    for (const Int& p : ram) ramj.push_back(p.get_str());
    ws["ramified_primes"] = ramj;
    ws["class_number"] = fd.CG.h.get_str();
    ws["class_number_after_inverting"] = SC.h_S.get_str();
    if (SC.h_S == 1) {
        out.status = "HOLDS";
        out.summary = "inverting the ramified primes kills all " +
                      fd.CG.h.get_str() + " classes";
    } else {
        const FractionalIdeal& survivor = SC.coset_reps.at(1);
        Int ord = ideal_class_order(survivor);
        ws["surviving_module"] = to_string(survivor);
        ws["survivor_class_order"] = ord.get_str();
        out.status = "FAILS";
        out.summary = "the order-" + ord.get_str() + " class of " +
                      to_string(survivor) + " survives the inversion";
    }
    out.witness = ws;
    return out;
}

// L1.3 — finiteness, witnessed by the terminating bounded-norm scan.
inline ClaimOutcome check_finiteness(const FieldClaimData& fd) {
    ClaimOutcome out;
    Json ws;
    ws["norm_scan_bound"] = rat_floor(fd.CG.minkowski).get_str();
    ws["class_number"] = fd.CG.h.get_str();
    out.status = "HOLDS";
    out.summary = "scan below norm " + rat_floor(fd.CG.minkowski).get_str() +
                  " closes the group at " + fd.CG.h.get_str() + " classes";
    out.witness = ws;
    return out;
}

// UFD-IFF — a double factorization of some p*q into irreducibles exists
// exactly when the class group is nontrivial.
inline ClaimOutcome check_unique_factorization(const FieldClaimData& fd,
                                               long prime_bound) {
    ClaimOutcome out;
    auto w = find_factorization_witness(fd.F, prime_bound);
    Json ws;
    ws["class_number"] = fd.CG.h.get_str();
    if (fd.CG.h == 1) {
        ws["double_factorization_found"] = w.has_value();
        if (!w) {
            out.status = "HOLDS";
            out.summary =
                "trivial class group and no double factorization below " +
                std::to_string(prime_bound);
        } else {
            out.status = "FAILS";
            out.summary = "trivial class group yet " + w->p.get_str() + "*" +
                          w->q.get_str() + " factors two ways";
        }
    } else if (w) {
        Json ex;
        ex["p"] = w->p.get_str();
        ex["q"] = w->q.get_str();
        ex["x1"] = to_string(w->x1);
        ex["x2"] = to_string(w->x2);
        ws["example"] = ex;
        out.status = "HOLDS";
        out.summary = w->p.get_str() + "*" + w->q.get_str() + " = (" +
                      to_string(w->x1) + ")(" + to_string(w->x2) +
                      "), all four factors irreducible";
    } else {
        out.status = "UNDECIDED";
        out.reason = "no double factorization found below prime bound " +
                     std::to_string(prime_bound);
        out.summary = out.reason;
        out.witness = ws;
        return out;
    }
    out.witness = ws;
    return out;
}

// CHAIN-1 — for a module M properly containing the ring, the chain of powers
// is asserted to decrease down to the ring.  Powers of such a module in fact
// grow, so the assertion can only survive on fields with one class.
inline ClaimOutcome check_power_chain(const FieldClaimData& fd) {
    ClaimOutcome out;
    Json ws;
    if (fd.CG.h == 1) {
        ws["note"] = "every module is equivalent to the ring";
        out.status = "HOLDS";
        out.summary = "vacuous: no module properly contains the ring "
                      "without being principal";
        out.witness = ws;
        return out;
    }
    FractionalIdeal ring = ring_of_integers(fd.F);
    FractionalIdeal M = ideal_dual(fd.CG.reps.at(1));
    FractionalIdeal M2 = ideal_mul(M, M);
    bool ring_inside = ideal_subset(ring, M);
    bool claimed = ideal_subset(M2, M);         // asserted: M contains M^2
    bool reversed = ideal_subset(M, M2) && M != M2;
    Int order = ideal_class_order(M);
    ws["module"] = to_string(M);
    ws["module_squared"] = to_string(M2);
    ws["ring_inside_module"] = ring_inside;
    ws["module_contains_its_square"] = claimed;
    ws["square_strictly_contains_module"] = reversed;
    ws["class_order"] = order.get_str();
    out.witness = ws;
    if (claimed) {
        out.status = "HOLDS";
        out.summary = "the power chain decreases as asserted";
    } else {
        out.status = "FAILS";
        out.summary = "for M = " + to_string(M) +
                      " the square strictly contains M, so the chain grows; "
                      "only the order " + order.get_str() + " is finite";
    }
    return out;
}

// P2.1 — needs a pair of noncommuting Galois elements; degree-2 fields
// have none.
inline ClaimOutcome check_pullback_commutation(const FieldClaimData&) {
    ClaimOutcome out;
    out.status = "OUT_OF_SCOPE";
    out.reason = "requires nonabelian extension";
    out.summary = out.reason;
    return out;
}

// P2.2 — a class fixed by conjugation should come from the rationals, whose
// class group is trivial; so every conjugation-fixed class must be principal.
inline ClaimOutcome check_fixed_class_descent(const FieldClaimData& fd) {
    ClaimOutcome out;
    long fixed = 0;
    for (const FractionalIdeal& I : fd.CG.reps) {
        FractionalIdeal C = ideal_conj(I);
        if (!ideal_equivalent(C, I)) continue;
        ++fixed;
        if (ideal_is_principal(I)) continue;
        Json ws;
        ws["module"] = to_string(I);
        ws["conjugate"] = to_string(C);
        ws["class_order"] = ideal_class_order(I).get_str();
        out.status = "FAILS";
        out.summary = "conjugation fixes the class of " + to_string(I) +
                      " yet it is not principal";
        out.witness = ws;
        return out;
    }
    Json ws;
    ws["conjugation_fixed_classes"] = fixed;
    ws["all_principal"] = true;
    out.status = "HOLDS";
    out.summary = "all " + std::to_string(fixed) +
                  " conjugation-fixed classes are principal";
    out.witness = ws;
    return out;
}

// T2.3 — every nontrivial class of order n becomes principal in the
// degree-n radical extension built from a generator of its n-th power.
inline ClaimOutcome check_class_death(FieldClaimData& fd, long bound) {
    ClaimOutcome out;
    Json ws;
    if (fd.CG.h == 1) {
        ws["note"] = "no nontrivial classes";
        out.status = "HOLDS";
        out.summary = "vacuous: the class group is trivial";
        out.witness = ws;
        return out;
    }
    Json cases = Json::array();
    bool all_found = true;
    for (size_t i = 1; i < fd.CG.reps.size(); ++i) {
        const RadicalKill& rk = kill_class(fd, fd.CG.reps[i], bound);
        all_found = all_found && rk.found;
        cases.push_back(kill_json(rk));
    }
    ws["classes"] = cases;
    out.witness = ws;
    if (all_found) {
        out.status = "HOLDS";
        out.summary = "all " + std::to_string(fd.CG.reps.size() - 1) +
                      " nontrivial classes die in radical extensions of "
                      "matching degree";
    } else {
        out.status = "UNDECIDED";
        out.reason = "capitulation search exhausted its coefficient bound";
        out.summary = out.reason;
    }
    return out;
}

// T2.4 — killing each generator kills the whole group in the compositum,
// since extension of modules is multiplicative.
inline ClaimOutcome check_all_classes_death(FieldClaimData& fd, long bound) {
    ClaimOutcome out;
    Json ws;
    if (fd.CG.h == 1) {
        ws["note"] = "hypothesis asks for a nontrivial class group";
        out.status = "HOLDS";
        out.summary = "vacuous: the class group is trivial";
        out.witness = ws;
        return out;
    }
    Json gens = Json::array();
    bool all_found = true;
    for (const FractionalIdeal& g : fd.CG.generators) {
        const RadicalKill& rk = kill_class(fd, g, bound);
        all_found = all_found && rk.found;
        gens.push_back(kill_json(rk));
    }
    ws["generators"] = gens;
    ws["compositum_kills_all"] = all_found;
    out.witness = ws;
    if (all_found) {
        out.status = "HOLDS";
        out.summary = "every generator dies, so the compositum of " +
                      std::to_string(fd.CG.generators.size()) +
                      " radical extensions kills the whole group";
    } else {
        out.status = "UNDECIDED";
        out.reason = "capitulation search exhausted its coefficient bound";
        out.summary = out.reason;
    }
    return out;
}

// T2.5 — the realized degrees multiply to the class number, matching the
// order of the asserted Galois group.
inline ClaimOutcome check_group_sized_death(FieldClaimData& fd, long bound) {
    ClaimOutcome out;
    Json ws;
    if (fd.CG.h == 1) {
        ws["note"] = "hypothesis asks for a nontrivial class group";
        out.status = "HOLDS";
        out.summary = "vacuous: the class group is trivial";
        out.witness = ws;
        return out;
    }
    Json degrees = Json::array();
    Int prod(1);
    bool all_found = true;
    for (const FractionalIdeal& g : fd.CG.generators) {
        const RadicalKill& rk = kill_class(fd, g, bound);
        all_found = all_found && rk.found;
        degrees.push_back(rk.degree);
        prod *= Int(rk.degree);
    }
    ws["realized_degrees"] = degrees;
    ws["degree_product"] = prod.get_str();
    ws["class_number"] = fd.CG.h.get_str();
    bool match = (prod == fd.CG.h);
    ws["match"] = match;
    out.witness = ws;
    if (all_found && match) {
        out.status = "HOLDS";
        out.summary = "realized degrees multiply to the class number " +
                      fd.CG.h.get_str();
    } else if (!all_found) {
        out.status = "UNDECIDED";
        out.reason = "capitulation search exhausted its coefficient bound";
        out.summary = out.reason;
    } else {
        out.status = "FAILS";
        out.summary = "realized degree product " + prod.get_str() +
                      " misses the class number " + fd.CG.h.get_str();
    }
    return out;
}

// T3.1 — the field embeds in the roots-of-unity ring of conductor |D|;
// the embedding certifies itself by squaring back to d.
inline ClaimOutcome check_cyclotomic_embedding(const FieldClaimData& fd) {
    ClaimOutcome out;
    CycInt s = embed_sqrt(fd.F);
    CycInt w = embed_omega(fd.F);
    Json ws;
    ws["conductor"] = s.n;
    ws["sqrt_image"] = to_string(s);
    ws["ring_generator_image"] = to_string(w);
    out.status = "HOLDS";
    out.summary = "sqrt(d) realized among roots of unity of conductor " +
                  std::to_string(s.n);
    out.witness = ws;
    return out;
}

// REMARK — asserts that adjoining sqrt(p), p a positive prime, cannot be
// done with roots of unity.  The explicit embedding contradicts that.
inline ClaimOutcome check_claimed_exception(const FieldClaimData& fd) {
    ClaimOutcome out;
    if (!(fd.F.d > 0 && is_prime(fd.F.d))) {
        out.status = "OUT_OF_SCOPE";
        out.reason = "asserts an exception only for positive prime radicands";
        out.summary = out.reason;
        return out;
    }
    CycInt s = embed_sqrt(fd.F);
    Json ws;
    ws["conductor"] = s.n;
    ws["sqrt_image"] = to_string(s);
    out.status = "FAILS";
    out.summary = "claimed unreachable, yet sqrt(" + fd.F.d.get_str() +
                  ") = " + to_string(s) + " at conductor " +
                  std::to_string(s.n);
    out.witness = ws;
    return out;
}

inline ClaimOutcome dispatch_claim(const std::string& id, FieldClaimData& fd,
                                   const ClaimConfig& cfg) {
    if (id == "L1.2") return check_ramified_inversion(fd);
    if (id == "L1.3") return check_finiteness(fd);
    if (id == "UFD-IFF")
        return check_unique_factorization(fd, cfg.witness_prime_bound);
    if (id == "CHAIN-1") return check_power_chain(fd);
    if (id == "P2.1") return check_pullback_commutation(fd);
    if (id == "P2.2") return check_fixed_class_descent(fd);
    if (id == "T2.3") return check_class_death(fd, cfg.capitulation_bound);
    if (id == "T2.4")
        return check_all_classes_death(fd, cfg.capitulation_bound);
    if (id == "T2.5")
        return check_group_sized_death(fd, cfg.capitulation_bound);
    if (id == "T3.1") return check_cyclotomic_embedding(fd);
    if (id == "REMARK") return check_claimed_exception(fd);
    throw input_error("unknown claim id: " + id);
}

}  // namespace detail

// Run every registered claim against every configured field.  Outcomes are
// ordered claim-major (registry order), field-minor (d ascending).
inline ClaimReport run_claims(const ClaimConfig& config) {
    if (config.fields.empty()) throw empty_config("claims: no fields listed");
    ClaimReport report;
    report.config = config;
    std::vector<long>& fields = report.config.fields;
    std::sort(fields.begin(), fields.end());
    fields.erase(std::unique(fields.begin(), fields.end()), fields.end());

    std::vector<detail::FieldClaimData> data;
    for (long d : fields) {
        QuadraticField F = make_field(Int(d));
        data.push_back({F, compute_class_group(F), {}});
    }
    for (const auto& [id, title] : claim_registry()) {
        (void)title;
        for (size_t i = 0; i < data.size(); ++i) {
            ClaimOutcome o = detail::dispatch_claim(id, data[i], report.config);
            o.claim_id = id;
            o.d = fields[i];
            report.outcomes.push_back(std::move(o));
        }
    }
    return report;
}

inline ClaimReport run_claims() { return run_claims(default_claim_config()); }

// Serialize a report.  "json" gives the fixed schema
//   {version, config, outcomes: [{claim_id, d, status, reason?, witness?}]}
// and "text" a table CLAIM | FIELD | STATUS | WITNESS-SUMMARY.  Both forms
// are byte-stable for a fixed config.
inline std::string render_report(const ClaimReport& report,
                                 const std::string& format) {
    if (format == "json") {
        Json doc;
        doc["version"] = 1;
        Json cfg;
        cfg["fields"] = report.config.fields;
        cfg["witness_prime_bound"] = report.config.witness_prime_bound;
        cfg["capitulation_bound"] = report.config.capitulation_bound;
        doc["config"] = cfg;
        Json arr = Json::array();
        for (const ClaimOutcome& o : report.outcomes) {
            Json row;
            row["claim_id"] = o.claim_id;
            row["d"] = o.d;
            row["status"] = o.status;
            if (!o.reason.empty()) row["reason"] = o.reason;
            if (!o.witness.is_null()) row["witness"] = o.witness;
            arr.push_back(row);
        }
        doc["outcomes"] = arr;
        return doc.dump(2) + "\n";
    }
    if (format == "text") {
        std::vector<std::array<std::string, 4>> rows;
        rows.push_back({"CLAIM", "FIELD", "STATUS", "WITNESS-SUMMARY"});
        for (const ClaimOutcome& o : report.outcomes)
            rows.push_back({o.claim_id, std::to_string(o.d), o.status,
                            o.summary});
        size_t w0 = 0, w1 = 0, w2 = 0;
        for (const auto& r : rows) {
            w0 = std::max(w0, r[0].size());
            w1 = std::max(w1, r[1].size());
            w2 = std::max(w2, r[2].size());
        }
        std::string out;
        auto pad = [](const std::string& s, size_t w) {
            return s + std::string(w - s.size(), ' ');
        };
        for (size_t i = 0; i < rows.size(); ++i) {
            const auto& r = rows[i];
            out += pad(r[0], w0) + " | " + pad(r[1], w1) + " | " +
                   pad(r[2], w2) + " | " + r[3] + "\n";
            if (i == 0)
                out += std::string(w0, '-') + "-+-" + std::string(w1, '-') +
                       "-+-" + std::string(w2, '-') + "-+-" +
                       std::string(16, '-') + "\n";
        }
        return out;
    }
    throw input_error("unknown report format: " + format);
}

}  // namespace qfw
