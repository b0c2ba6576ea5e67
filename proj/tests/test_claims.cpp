#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "qfw/claims.hpp"

using namespace qfw;

namespace {

ClaimConfig cfg(std::initializer_list<long> ds) {
    ClaimConfig c;
    c.fields = ds;
    return c;
}

const ClaimOutcome& outcome(const ClaimReport& r, const std::string& id,
                            long d) {
    for (const auto& o : r.outcomes)
        if (o.claim_id == id && o.d == d) return o;
    FAIL("no outcome for " + id + " at d=" + std::to_string(d));
    throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("report shape and ordering", "[claims]") {
    auto r = run_claims(cfg({-5, -23}));
    REQUIRE(r.outcomes.size() == claim_registry().size() * 2);

    // Claim-major in registry order, d ascending inside each claim.
    size_t k = 0;
    for (const auto& [id, title] : claim_registry()) {
        REQUIRE(r.outcomes[k].claim_id == id);
        REQUIRE(r.outcomes[k].d == -23);
        REQUIRE(r.outcomes[k + 1].claim_id == id);
        REQUIRE(r.outcomes[k + 1].d == -5);
        k += 2;
    }

    for (const auto& o : r.outcomes) {
        REQUIRE((o.status == "HOLDS" || o.status == "FAILS" ||
                 o.status == "UNDECIDED" || o.status == "OUT_OF_SCOPE"));
        if (o.status == "FAILS") REQUIRE_FALSE(o.witness.is_null());
        if (o.status == "OUT_OF_SCOPE") {
            REQUIRE_FALSE(o.reason.empty());
            REQUIRE(o.witness.is_null());
        }
    }

    REQUIRE_THROWS_AS(run_claims(cfg({})), empty_config);
    REQUIRE_THROWS_AS(run_claims(cfg({12})), not_squarefree);
}

TEST_CASE("inverting ramified primes: verdicts and witnesses", "[claims]") {
    auto r = run_claims(cfg({-23, -14, -5, -1, 10}));

    REQUIRE(outcome(r, "L1.2", -5).status == "HOLDS");
    REQUIRE(outcome(r, "L1.2", -1).status == "HOLDS");
    REQUIRE(outcome(r, "L1.2", 10).status == "HOLDS");

    // d = -23: the only ramified prime is principal, so the full class
    // group survives; the witness carries an order-3 class.
    const auto& bad = outcome(r, "L1.2", -23);
    REQUIRE(bad.status == "FAILS");
    REQUIRE(bad.witness.at("survivor_class_order").get<std::string>() == "3");

    // Feed the witness back: the surviving module really is nonprincipal
    // and really survives the inversion.
    auto F = make_field(-23);
    auto M = parse_ideal(bad.witness.at("surviving_module").get<std::string>(),
                         F);
    REQUIRE_FALSE(ideal_is_principal(M));
    auto SC = compute_s_class_group(compute_class_group(F), {Int(23)});
    REQUIRE(SC.h_S == 3);

    // d = -14: the ramified classes generate only the order-2 subgroup
    // of the cyclic order-4 group.
    const auto& bad14 = outcome(r, "L1.2", -14);
    REQUIRE(bad14.status == "FAILS");
    REQUIRE(bad14.witness.at("class_number_after_inverting")
                .get<std::string>() == "2");
}

TEST_CASE("finiteness always certifies", "[claims]") {
    auto r = run_claims(cfg({-23, -5, 10}));
    for (long d : {-23L, -5L, 10L}) {
        const auto& o = outcome(r, "L1.3", d);
        REQUIRE(o.status == "HOLDS");
        REQUIRE_FALSE(o.witness.at("class_number").get<std::string>().empty());
    }
}

TEST_CASE("unique factorization against the class number", "[claims]") {
    auto r = run_claims(cfg({-5, -1, 2}));
    const auto& ufd5 = outcome(r, "UFD-IFF", -5);
    REQUIRE(ufd5.status == "HOLDS");
    REQUIRE(ufd5.witness.at("example").at("p").get<std::string>() == "2");
    REQUIRE(ufd5.witness.at("example").at("q").get<std::string>() == "3");
    REQUIRE(ufd5.witness.at("example").at("x1").get<std::string>() == "1 + w");

    // Feed the witness back through the irreducibility checker.
    auto F = make_field(-5);
    auto x1 = parse_element(F, "1 + w");
    auto x2 = parse_element(F, "1 - w");
    REQUIRE(is_irreducible(x1));
    REQUIRE(is_irreducible(x2));
    REQUIRE(x1 * x2 == parse_element(F, "6"));

    REQUIRE(outcome(r, "UFD-IFF", -1).status == "HOLDS");
    REQUIRE(outcome(r, "UFD-IFF", -1)
                .witness.at("double_factorization_found")
                .get<bool>() == false);
    REQUIRE(outcome(r, "UFD-IFF", 2).status == "HOLDS");
}

TEST_CASE("the power chain reverses on nontrivial fields", "[claims]") {
    auto r = run_claims(cfg({-5, -1}));
    REQUIRE(outcome(r, "CHAIN-1", -1).status == "HOLDS");

    const auto& o = outcome(r, "CHAIN-1", -5);
    REQUIRE(o.status == "FAILS");
    REQUIRE(o.witness.at("ring_inside_module").get<bool>());
    REQUIRE_FALSE(o.witness.at("module_contains_its_square").get<bool>());
    REQUIRE(o.witness.at("square_strictly_contains_module").get<bool>());

    // Re-verify the containments from the recorded modules.
    auto F = make_field(-5);
    auto M = parse_ideal(o.witness.at("module").get<std::string>(), F);
    auto M2 = parse_ideal(o.witness.at("module_squared").get<std::string>(), F);
    REQUIRE(ideal_subset(ring_of_integers(F), M));
    REQUIRE(ideal_mul(M, M) == M2);
    REQUIRE(ideal_subset(M, M2));
    REQUIRE_FALSE(ideal_subset(M2, M));
}

TEST_CASE("pullback commutation is out of scope at degree two", "[claims]") {
    auto r = run_claims(cfg({-5}));
    const auto& o = outcome(r, "P2.1", -5);
    REQUIRE(o.status == "OUT_OF_SCOPE");
    REQUIRE(o.reason == "requires nonabelian extension");
}

TEST_CASE("descent of conjugation-fixed classes", "[claims]") {
    auto r = run_claims(cfg({-23, -14, -5, -1}));

    // Odd class number: conjugation fixes only the principal class.
    REQUIRE(outcome(r, "P2.2", -1).status == "HOLDS");
    REQUIRE(outcome(r, "P2.2", -23).status == "HOLDS");
    REQUIRE(outcome(r, "P2.2", -23)
                .witness.at("conjugation_fixed_classes")
                .get<long>() == 1);

    // Even class number: an order-2 class is fixed but not principal.
    for (long d : {-14L, -5L}) {
        const auto& o = outcome(r, "P2.2", d);
        REQUIRE(o.status == "FAILS");
        auto F = make_field(d);
        auto M = parse_ideal(o.witness.at("module").get<std::string>(), F);
        REQUIRE(ideal_equivalent(ideal_conj(M), M));
        REQUIRE_FALSE(ideal_is_principal(M));
        REQUIRE(o.witness.at("class_order").get<std::string>() == "2");
    }
}

TEST_CASE("classes die in radical extensions", "[claims]") {
    auto r = run_claims(cfg({-23, -5, -1}));
    REQUIRE(outcome(r, "T2.3", -1).status == "HOLDS");

    const auto& o5 = outcome(r, "T2.3", -5);
    REQUIRE(o5.status == "HOLDS");
    REQUIRE(o5.witness.at("classes").size() == 1);
    REQUIRE(o5.witness.at("classes").at(0).at("extension_degree")
                .get<long>() == 2);

    const auto& o23 = outcome(r, "T2.3", -23);
    REQUIRE(o23.status == "HOLDS");
    REQUIRE(o23.witness.at("classes").size() == 2);
    for (const auto& c : o23.witness.at("classes")) {
        REQUIRE(c.at("extension_degree").get<long>() == 3);
        REQUIRE_FALSE(c.at("principal_generator").get<std::string>().empty());
    }
}

TEST_CASE("one extension kills everything, with the right degree",
          "[claims]") {
    auto r = run_claims(cfg({-21, -14, -5, -1}));
    for (const char* id : {"T2.4", "T2.5"}) {
        REQUIRE(outcome(r, id, -1).status == "HOLDS");
        REQUIRE(outcome(r, id, -5).status == "HOLDS");
        REQUIRE(outcome(r, id, -14).status == "HOLDS");
        REQUIRE(outcome(r, id, -21).status == "HOLDS");
    }

    // C2 x C2: two degree-2 extensions, product 4 = h.
    const auto& o21 = outcome(r, "T2.5", -21);
    REQUIRE(o21.witness.at("realized_degrees").size() == 2);
    REQUIRE(o21.witness.at("degree_product").get<std::string>() == "4");
    REQUIRE(o21.witness.at("match").get<bool>());

    // C4: one degree-4 extension.
    const auto& o14 = outcome(r, "T2.5", -14);
    REQUIRE(o14.witness.at("realized_degrees").size() == 1);
    REQUIRE(o14.witness.at("realized_degrees").at(0).get<long>() == 4);
}

TEST_CASE("cyclotomic embedding and the claimed exception", "[claims]") {
    auto r = run_claims(cfg({-5, 2, 5, 6, 10}));
    for (long d : {-5L, 2L, 5L, 6L, 10L})
        REQUIRE(outcome(r, "T3.1", d).status == "HOLDS");
    REQUIRE(outcome(r, "T3.1", -5).witness.at("conductor").get<long>() == 20);
    REQUIRE(outcome(r, "T3.1", 5).witness.at("conductor").get<long>() == 5);
    REQUIRE(outcome(r, "T3.1", 6).witness.at("conductor").get<long>() == 24);

    // The asserted exception is contradicted exactly at positive primes.
    REQUIRE(outcome(r, "REMARK", 2).status == "FAILS");
    REQUIRE(outcome(r, "REMARK", 5).status == "FAILS");
    REQUIRE(outcome(r, "REMARK", -5).status == "OUT_OF_SCOPE");
    REQUIRE(outcome(r, "REMARK", 6).status == "OUT_OF_SCOPE");
    REQUIRE(outcome(r, "REMARK", 10).status == "OUT_OF_SCOPE");

    // Re-verify the contradicting witness: its image squares to d.
    const auto& o = outcome(r, "REMARK", 5);
    REQUIRE(o.witness.at("sqrt_image").get<std::string>() ==
            to_string(embed_sqrt(make_field(5))));
}

TEST_CASE("default run: verdict table over all configured fields",
          "[claims]") {
    auto r = run_claims();
    REQUIRE(r.config.fields.size() == 18);
    REQUIRE(r.outcomes.size() == claim_registry().size() * 18);

    std::map<std::string, std::set<long>> fails;
    for (const auto& o : r.outcomes)
        if (o.status == "FAILS") fails[o.claim_id].insert(o.d);

    REQUIRE(fails["L1.2"] == std::set<long>{-23, -14});
    REQUIRE(fails["CHAIN-1"] ==
            std::set<long>{-23, -21, -15, -14, -13, -10, -6, -5, 10});
    REQUIRE(fails["P2.2"] ==
            std::set<long>{-21, -15, -14, -13, -10, -6, -5, 10});
    REQUIRE(fails["REMARK"] == std::set<long>{2, 3, 5, 7});
    REQUIRE(fails.count("L1.3") == 0);
    REQUIRE(fails.count("UFD-IFF") == 0);
    REQUIRE(fails.count("T2.3") == 0);
    REQUIRE(fails.count("T2.4") == 0);
    REQUIRE(fails.count("T2.5") == 0);
    REQUIRE(fails.count("T3.1") == 0);

    // No claim is left undecided at the default bounds.
    for (const auto& o : r.outcomes) REQUIRE(o.status != "UNDECIDED");
}

TEST_CASE("reports are byte-stable and config-local", "[claims]") {
    auto r1 = run_claims(cfg({-23, -5}));
    auto r2 = run_claims(cfg({-5, -23}));  // order-insensitive config
    REQUIRE(render_report(r1, "json") == render_report(r2, "json"));
    REQUIRE(render_report(r1, "text") == render_report(r2, "text"));

    // Removing a field removes exactly that field's rows.
    auto r3 = run_claims(cfg({-5}));
    REQUIRE(r3.outcomes.size() == claim_registry().size());
    for (const auto& o3 : r3.outcomes) {
        const auto& o1 = outcome(r1, o3.claim_id, o3.d);
        REQUIRE(o1.status == o3.status);
        REQUIRE(o1.witness == o3.witness);
    }

    REQUIRE_THROWS_AS(render_report(r1, "yaml"), input_error);
}

TEST_CASE("text rendering is a header plus one row per outcome", "[claims]") {
    auto r = run_claims(cfg({-5}));
    auto text = render_report(r, "text");
    size_t rows = std::count(text.begin(), text.end(), '\n');
    REQUIRE(rows == claim_registry().size() + 2);  // header + rule + body
    REQUIRE(text.find("CLAIM") == 0);
    REQUIRE(text.find("WITNESS-SUMMARY") != std::string::npos);
    REQUIRE(text.find("OUT_OF_SCOPE") != std::string::npos);

    auto json = render_report(r, "json");
    auto doc = Json::parse(json);
    REQUIRE(doc.at("version").get<int>() == 1);
    REQUIRE(doc.at("config").at("fields").size() == 1);
    REQUIRE(doc.at("outcomes").size() == claim_registry().size());
}
