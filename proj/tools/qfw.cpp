// Command-line front door for the quadratic-field workbench.  Every library
// capability is exposed as a subcommand with both a human-readable text form
// and a byte-stable JSON form (--format json).
//
// Exit codes: 0 success, 1 invalid input or usage, 2 broken internal
// invariant.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qfw/claims.hpp"
#include "qfw/splitting.hpp"

using namespace qfw;

namespace {

// d may arrive as `--d=-5` or as a positional after `--` (`field -- -5`).
struct DArg {
    long flag_value = 0;
    long pos_value = 0;
    CLI::Option* flag = nullptr;
    CLI::Option* pos = nullptr;

    void attach(CLI::App* sub) {
        flag = sub->add_option("--d", flag_value,
                               "squarefree field generator d");
        pos = sub->add_option("radicand", pos_value,
                              "squarefree field generator d (use `-- -5` "
                              "for negative values)");
    }
    long value() const {
        if (flag->count() && pos->count())
            throw CLI::ValidationError("d given both as option and position");
        if (flag->count()) return flag_value;
        if (pos->count()) return pos_value;
        throw CLI::RequiredError("d");
    }
};

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    size_t start = 0;
    while (start <= s.size()) {
        size_t comma = s.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

// Accepts either a bracketed basis literal "[a b; 0 c]/den" or a
// comma-separated list of generators like "2, 1 + w".
FractionalIdeal ideal_from_text(const QuadraticField& F,
                                const std::string& text) {
    size_t first = text.find_first_not_of(" \t");
    if (first == std::string::npos)
        throw parse_error("ideal: empty description");
    if (text[first] == '[') return parse_ideal(text, F);
    std::vector<FieldElement> gens;
    for (const std::string& part : split_commas(text))
        gens.push_back(parse_element(F, part));
    return ideal_from_generators(F, gens);
}

std::string structure_name(const std::vector<Int>& divisors) {
    if (divisors.empty()) return "trivial";
    std::string s;
    for (size_t i = 0; i < divisors.size(); ++i) {
        if (i) s += " x ";
        s += "C" + divisors[i].get_str();
    }
    return s;
}

std::string minimal_polynomial(const QuadraticField& F) {
    std::string s = "x^2";
    if (F.omega_trace() == 1) s += " - x";
    Int n0 = F.omega_norm();
    if (n0 > 0) s += " + " + n0.get_str();
    if (n0 < 0) s += " - " + Int(-n0).get_str();
    return s;
}

long env_bound(long fallback) {
    if (const char* env = std::getenv("WORKBENCH_BOUND")) {
        long v = std::atol(env);
        if (v > 0) return v;
    }
    return fallback;
}

void emit(const std::string& format, const Json& doc,
          const std::string& text) {
    if (format == "json")
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
}

// ---- subcommand bodies ----

void run_field(long d, const std::string& format) {
    QuadraticField F = make_field(Int(d));
    Int absD = F.D < 0 ? Int(-F.D) : F.D;
    std::vector<Int> ram = prime_divisors(absD);
    Rat mk = minkowski_bound(F);

    Json doc;
    doc["d"] = d;
    doc["discriminant"] = F.D.get_str();
    doc["ring_generator"] =
        F.half ? "(1 + sqrt(" + F.d.get_str() + "))/2"
               : "sqrt(" + F.d.get_str() + ")";
    doc["minimal_polynomial"] = minimal_polynomial(F);
    Json ramj = Json::array();
    for (const Int& p : ram) ramj.push_back(p.get_str());
    doc["ramified_primes"] = ramj;
    doc["minkowski_bound"] = rat_str(mk);
    doc["minkowski_floor"] = rat_floor(mk).get_str();

    std::string text;
    text += "field = " + field_name(F) + "\n";
    text += "discriminant = " + F.D.get_str() + "\n";
    text += "ring generator w = " +
            doc["ring_generator"].get<std::string>() + "\n";
    text += "minimal polynomial of w = " + minimal_polynomial(F) + "\n";
    text += "ramified primes =";
    for (const Int& p : ram) text += " " + p.get_str();
    text += "\n";
    text += "minkowski bound = " + rat_str(mk) + " (floor " +
            rat_floor(mk).get_str() + ")\n";
    emit(format, doc, text);
}

void run_ideal(long d, const std::string& gens, bool dual, bool norm,
               bool principal, bool order, const std::string& format) {
    QuadraticField F = make_field(Int(d));
    FractionalIdeal I = ideal_from_text(F, gens);

    Json doc;
    doc["d"] = d;
    doc["ideal"] = to_string(I);
    std::string text = "ideal = " + to_string(I) + "\n";
    if (dual) {
        FractionalIdeal Id = ideal_dual(I);
        doc["dual"] = to_string(Id);
        text += "dual = " + to_string(Id) + "\n";
    }
    if (norm) {
        doc["norm"] = rat_str(ideal_norm(I));
        text += "norm = " + rat_str(ideal_norm(I)) + "\n";
    }
    if (principal) {
        auto g = ideal_generator(I);
        doc["principal"] = g.has_value();
        if (g) {
            doc["generator"] = to_string(*g);
            text += "principal = yes, generator " + to_string(*g) + "\n";
        } else {
            text += "principal = no\n";
        }
    }
    if (order) {
        Int n = ideal_class_order(I);
        doc["class_order"] = n.get_str();
        text += "class order = " + n.get_str() + "\n";
    }
    emit(format, doc, text);
}

void run_classgroup(long d, const std::string& format) {
    QuadraticField F = make_field(Int(d));
    ClassGroup CG = compute_class_group(F);

    Json doc;
    doc["d"] = d;
    doc["h"] = CG.h.get_str();
    doc["structure"] = structure_name(CG.divisors);
    Json divs = Json::array();
    for (const Int& m : CG.divisors) divs.push_back(m.get_str());
    doc["divisors"] = divs;
    Json gens = Json::array();
    std::string gtext;
    for (size_t i = 0; i < CG.generators.size(); ++i) {
        Json g;
        g["module"] = to_string(CG.generators[i]);
        g["order"] = CG.divisors[i].get_str();
        gens.push_back(g);
        gtext += "generator = " + to_string(CG.generators[i]) + " (order " +
                 CG.divisors[i].get_str() + ")\n";
    }
    doc["generators"] = gens;

    std::string text;
    text += "h = " + CG.h.get_str() + "\n";
    text += "structure = " + structure_name(CG.divisors) + "\n";
    text += gtext;
    emit(format, doc, text);
}

void run_sclass(long d, const std::vector<long>& primes,
                const std::string& format) {
    QuadraticField F = make_field(Int(d));
    ClassGroup CG = compute_class_group(F);
    std::vector<Int> S;
    for (long p : primes) S.push_back(Int(p));
    SClassGroup SC = compute_s_class_group(CG, S);

    Json doc;
    doc["d"] = d;
    Json pj = Json::array();
    for (const Int& p : SC.S) pj.push_back(p.get_str());
    doc["inverted_primes"] = pj;
    doc["h"] = CG.h.get_str();
    doc["h_S"] = SC.h_S.get_str();
    doc["structure"] = structure_name(SC.divisors);

    std::string text;
    text += "inverted primes =";
    for (const Int& p : SC.S) text += " " + p.get_str();
    text += "\n";
    text += "h = " + CG.h.get_str() + "\n";
    text += "h_S = " + SC.h_S.get_str() + "\n";
    text += "structure = " + structure_name(SC.divisors) + "\n";
    emit(format, doc, text);
}

void run_witness(long d, long bound, const std::string& format) {
    QuadraticField F = make_field(Int(d));
    ClassGroup CG = compute_class_group(F);
    auto w = find_factorization_witness(F, bound);

    Json doc;
    doc["d"] = d;
    doc["class_number"] = CG.h.get_str();
    doc["prime_bound"] = bound;
    doc["found"] = w.has_value();
    std::string text = "class number = " + CG.h.get_str() + "\n";
    if (w) {
        doc["p"] = w->p.get_str();
        doc["q"] = w->q.get_str();
        doc["x1"] = to_string(w->x1);
        doc["x2"] = to_string(w->x2);
        text += w->p.get_str() + " * " + w->q.get_str() + " = (" +
                to_string(w->x1) + ") * (" + to_string(w->x2) + ")\n";
        text += "all four factors are irreducible; "
                "the factorizations are essentially different\n";
    } else {
        text += "no double factorization with prime product below " +
                std::to_string(bound) + "\n";
    }
    emit(format, doc, text);
}

void run_capitulate(long d, const std::string& ideal_text, long bound,
                    const std::string& format) {
    QuadraticField F = make_field(Int(d));
    FractionalIdeal M = ideal_from_text(F, ideal_text);
    ExtensionOrder O = build_extension_order(M);
    CapitulationSearch search = find_capitulation_generator(O, M, bound);

    Json doc;
    doc["d"] = d;
    doc["module"] = to_string(M);
    doc["class_order"] = O.ring.n;
    doc["radical"] = "x^" + std::to_string(O.ring.n) + " = " +
                     to_string(O.ring.alpha);
    doc["order_index"] = O.index.get_str();
    doc["order_discriminant"] = O.disc.get_str();
    doc["found"] = search.found;
    doc["bound"] = search.bound;

    std::string text;
    text += "module = " + to_string(M) + "\n";
    text += "class order = " + std::to_string(O.ring.n) + "\n";
    text += "extension: adjoin x with x^" + std::to_string(O.ring.n) +
            " = " + to_string(O.ring.alpha) + "\n";
    text += "maximal order index = " + O.index.get_str() +
            ", discriminant = " + O.disc.get_str() + "\n";
    if (search.found) {
        doc["generator"] = to_string(O.ring, search.generator);
        doc["generator_norm"] = rat_str(ext_norm(O.ring, search.generator));
        doc["shell"] = search.shell;
        text += "extended module is principal: generator = " +
                to_string(O.ring, search.generator) + "\n";
        text += "generator norm = " +
                rat_str(ext_norm(O.ring, search.generator)) +
                " (found at shell " + std::to_string(search.shell) + ")\n";
    } else {
        text += "no generator found within shell bound " +
                std::to_string(search.bound) + "\n";
    }
    emit(format, doc, text);
}

void run_gauss(long p, const std::string& format) {
    CycInt g = gauss_sum(Int(p));
    long sign = (p % 4 == 1) ? 1 : -1;
    CycInt expect = cyc_from_int(g.n, Int(sign * p));
    if (cyc_mul(g, g) != expect)
        throw internal_error("gauss: square does not match (-1)^((p-1)/2) p");

    Json doc;
    doc["p"] = p;
    doc["conductor"] = g.n;
    Json coeffs = Json::array();
    for (const Int& c : g.c) coeffs.push_back(c.get_str());
    doc["coeffs"] = coeffs;
    doc["den"] = g.den.get_str();
    doc["square"] = std::to_string(sign * p);

    std::string text;
    text += "g = " + to_string(g) + "\n";
    text += "g^2 = " + std::to_string(sign * p) + "\n";
    text += "conductor = " + std::to_string(g.n) + "\n";
    emit(format, doc, text);
}

void run_sqrt_embed(long d, const std::string& format) {
    QuadraticField F = make_field(Int(d));
    CycInt s = embed_sqrt(F);
    CycInt w = embed_omega(F);
    bool ok = cyc_mul(s, s) == cyc_from_int(s.n, F.d);
    if (!ok) throw internal_error("sqrt-embed: square check failed");

    Json doc;
    doc["d"] = d;
    doc["conductor"] = s.n;
    Json coeffs = Json::array();
    for (const Int& c : s.c) coeffs.push_back(c.get_str());
    doc["coeffs"] = coeffs;
    doc["den"] = s.den.get_str();
    doc["sqrt_image"] = to_string(s);
    doc["ring_generator_image"] = to_string(w);
    doc["verified"] = true;

    std::string text;
    text += "conductor = " + std::to_string(s.n) + "\n";
    text += "sqrt(" + F.d.get_str() + ") = " + to_string(s) + "\n";
    text += "ring generator w = " + to_string(w) + "\n";
    text += "verified: image squares back to " + F.d.get_str() + "\n";
    emit(format, doc, text);
}

void run_claims_cmd(const std::vector<long>& fields,
                    const std::string& config_path,
                    const std::string& format) {
    ClaimConfig cc = default_claim_config();
    cc.capitulation_bound = env_bound(cc.capitulation_bound);
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw input_error("claims: cannot read " + config_path);
        Json doc;
        try {
            doc = Json::parse(in);
            cc.fields = doc.at("fields").get<std::vector<long>>();
            if (doc.contains("bounds")) {
                const Json& b = doc["bounds"];
                if (b.contains("witness_prime_bound"))
                    cc.witness_prime_bound =
                        b["witness_prime_bound"].get<long>();
                if (b.contains("capitulation_bound"))
                    cc.capitulation_bound =
                        b["capitulation_bound"].get<long>();
            }
        } catch (const Json::exception& e) {
            throw parse_error("claims: bad config file: " +
                              std::string(e.what()));
        }
    } else if (!fields.empty()) {
        cc.fields = fields;
    }
    ClaimReport report = run_claims(cc);
    std::cout << render_report(report, format);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for quadratic fields Q(sqrt(d))"};
    app.require_subcommand(1);

    std::string format = "text";
    auto attach_format = [&format](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    // field <d>
    auto* field_cmd = app.add_subcommand(
        "field", "discriminant, ring generator, ramified primes, bound");
    DArg field_d;
    field_d.attach(field_cmd);
    attach_format(field_cmd);
    field_cmd->callback([&] { run_field(field_d.value(), format); });

    // ideal <d> <gens...>
    auto* ideal_cmd = app.add_subcommand(
        "ideal", "canonical form of the module spanned by the generators");
    std::vector<std::string> ideal_args;
    long ideal_dflag = 0;
    auto* ideal_dopt = ideal_cmd->add_option("--d", ideal_dflag,
                                             "squarefree field generator d");
    ideal_cmd->add_option("args", ideal_args,
                          "d (unless --d is used) followed by generators");
    bool f_dual = false, f_norm = false, f_principal = false, f_order = false;
    ideal_cmd->add_flag("--dual", f_dual, "also print the dual module");
    ideal_cmd->add_flag("--norm", f_norm, "also print the norm");
    ideal_cmd->add_flag("--principal", f_principal,
                        "also decide principality");
    ideal_cmd->add_flag("--order", f_order, "also print the class order");
    attach_format(ideal_cmd);
    ideal_cmd->callback([&] {
        std::vector<std::string> args = ideal_args;
        long d;
        if (ideal_dopt->count()) {
            d = ideal_dflag;
        } else {
            if (args.empty()) throw CLI::RequiredError("d");
            try {
                size_t used = 0;
                d = std::stol(args.front(), &used);
                if (used != args.front().size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw parse_error("ideal: expected an integer d, got '" +
                                  args.front() + "'");
            }
            args.erase(args.begin());
        }
        if (args.empty())
            throw parse_error("ideal: no generators given");
        std::string joined;
        for (size_t i = 0; i < args.size(); ++i)
            joined += (i ? "," : "") + args[i];
        run_ideal(d, joined, f_dual, f_norm, f_principal, f_order, format);
    });

    // classgroup <d>
    auto* cg_cmd = app.add_subcommand(
        "classgroup", "class number, group structure, generators");
    DArg cg_d;
    cg_d.attach(cg_cmd);
    attach_format(cg_cmd);
    cg_cmd->callback([&] { run_classgroup(cg_d.value(), format); });

    // sclass <d> --primes p,q,...
    auto* sclass_cmd = app.add_subcommand(
        "sclass", "class group after inverting the listed primes");
    DArg sclass_d;
    sclass_d.attach(sclass_cmd);
    std::vector<long> sclass_primes;
    sclass_cmd->add_option("--primes", sclass_primes, "primes to invert")
        ->delimiter(',')
        ->required();
    attach_format(sclass_cmd);
    sclass_cmd->callback(
        [&] { run_sclass(sclass_d.value(), sclass_primes, format); });

    // witness <d> [--bound B]
    auto* witness_cmd = app.add_subcommand(
        "witness", "two essentially different factorizations of some p*q");
    DArg witness_d;
    witness_d.attach(witness_cmd);
    long witness_bound = 50;
    witness_cmd->add_option("--bound", witness_bound,
                            "largest prime tried (default 50)");
    attach_format(witness_cmd);
    witness_cmd->callback(
        [&] { run_witness(witness_d.value(), witness_bound, format); });

    // capitulate <d> --ideal <gens> [--bound B]
    auto* cap_cmd = app.add_subcommand(
        "capitulate",
        "make a class principal in a radical extension of matching degree");
    DArg cap_d;
    cap_d.attach(cap_cmd);
    std::string cap_ideal;
    cap_cmd
        ->add_option("--ideal", cap_ideal,
                     "module: \"[a b; 0 c]\" or generators \"2, 1 + w\"")
        ->required();
    long cap_bound = 0;
    cap_cmd->add_option(
        "--bound", cap_bound,
        "coefficient shell bound (default: WORKBENCH_BOUND or 50)");
    attach_format(cap_cmd);
    cap_cmd->callback(
        [&] { run_capitulate(cap_d.value(), cap_ideal, cap_bound, format); });

    // gauss <p>
    auto* gauss_cmd = app.add_subcommand(
        "gauss", "quadratic Gauss sum at an odd prime, with its square");
    long gauss_p = 0;
    gauss_cmd->add_option("p", gauss_p, "odd prime")->required();
    attach_format(gauss_cmd);
    gauss_cmd->callback([&] { run_gauss(gauss_p, format); });

    // sqrt-embed <d>
    auto* embed_cmd = app.add_subcommand(
        "sqrt-embed", "realize sqrt(d) among roots of unity of conductor |D|");
    DArg embed_d;
    embed_d.attach(embed_cmd);
    attach_format(embed_cmd);
    embed_cmd->callback([&] { run_sqrt_embed(embed_d.value(), format); });

    // claims [--fields list | --config file] [--format json|text]
    auto* claims_cmd = app.add_subcommand(
        "claims", "verdict per (claim, field) with witnesses");
    std::vector<long> claims_fields;
    auto* fields_opt =
        claims_cmd
            ->add_option("--fields", claims_fields,
                         "comma-separated d list (default: built-in config)")
            ->delimiter(',');
    std::string claims_config;
    claims_cmd
        ->add_option("--config", claims_config,
                     "JSON config file {fields: [...], bounds: {...}}")
        ->excludes(fields_opt);
    attach_format(claims_cmd);
    claims_cmd->callback(
        [&] { run_claims_cmd(claims_fields, claims_config, format); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: " << e.what() << "\n\n";
        std::cerr << app.help();
        return 1;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
