// qsd: batch verifier for the exact Q(q) super tensor algebra library.
// Subcommands: verify (run checks, emit a text or JSON report), list-checks.

#include "CLI11.hpp"
#include "json.hpp"

#include "qsd/checks.hpp"
#include "qsd/glmn.hpp"

#include <iostream>

using nlohmann::ordered_json;
using namespace qsd;

namespace {

int run_verify(const RunConfig& cfg, const std::vector<std::string>& names,
               const std::string& format) {
    std::vector<const CheckDef*> selected;
    if (names.empty() || (names.size() == 1 && names[0] == "all")) {
        for (const CheckDef& def : all_checks())
            if (def.matches_mode(cfg.mode))
                selected.push_back(&def);
    } else {
        for (const std::string& name : names) {
            const CheckDef* def = find_check(name);
            if (!def) {
                std::cerr << "error: unknown check '" << name << "' (see list-checks)\n";
                return 2;
            }
            selected.push_back(def);
        }
    }

    std::vector<CheckResult> results;
    std::optional<DualityReport> dims;
    for (const CheckDef* def : selected) {
        CheckResult r = def->run(cfg);
        if (r.report)
            dims = r.report;
        results.push_back(std::move(r));
    }

    bool any_fail = false;
    for (const CheckResult& r : results)
        if (r.status == "fail")
            any_fail = true;

    if (format == "json") {
        ordered_json out;
        out["params"] = {{"mode", cfg.mode ? mode_name(*cfg.mode) : "both"},
                         {"m", cfg.m.value_or(1)},
                         {"n", cfg.n.value_or(1)},
                         {"d", cfg.d.value_or(2)},
                         {"k", cfg.k.value_or(0)}};
        out["checks"] = ordered_json::array();
        for (const CheckResult& r : results)
            out["checks"].push_back(
                {{"name", r.name}, {"status", r.status}, {"detail", r.detail}});
        out["dims"] = {{"module", dims ? dims->dim_module : 0},
                       {"commutant", dims ? dims->dim_commutant : 0},
                       {"span_Adk", dims ? dims->dim_span_adk : 0},
                       {"bicommutant", dims ? dims->dim_bicommutant : 0},
                       {"hecke_image", dims ? dims->dim_hecke_image : 0}};
        std::cout << out.dump(2) << "\n";
    } else {
        for (const CheckResult& r : results) {
            std::string tag = r.status == "pass" ? "PASS" : (r.status == "fail" ? "FAIL" : "SKIP");
            std::cout << tag << " " << r.name << ": " << r.detail << "\n";
        }
        if (dims)
            std::cout << "dims: module=" << dims->dim_module
                      << " commutant=" << dims->dim_commutant
                      << " span_Adk=" << dims->dim_span_adk
                      << " bicommutant=" << dims->dim_bicommutant
                      << " hecke_image=" << dims->dim_hecke_image << "\n";
    }
    return any_fail ? 1 : 0;
}

int run_list_relations(const SuperSig& sig, const std::string& format) {
    if (sig.m + sig.n < 2) {
        std::cerr << "error: need m + n >= 2 for the presentation\n";
        return 2;
    }
    if (format == "json") {
        ordered_json out = ordered_json::array();
        for (const std::string& rel : relation_ids(sig))
            out.push_back(rel);
        std::cout << out.dump(2) << "\n";
    } else {
        for (const std::string& rel : relation_ids(sig))
            std::cout << rel << "\n";
    }
    return 0;
}

int run_list(const std::string& format) {
    if (format == "json") {
        ordered_json out = ordered_json::array();
        for (const CheckDef& def : all_checks()) {
            ordered_json modes = ordered_json::array();
            if (def.classical)
                modes.push_back("classical");
            if (def.quantum)
                modes.push_back("quantum");
            out.push_back(
                {{"name", def.name}, {"description", def.description}, {"modes", modes}});
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const CheckDef& def : all_checks()) {
            std::string modes = def.classical && def.quantum
                                    ? "classical+quantum"
                                    : (def.classical ? "classical" : "quantum");
            std::cout << def.name << " [" << modes << "] " << def.description << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of Hecke-algebra and quantum-supergroup dualities over Q(q)"};
    app.require_subcommand(1);

    CLI::App* verify = app.add_subcommand("verify", "run checks and emit a report");
    std::string mode_str, specialize_str, format = "text";
    int m = 1, n = 1, d = 2, k = 0, dim_cap = 64;
    std::vector<std::string> checks;
    verify->add_option("--mode", mode_str, "classical|quantum (default: both)")
        ->check(CLI::IsMember({"classical", "quantum"}));
    verify->add_option("--m", m, "even rank of the superspace");
    verify->add_option("--n", n, "odd rank of the superspace");
    verify->add_option("--d", d, "tensor degree");
    verify->add_option("--k", k, "rank extension (0 <= k <= d)");
    verify->add_option("--check", checks, "check name(s), or 'all'");
    verify->add_option("--specialize", specialize_str,
                       "evaluate at q = P/Q over exact rationals instead of Q(q)");
    verify->add_option("--format", format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--dim-cap", dim_cap, "skip duality checks above this module dimension");

    CLI::App* list = app.add_subcommand("list-checks", "list stable check names");
    std::string list_format = "text";
    bool list_relations = false;
    int list_m = 1, list_n = 1;
    list->add_option("--format", list_format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
    list->add_flag("--relations", list_relations,
                   "list the U_q(gl(m|n)) relation identifiers instead of check names");
    list->add_option("--m", list_m, "even rank (with --relations)");
    list->add_option("--n", list_n, "odd rank (with --relations)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (list->parsed()) {
            if (list_relations)
                return run_list_relations(SuperSig{list_m, list_n}, list_format);
            return run_list(list_format);
        }

        RunConfig cfg;
        if (verify->count("--mode"))
            cfg.mode = (mode_str == "classical") ? Mode::Classical : Mode::Quantum;
        if (verify->count("--m"))
            cfg.m = m;
        if (verify->count("--n"))
            cfg.n = n;
        if (verify->count("--d"))
            cfg.d = d;
        if (verify->count("--k"))
            cfg.k = k;
        cfg.dim_cap = dim_cap;
        if (cfg.m.value_or(1) + cfg.n.value_or(1) < 1) {
            std::cerr << "error: need m + n >= 1\n";
            return 2;
        }
        if (cfg.k.value_or(0) < 0 || cfg.k.value_or(0) > cfg.d.value_or(2)) {
            std::cerr << "error: need 0 <= k <= d\n";
            return 2;
        }
        if (verify->count("--specialize")) {
            Rational a = Rational::parse(specialize_str);
            int bound = cfg.d.value_or(3) + cfg.k.value_or(1);
            if (!specialization_generic(a, bound)) {
                std::cerr << "error: specialization q = " << a.to_string()
                          << " hits a vanishing quantum integer [j], j <= " << bound << "\n";
                return 2;
            }
            cfg.specialize = a;
        }
        return run_verify(cfg, checks, format);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
