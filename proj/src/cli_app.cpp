#include "cp2b/cli_app.hpp"

#include "cp2b/bordism.hpp"
#include "cp2b/bundles.hpp"
#include "cp2b/intlat.hpp"
#include "cp2b/kreck_stolz.hpp"
#include "cp2b/mcg_action.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <limits>
#include <optional>
#include <sstream>

namespace cp2b {

namespace {

using Json = nlohmann::ordered_json;

Json json_int(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return v.convert_to<long long>();
    return v.str();
}

Json json_action_matrix(const ActionMatrix& m) {
    return Json::array({Json::array({json_int(m.at(0, 0)), json_int(m.at(0, 1))}),
                        Json::array({json_int(m.at(1, 0)), json_int(m.at(1, 1))})});
}

Json json_group(const FinAbGroup& g) {
    Json factors = Json::array();
    for (const Int& f : g.invariant_factors()) factors.push_back(json_int(f));
    return Json{{"invariant_factors", std::move(factors)}, {"free_rank", g.free_rank()}};
}

std::string join_args(const std::vector<std::string>& args) {
    std::string out;
    for (const auto& a : args) {
        if (!out.empty()) out += ' ';
        out += a;
    }
    return out;
}

struct Report {
    std::string command;
    std::string status;  // pass / fail / info
    Json payload = Json::object();
    std::vector<std::string> text;

    int emit(std::ostream& out, bool json_mode) const {
        if (json_mode) {
            Json j{{"command", command}, {"status", status}, {"payload", payload}};
            out << j.dump(2) << '\n';
        } else {
            for (const auto& line : text) out << line << '\n';
            out << "status: " << status << '\n';
        }
        return status == "fail" ? 1 : 0;
    }
};

Report cmd_info(const std::string& command, std::optional<long long> opt_k,
                std::optional<long long> opt_l, std::optional<long long> opt_r,
                std::optional<long long> opt_milnor) {
    int selectors = (opt_r ? 1 : 0) + (opt_milnor ? 1 : 0) + (opt_k || opt_l ? 1 : 0);
    if (selectors != 1)
        throw CLI::ValidationError("info", "select exactly one of --r, --milnor, or --k with --l");
    if ((opt_k.has_value()) != (opt_l.has_value()))
        throw CLI::ValidationError("info", "--k and --l must be given together");

    RInvariant r = opt_r       ? RInvariant(*opt_r)
                   : opt_milnor ? milnor(*opt_milnor)
                                : r_of(BundleParams{*opt_k, *opt_l});
    BundleParams canon = params_for_r(r);
    Element c1 = chern_c1(canon);
    Element p1 = pontrjagin_p1(canon);
    bool spin = is_spin(r);
    ExtensionDescriptor ext = mcg_extension(r);

    Report rep;
    rep.command = command;
    rep.status = "info";
    rep.payload["r"] = r.value();
    rep.payload["k"] = canon.k;
    rep.payload["l"] = canon.l;
    rep.payload["spin"] = spin;
    rep.payload["c1"] = Json{{"s", json_int(c1.coefficient({1, 0}))},
                             {"t", json_int(c1.coefficient({0, 1}))}};
    rep.payload["p1"] = Json{{"s^2", json_int(p1.coefficient({2, 0}))},
                             {"s*t", json_int(p1.coefficient({1, 1}))}};
    Json mats = Json::array();
    for (const ActionMatrix& m : ext.quotient_matrices) mats.push_back(json_action_matrix(m));
    rep.payload["rep_image"] =
        Json{{"tag", to_string(ext.tag)}, {"matrices", std::move(mats)}};
    if (ext.torelli) {
        const TorelliResult& t = *ext.torelli;
        rep.payload["torelli"] = Json{{"cyclic_orders", Json::array({json_int(t.dehn_twist_order),
                                                                     json_int(t.disk_diffeo_order)})},
                                      {"group", json_group(t.group)}};
    } else {
        rep.payload["torelli"] = nullptr;
    }

    rep.text.push_back("r = " + std::to_string(r.value()));
    rep.text.push_back("canonical (k, l) = (" + std::to_string(canon.k) + ", " +
                       std::to_string(canon.l) + ")");
    rep.text.push_back(std::string("spin: ") + (spin ? "yes" : "no"));
    rep.text.push_back("c1 = " + c1.to_string());
    rep.text.push_back("p1 = " + p1.to_string());
    rep.text.push_back("image of R: " + to_string(ext.tag) + ", " +
                       std::to_string(ext.quotient_matrices.size()) + " matrices");
    for (const ActionMatrix& m : ext.quotient_matrices) rep.text.push_back("  " + m.to_string());
    if (ext.torelli) {
        FinAbGroup cyclic = FinAbGroup::from_cyclic_orders(
            {ext.torelli->dehn_twist_order, ext.torelli->disk_diffeo_order});
        std::ostringstream os;
        os << "Torelli group: Z_" << ext.torelli->dehn_twist_order << " ⊕ Z_"
           << ext.torelli->disk_diffeo_order
           << "  (invariant factors: " << cyclic.to_string() << ")";
        rep.text.push_back(os.str());
    } else {
        rep.text.push_back("Torelli group: not computed (stated for r in 8Z+5 only)");
    }
    return rep;
}

void require_range(long long lo, long long hi, const std::string& what) {
    if (lo > hi) throw CLI::ValidationError("verify", "empty range for " + what);
}

Report verify_lattice(const std::string& command, long long lmin, long long lmax) {
    require_range(lmin, lmax, "--l-min/--l-max");
    Report rep;
    rep.command = command;
    long long cases = 0;
    std::vector<std::string> failures;
    for (long long l = lmin; l <= lmax; ++l) {
        ++cases;
        if (!lattice_equal(char_table(l), indeterminacy_lattice_closed_form(l)))
            failures.push_back("l = " + std::to_string(l));
    }
    rep.status = failures.empty() ? "pass" : "fail";
    rep.payload = Json{{"suite", "lattice"},
                       {"l_min", lmin},
                       {"l_max", lmax},
                       {"cases", cases},
                       {"failures", failures}};
    rep.text.push_back("suite: lattice (indeterminacy lattice vs closed form)");
    rep.text.push_back("cases: " + std::to_string(cases));
    for (const auto& f : failures) rep.text.push_back("FAIL " + f);
    return rep;
}

Report verify_table(const std::string& command, long long lmin, long long lmax) {
    require_range(lmin, lmax, "--l-min/--l-max");
    Report rep;
    rep.command = command;
    long long cases = 0;
    std::vector<std::string> failures;
    for (long long l = lmin; l <= lmax; ++l) {
        ++cases;
        if (char_table(l) != char_table_reference(l)) {
            failures.push_back("l = " + std::to_string(l) + ": table mismatch");
            continue;
        }
        auto [alpha, beta] = alpha_beta(l);
        if (!restrict_to_bundle(alpha, l).is_zero() || !restrict_to_bundle(beta, l).is_zero()) {
            failures.push_back("l = " + std::to_string(l) + ": kernel classes do not restrict to 0");
            continue;
        }
        // bridge: <alpha^2, b5> = -2l
        if (pair_row(char_columns(l)[0], sign_kernel_basis()[4]) != Int(-2) * l)
            failures.push_back("l = " + std::to_string(l) + ": b5 pairing != -2l");
    }
    rep.status = failures.empty() ? "pass" : "fail";
    std::vector<std::string> notes{
        "middle entry of row b2 is -12: the xy-coefficient of alpha is -1, so tables "
        "printing +12 use the opposite sign for the b2 basis vector (same lattice)"};
    rep.payload = Json{{"suite", "table"}, {"l_min", lmin},   {"l_max", lmax},
                       {"cases", cases},   {"notes", notes},  {"failures", failures}};
    rep.text.push_back("suite: table (characteristic-number table, kernel classes, b5 bridge)");
    rep.text.push_back("cases: " + std::to_string(cases));
    for (const auto& n : notes) rep.text.push_back("note: " + n);
    for (const auto& f : failures) rep.text.push_back("FAIL " + f);
    return rep;
}

Report verify_bordism(const std::string& command) {
    AppendixReport ap = verify_appendix();
    Report rep;
    rep.command = command;
    rep.status = ap.passed() ? "pass" : "fail";
    rep.payload = Json{{"suite", "bordism"},
                       {"rows_match", ap.rows_match},
                       {"tables_equal", ap.tables_equal},
                       {"kernel_matches", ap.kernel_matches},
                       {"notes", ap.notes},
                       {"failures", ap.failures}};
    rep.text.push_back("suite: bordism (generator rows, table spans, signature-zero kernel)");
    rep.text.push_back(std::string("generator rows match reference: ") +
                       (ap.rows_match ? "yes" : "NO"));
    rep.text.push_back(std::string("tables span equal lattices: ") +
                       (ap.tables_equal ? "yes" : "NO"));
    rep.text.push_back(std::string("signature-zero kernel matches b1..b9: ") +
                       (ap.kernel_matches ? "yes" : "NO"));
    for (const auto& n : ap.notes) rep.text.push_back("note: " + n);
    for (const auto& f : ap.failures) rep.text.push_back("FAIL " + f);
    return rep;
}

Report verify_automorphisms(const std::string& command, std::optional<long long> k,
                            std::optional<long long> l, std::optional<long long> bound,
                            long long kmin, long long kmax, long long lmin, long long lmax) {
    Report rep;
    rep.command = command;
    if (k.has_value() != l.has_value())
        throw CLI::ValidationError("verify", "--k and --l must be given together");

    std::vector<std::string> failures;
    long long cases = 0;
    if (k) {
        long long b = bound ? *bound : std::max(std::abs(*k) + 3, 1LL);
        BundleParams p{*k, *l};
        AutomorphismSet classified = rep_image(p);
        AutomorphismSet searched = brute_force_automorphisms(p, b);
        cases = 1;
        if (classified != searched)
            failures.push_back("(k, l) = (" + std::to_string(*k) + ", " + std::to_string(*l) +
                               "), bound " + std::to_string(b));
        Json mats = Json::array();
        for (const ActionMatrix& m : searched) mats.push_back(json_action_matrix(m));
        rep.payload = Json{{"suite", "automorphisms"},
                           {"k", *k},
                           {"l", *l},
                           {"bound", b},
                           {"matrices_found", searched.size()},
                           {"matrices", std::move(mats)},
                           {"failures", failures}};
        rep.text.push_back("suite: automorphisms (classifier vs exhaustive search)");
        rep.text.push_back("(k, l) = (" + std::to_string(*k) + ", " + std::to_string(*l) +
                           "), bound " + std::to_string(b));
        rep.text.push_back(std::to_string(searched.size()) + " matrices found");
        for (const ActionMatrix& m : searched) rep.text.push_back("  " + m.to_string());
    } else {
        require_range(kmin, kmax, "--k-min/--k-max");
        require_range(lmin, lmax, "--l-min/--l-max");
        for (long long kk = kmin; kk <= kmax; ++kk)
            for (long long ll = lmin; ll <= lmax; ++ll) {
                ++cases;
                long long b = bound ? *bound : std::max(std::abs(kk) + 3, 1LL);
                BundleParams p{kk, ll};
                if (rep_image(p) != brute_force_automorphisms(p, b))
                    failures.push_back("(k, l) = (" + std::to_string(kk) + ", " +
                                       std::to_string(ll) + "), bound " + std::to_string(b));
            }
        rep.payload = Json{{"suite", "automorphisms"}, {"k_min", kmin}, {"k_max", kmax},
                           {"l_min", lmin},            {"l_max", lmax}, {"cases", cases},
                           {"failures", failures}};
        rep.text.push_back("suite: automorphisms (classifier vs exhaustive search)");
        rep.text.push_back("cases: " + std::to_string(cases));
    }
    rep.status = failures.empty() ? "pass" : "fail";
    for (const auto& f : failures) rep.text.push_back("FAIL " + f);
    return rep;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    std::string command = join_args(args);

    CLI::App app{"exact invariants of sphere bundles over the complex projective plane"};
    app.name("cp2b");
    app.require_subcommand(1);
    app.fallthrough();  // allow --json after the subcommand name

    bool json_mode = false;
    app.add_flag("--json", json_mode, "emit a single JSON object instead of text");

    auto* info = app.add_subcommand(
        "info", "classification data, characteristic classes and mapping-class-group "
                "invariants of one bundle");
    std::optional<long long> opt_k, opt_l, opt_r, opt_milnor;
    info->add_option("--k", opt_k, "first Chern coefficient of gamma_{k,l}");
    info->add_option("--l", opt_l, "second Chern coefficient of gamma_{k,l}");
    info->add_option("--r", opt_r, "first Pontrjagin number of the rank-3 bundle");
    info->add_option("--milnor", opt_milnor, "generalized Milnor hypersurface index (k >= 1)");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    verify->add_option("suite", suite, "one of: lattice, table, bordism, automorphisms")
        ->required()
        ->check(CLI::IsMember({"lattice", "table", "bordism", "automorphisms"}));
    long long lmin = -100, lmax = 100, kmin = -3, kmax = 3;
    std::optional<long long> vk, vl, vbound;
    verify->add_option("--l-min", lmin, "lower end of the l sweep");
    verify->add_option("--l-max", lmax, "upper end of the l sweep");
    verify->add_option("--k-min", kmin, "lower end of the k sweep (automorphisms)");
    verify->add_option("--k-max", kmax, "upper end of the k sweep (automorphisms)");
    verify->add_option("--k", vk, "single k (automorphisms)");
    verify->add_option("--l", vl, "single l (automorphisms)");
    verify->add_option("--bound", vbound, "entry bound for the exhaustive search");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);

        Report rep;
        if (*info) {
            rep = cmd_info(command, opt_k, opt_l, opt_r, opt_milnor);
        } else {
            bool lmin_set = verify->count("--l-min") > 0;
            bool lmax_set = verify->count("--l-max") > 0;
            if (suite == "lattice") {
                rep = verify_lattice(command, lmin, lmax);
            } else if (suite == "table") {
                rep = verify_table(command, lmin_set ? lmin : -27, lmax_set ? lmax : 27);
            } else if (suite == "bordism") {
                rep = verify_bordism(command);
            } else {
                long long almin = lmin_set ? lmin : -3, almax = lmax_set ? lmax : 3;
                rep = verify_automorphisms(command, vk, vl, vbound, kmin, kmax, almin, almax);
            }
        }
        return rep.emit(out, json_mode);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace cp2b
